#pragma once

// A rational function as an expanded numerator over a product of canonical
// denominator factors. Sums run over the multiset lcm of the denominators,
// so a sum of factored values never needs a gcd.

#include <map>
#include <vector>

#include "maclab/factored_rational.hpp"

namespace maclab {

class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Poly num) : num_(std::move(num)) {}

    static RationalFunction zero(const RingPtr& ring) { return RationalFunction(Poly(ring)); }

    static RationalFunction from(const FactoredRational& r) {
        if (r.is_zero()) return zero(r.ring());
        std::vector<Poly> top{Poly::monomial(r.ring(), r.unit_monomial(), r.coefficient())};
        RationalFunction out;
        for (const auto& [f, k] : r.factors()) {
            if (k > 0) {
                for (int i = 0; i < k; ++i) top.push_back(f);
            } else {
                out.den_[f] = -k;
            }
        }
        out.num_ = product(r.ring(), std::move(top));
        return out;
    }

    const RingPtr& ring() const { return num_.ring(); }
    const Poly& numerator() const { return num_; }
    const std::map<Poly, int>& denominator_factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Poly denominator() const {
        std::vector<Poly> parts;
        for (const auto& [f, k] : den_)
            for (int i = 0; i < k; ++i) parts.push_back(f);
        return product(ring(), std::move(parts));
    }

    FactoredRational to_factored() const {
        FactoredRational r = FactoredRational::from_poly(num_);
        for (const auto& [f, k] : den_) r.mul_factor(f, -k);
        return r;
    }

    // Sum over the lcm of all denominators.
    static RationalFunction sum(const RingPtr& ring, const std::vector<RationalFunction>& xs) {
        RationalFunction out = zero(ring);
        for (const auto& x : xs)
            for (const auto& [f, k] : x.den_) out.den_[f] = std::max(out.den_[f], k);
        for (const auto& x : xs) {
            if (x.is_zero()) continue;
            std::vector<Poly> parts{x.num_};
            for (const auto& [f, k] : out.den_) {
                auto it = x.den_.find(f);
                int have = it == x.den_.end() ? 0 : it->second;
                for (int i = have; i < k; ++i) parts.push_back(f);
            }
            out.num_ = out.num_ + product(ring, std::move(parts));
        }
        if (out.num_.is_zero()) out.den_.clear();
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        require_same_ring(a.ring(), b.ring());
        return sum(a.ring(), {a, b});
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + b.scaled(-1);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        RationalFunction r(a.num_ * b.num_);
        r.den_ = a.den_;
        for (const auto& [f, k] : b.den_) r.den_[f] += k;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const Poly& p) {
        RationalFunction r(a.num_ * p);
        r.den_ = a.den_;
        return r;
    }
    RationalFunction scaled(const Rational& c, const Monomial& m = Monomial{}) const {
        RationalFunction r(num_.scaled(c, m));
        r.den_ = den_;
        return r;
    }

    // Replaces the numerator by num / d (exact), keeping the denominator.
    RationalFunction numerator_divided(const Poly& d) const {
        RationalFunction r(num_.divide_exact(d));
        r.den_ = den_;
        return r;
    }
    RationalFunction with_numerator(Poly num) const {
        RationalFunction r(std::move(num));
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

    std::string to_string() const {
        if (den_.empty()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + to_factored_den_string() + ")";
    }

private:
    Poly num_;
    std::map<Poly, int> den_;

    std::string to_factored_den_string() const {
        std::string s;
        for (const auto& [f, k] : den_) {
            if (!s.empty()) s += " * ";
            s += "(" + f.to_string() + ")";
            if (k != 1) s += "^" + std::to_string(k);
        }
        return s;
    }
};

}  // namespace maclab
