#pragma once

// Rational functions kept as  coef * monomial * prod(factor^multiplicity).
//
// Every stored factor is in canonical form: an honest polynomial (no
// variable divides it), primitive with integer coefficients and a positive
// leading coefficient. Two structurally equal factors therefore cancel by
// multiset arithmetic, and no multivariate gcd is ever needed.

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maclab/laurent_polynomial.hpp"

namespace maclab {

namespace detail {

// Splits p = c * m * f with f canonical. Requires p nonzero and not a monomial.
inline Poly canonical_factor(const Poly& p, Rational& c, Monomial& m) {
    m = p.min_exponents();
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    c = Rational(num_gcd, den_lcm);
    c.canonicalize();
    if (p.leading().coef < 0) c = -c;
    return p.scaled(1 / c, m.inverse());
}

}  // namespace detail

class FactoredRational {
public:
    using FactorMap = std::map<Poly, int>;

    FactoredRational() = default;
    explicit FactoredRational(RingPtr ring, const Rational& c = 1, const Monomial& m = Monomial{})
        : ring_(std::move(ring)), coef_(c), mono_(m) {
        coef_.canonicalize();
    }

    static FactoredRational one(RingPtr ring) { return FactoredRational(std::move(ring)); }
    static FactoredRational zero(RingPtr ring) { return FactoredRational(std::move(ring), 0); }

    // value = p^multiplicity
    static FactoredRational from_poly(const Poly& p, int multiplicity = 1) {
        FactoredRational r(p.ring());
        r.mul_factor(p, multiplicity);
        return r;
    }

    const RingPtr& ring() const { return ring_; }
    const Rational& coefficient() const { return coef_; }
    const Monomial& unit_monomial() const { return mono_; }
    const FactorMap& factors() const { return factors_; }
    bool is_zero() const { return coef_ == 0; }

    // Multiplies in p^k, canonicalizing p.
    FactoredRational& mul_factor(const Poly& p, int k) {
        if (k == 0 || is_zero()) return *this;
        if (p.is_zero()) {
            if (k < 0) throw DivisionByZero("zero factor in a denominator");
            *this = zero(ring_);
            return *this;
        }
        if (p.is_monomial()) {
            coef_ *= maclab::pow(p.leading().coef, k);
            mono_ *= p.leading().mono.pow(k);
            return *this;
        }
        Rational c;
        Monomial m;
        Poly f = detail::canonical_factor(p, c, m);
        coef_ *= maclab::pow(c, k);
        mono_ *= m.pow(k);
        auto it = factors_.find(f);
        if (it == factors_.end()) {
            factors_.emplace(std::move(f), k);
        } else if ((it->second += k) == 0) {
            factors_.erase(it);
        }
        return *this;
    }

    FactoredRational& operator*=(const FactoredRational& o) {
        require_same_ring(ring_, o.ring_);
        if (o.is_zero()) return *this = zero(ring_);
        if (is_zero()) return *this;
        coef_ *= o.coef_;
        mono_ *= o.mono_;
        for (const auto& [f, k] : o.factors_) {
            auto it = factors_.find(f);
            if (it == factors_.end()) {
                factors_.emplace(f, k);
            } else if ((it->second += k) == 0) {
                factors_.erase(it);
            }
        }
        return *this;
    }
    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }

    FactoredRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        FactoredRational r(ring_, 1 / coef_, mono_.inverse());
        for (const auto& [f, k] : factors_) r.factors_.emplace(f, -k);
        return r;
    }
    FactoredRational& operator/=(const FactoredRational& o) { return *this *= o.inverse(); }
    friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }

    FactoredRational pow(int k) const {
        if (k == 0) return one(ring_);
        if (is_zero()) {
            if (k < 0) throw DivisionByZero("zero to a negative power");
            return *this;
        }
        FactoredRational r(ring_, maclab::pow(coef_, k), mono_.pow(k));
        for (const auto& [f, m] : factors_) r.factors_.emplace(f, m * k);
        return r;
    }

    // Applies a monomial substitution and re-canonicalizes every factor.
    FactoredRational substitute(const RingPtr& target, const std::vector<Monomial>& images) const {
        if (is_zero()) return zero(target);
        FactoredRational r(target, coef_);
        r.mul_factor(Poly::monomial(ring_, mono_).substitute(target, images), 1);
        for (const auto& [f, k] : factors_) {
            Poly g = f.substitute(target, images);
            if (g.is_zero() && k < 0)
                throw DivisionByZero("substitution annihilates a denominator factor");
            r.mul_factor(g, k);
            if (r.is_zero()) return r;
        }
        return r;
    }

    // Expanded products of the positive / negative parts; the value is
    // numerator() / denominator().
    Poly numerator() const {
        std::vector<Poly> parts{Poly::monomial(ring_, mono_, coef_)};
        for (const auto& [f, k] : factors_)
            for (int i = 0; i < k; ++i) parts.push_back(f);
        return product(ring_, std::move(parts));
    }
    Poly denominator() const {
        std::vector<Poly> parts;
        for (const auto& [f, k] : factors_)
            for (int i = 0; i < -k; ++i) parts.push_back(f);
        return product(ring_, std::move(parts));
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (is_zero()) return 0;
        Rational v = coef_ * Poly::monomial(ring_, mono_).evaluate(point);
        for (const auto& [f, k] : factors_) {
            Rational x = f.evaluate(point);
            if (x == 0 && k < 0) throw DivisionByZero("denominator vanishes at evaluation point");
            v *= maclab::pow(x, k);
        }
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        os << Poly::monomial(ring_, mono_, coef_).to_string();
        for (const auto& [f, k] : factors_) {
            os << " * (" << f.to_string() << ")";
            if (k != 1) os << "^" << k;
        }
        return os.str();
    }

private:
    RingPtr ring_;
    Rational coef_ = 1;
    Monomial mono_;
    FactorMap factors_;
};

using Factored = FactoredRational;

// Certified equality: cancels common factors structurally, then compares the
// cross-multiplied expansions of what remains.
inline bool rational_eq(const FactoredRational& a, const FactoredRational& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    FactoredRational r = a / b;
    if (r.factors().empty()) return r.coefficient() == 1 && r.unit_monomial().is_one();
    return r.numerator() == r.denominator();
}

// Divides the expanded numerator by every denominator factor that divides
// it, so a coefficient equal to 1 prints as 1.
inline FactoredRational reduced(const FactoredRational& r) {
    if (r.is_zero()) return r;
    Poly num = r.numerator();
    FactoredRational out = FactoredRational::one(r.ring());
    for (const auto& [f, k] : r.factors()) {
        if (k > 0) continue;
        int left = -k;
        while (left > 0 && f.divides(num)) {
            num = num.divide_exact(f);
            --left;
        }
        if (left > 0) out.mul_factor(f, -left);
    }
    return out * FactoredRational::from_poly(num);
}

enum class EqualityMode { Exact, Preview };

// Preview equality: compares both sides at deterministic seeded rational
// points. Agreement is evidence only and never certifies anything.
// Points where a denominator vanishes are skipped.
inline std::vector<Rational> seeded_point(const RingPtr& ring, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> num(-97, 97), den(1, 53);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        Rational x(num(gen), den(gen));
        x.canonicalize();
        if (x == 0) x = 1;
        p.push_back(x);
    }
    return p;
}

inline bool rational_eq_probabilistic(const RingPtr& ring, const std::function<Rational(const std::vector<Rational>&)>& a,
                                      const std::function<Rational(const std::vector<Rational>&)>& b, int trials = 8,
                                      std::uint64_t seed = 0x6d61636c6162ULL) {
    int used = 0;
    for (std::uint64_t k = 0; used < trials && k < static_cast<std::uint64_t>(trials) * 8; ++k) {
        auto pt = seeded_point(ring, seed + k);
        try {
            if (a(pt) != b(pt)) return false;
            ++used;
        } catch (const DivisionByZero&) {
        }
    }
    if (used == 0) throw DivisionByZero("no admissible evaluation point");
    return true;
}

inline bool rational_eq_probabilistic(const FactoredRational& a, const FactoredRational& b, int trials = 8) {
    require_same_ring(a.ring(), b.ring());
    return rational_eq_probabilistic(
        a.ring(), [&](const std::vector<Rational>& p) { return a.evaluate(p); },
        [&](const std::vector<Rational>& p) { return b.evaluate(p); }, trials);
}

}  // namespace maclab
