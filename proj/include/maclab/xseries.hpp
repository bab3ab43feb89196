#pragma once

// Truncated power series in m ratio variables x_1..x_m with rational
// function coefficients: sum_alpha x^alpha c_alpha over |alpha| <= D.

#include <map>
#include <vector>

#include "maclab/q_calculus.hpp"
#include "maclab/rational_function.hpp"

namespace maclab {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

// All alpha in N^m with |alpha| <= d, in lexicographic order.
inline std::vector<MultiIndex> multi_indices(int m, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

class XSeries {
public:
    XSeries() = default;
    XSeries(RingPtr ring, int m, int truncation) : ring_(std::move(ring)), m_(m), trunc_(truncation) {
        if (truncation < 0) throw InvalidArgument("truncation must be nonnegative");
    }

    const RingPtr& ring() const { return ring_; }
    int variables() const { return m_; }
    int truncation() const { return trunc_; }
    const std::map<MultiIndex, RationalFunction>& coefficients() const { return coef_; }

    RationalFunction coefficient(const MultiIndex& a) const {
        auto it = coef_.find(a);
        return it == coef_.end() ? RationalFunction::zero(ring_) : it->second;
    }

    // Adds c x^alpha; ignored above the truncation.
    void add(const MultiIndex& a, const RationalFunction& c) {
        check(a);
        if (total_degree(a) > trunc_ || c.is_zero()) return;
        auto it = coef_.find(a);
        if (it == coef_.end()) {
            coef_.emplace(a, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coef_.erase(it);
        }
    }
    void add(const MultiIndex& a, const Poly& c) { add(a, RationalFunction(c)); }

    friend XSeries operator+(const XSeries& a, const XSeries& b) {
        XSeries r(a.ring_, a.m_, std::min(a.trunc_, b.trunc_));
        for (const auto& [k, v] : a.coef_) r.add(k, v);
        for (const auto& [k, v] : b.coef_) r.add(k, v);
        return r;
    }
    friend XSeries operator-(const XSeries& a, const XSeries& b) { return a + b.scaled(Poly::constant(b.ring_, -1)); }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        std::map<MultiIndex, std::vector<RationalFunction>> acc;
        for (const auto& [ka, va] : a.coef_)
            for (const auto& [kb, vb] : b.coef_) {
                MultiIndex k(ka.size());
                for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                if (total_degree(k) > d) continue;
                acc[k].push_back(va * vb);
            }
        XSeries r(a.ring_, a.m_, d);
        for (auto& [k, vs] : acc) r.add(k, RationalFunction::sum(a.ring_, vs));
        return r;
    }

    XSeries scaled(const Poly& p) const {
        XSeries r(ring_, m_, trunc_);
        for (const auto& [k, v] : coef_) r.add(k, v * p);
        return r;
    }

    // x_a -> q^power x_a, i.e. c_alpha -> q^{power alpha_a} c_alpha.
    XSeries qshifted(int a, int power) const {
        XSeries r(ring_, m_, trunc_);
        Monomial q = ring_->var("q");
        for (const auto& [k, v] : coef_) r.add(k, v.scaled(1, q.pow(power * k[static_cast<std::size_t>(a - 1)])));
        return r;
    }

    static XSeries one(const RingPtr& ring, int m, int truncation) {
        XSeries r(ring, m, truncation);
        r.add(MultiIndex(static_cast<std::size_t>(m), 0), Poly::constant(ring, 1));
        return r;
    }

    // (n0 - n1 X)/(1 - d1 X) for the monomial X = x^unit, expanded:
    // n0 + sum_{k>=1} (n0 d1 - n1) d1^{k-1} X^k.
    static XSeries ratio(const RingPtr& ring, int m, int truncation, const MultiIndex& unit, const Poly& n0,
                         const Poly& n1, const Poly& d1) {
        XSeries r(ring, m, truncation);
        int step = total_degree(unit);
        if (step <= 0) throw InvalidArgument("ratio series needs a positive-degree monomial");
        r.add(MultiIndex(static_cast<std::size_t>(m), 0), n0);
        Poly c = n0 * d1 - n1;
        MultiIndex k(static_cast<std::size_t>(m), 0);
        for (int e = 1; e * step <= truncation; ++e) {
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += unit[i];
            r.add(k, c);
            c = c * d1;
        }
        return r;
    }

    bool is_zero() const { return coef_.empty(); }

private:
    RingPtr ring_;
    int m_ = 0;
    int trunc_ = 0;
    std::map<MultiIndex, RationalFunction> coef_;

    void check(const MultiIndex& a) const {
        if (static_cast<int>(a.size()) != m_) throw InvalidArgument("multi-index has wrong length");
        for (int x : a)
            if (x < 0) throw InvalidArgument("multi-index entries must be nonnegative");
    }
};

// Unit vector of the product x_i ... x_{j-1} (1-based, i < j).
inline MultiIndex span_index(int m, int i, int j) {
    MultiIndex a(static_cast<std::size_t>(m), 0);
    for (int k = i; k < j; ++k) a[k - 1] = 1;
    return a;
}

}  // namespace maclab
