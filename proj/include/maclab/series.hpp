#pragma once

// Truncated (q,t)-series with Laurent-polynomial coefficients in the other
// variables of the ring.
//
// A series is a Poly in the full ring that is exact in every (q,t)-degree up
// to `order`. Negative degrees are allowed; a factor is invertible when its
// lowest-degree homogeneous part is a single monomial.

#include <algorithm>
#include <climits>
#include <map>
#include <vector>

#include "maclab/factored_rational.hpp"

namespace maclab {

inline Grading qt_grading(const RingPtr& ring) {
    Grading g;
    for (const char* v : {"q", "t"})
        if (ring->has(v)) g.vars.push_back(ring->index(v));
    return g;
}

class QTSeries {
public:
    static constexpr int kExact = INT_MAX / 4;

    QTSeries() = default;
    QTSeries(Poly p, int order) : grading_(qt_grading(p.ring())), order_(order) {
        poly_ = order >= kExact ? std::move(p) : p.truncated(grading_, order);
    }
    static QTSeries zero(const RingPtr& ring, int order) { return QTSeries(Poly(ring), order); }
    static QTSeries one(const RingPtr& ring, int order) { return QTSeries(Poly::constant(ring, 1), order); }

    const Poly& poly() const { return poly_; }
    const RingPtr& ring() const { return poly_.ring(); }
    int order() const { return order_; }
    const Grading& grading() const { return grading_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Lowest (q,t)-degree present; kExact for the zero series.
    int valuation() const { return poly_.is_zero() ? kExact : poly_.min_degree(grading_); }

    QTSeries truncated(int order) const { return QTSeries(poly_, std::min(order, order_)); }

    friend QTSeries operator+(const QTSeries& a, const QTSeries& b) {
        int o = std::min(a.order_, b.order_);
        return QTSeries(a.poly_.truncated(a.grading_, o) + b.poly_.truncated(b.grading_, o), o);
    }
    friend QTSeries operator-(const QTSeries& a, const QTSeries& b) {
        int o = std::min(a.order_, b.order_);
        return QTSeries(a.poly_.truncated(a.grading_, o) - b.poly_.truncated(b.grading_, o), o);
    }
    QTSeries& operator+=(const QTSeries& o) { return *this = *this + o; }

    // Product, exact up to min(order_a + val_b, order_b + val_a), capped by `cap`.
    static QTSeries multiply(const QTSeries& a, const QTSeries& b, int cap = kExact) {
        if (a.is_zero() || b.is_zero()) {
            int o = std::min({cap, sat_add(a.order_, b.valuation()), sat_add(b.order_, a.valuation())});
            return zero(a.ring(), o);
        }
        int o = std::min({cap, sat_add(a.order_, b.valuation()), sat_add(b.order_, a.valuation())});
        if (o >= kExact) return QTSeries(a.poly_ * b.poly_, kExact);
        return QTSeries(Poly::multiply(a.poly_, b.poly_, &a.grading_, o), o);
    }
    friend QTSeries operator*(const QTSeries& a, const QTSeries& b) { return multiply(a, b); }

    QTSeries scaled(const Rational& c, const Monomial& m = Monomial{}) const {
        return QTSeries(poly_.scaled(c, m), sat_add(order_, grading_.degree(m)));
    }

    // Coefficient of q^a t^b as a polynomial in the remaining variables of
    // `target` (whose names must be the non-graded variables, in order).
    Poly coefficient(int a, int b, const RingPtr& target) const {
        std::vector<Poly::Term> out;
        std::size_t qi = ring()->has("q") ? ring()->index("q") : kMaxVars;
        std::size_t ti = ring()->has("t") ? ring()->index("t") : kMaxVars;
        for (const auto& t : poly_.terms()) {
            int ea = qi < kMaxVars ? t.mono[qi] : 0;
            int eb = ti < kMaxVars ? t.mono[ti] : 0;
            if (ea != a || eb != b) continue;
            Monomial m;
            for (std::size_t i = 0; i < ring()->size(); ++i) {
                if (i == qi || i == ti) continue;
                m[target->index(ring()->name(i))] = t.mono[i];
            }
            out.push_back({m, t.coef});
        }
        return Poly::from_terms(target, std::move(out));
    }

    // Equality of the parts both operands know exactly.
    friend bool agree(const QTSeries& a, const QTSeries& b, int order) {
        return a.poly_.truncated(a.grading_, order) == b.poly_.truncated(b.grading_, order);
    }

    static int sat_add(int a, int b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }

private:
    Poly poly_;
    Grading grading_;
    int order_ = kExact;
};

namespace detail {

// Lowest homogeneous (q,t)-part of p.
inline Poly lowest_part(const Poly& p, const Grading& g, int& deg) {
    deg = p.min_degree(g);
    int d = deg;
    return p.filtered([&](const Monomial& m) { return g.degree(m) == d; });
}

// 1/f exact up to absolute (q,t)-order `order`.
inline QTSeries inverse_series(const Poly& f, const Grading& g, int order) {
    int v;
    Poly low = lowest_part(f, g, v);
    if (!low.is_monomial())
        throw DenominatorNotUnit("factor " + f.to_string() + " has no unit leading part");
    const auto& L = low.leading();
    Poly unit = Poly::monomial(f.ring(), L.mono.inverse(), 1 / L.coef);
    // f / L = 1 - h with h of valuation >= 1
    Poly h = Poly::constant(f.ring(), 1) - f * unit;
    int rel = order + v;  // needed relative precision of (1-h)^{-1}
    Poly sum = Poly::constant(f.ring(), 1);
    if (rel > 0 && !h.is_zero()) {
        int hv = h.min_degree(g);
        if (h.is_monomial()) {
            Poly term = sum;
            for (int k = 1; k * hv <= rel; ++k) {
                term = term * h;
                sum = sum + term;
            }
        } else {
            Poly term = sum;
            for (int k = 1; k * hv <= rel; ++k) {
                term = Poly::multiply(term, h, &g, rel);
                if (term.is_zero()) break;
                sum = sum + term;
            }
        }
    }
    return QTSeries(Poly::multiply(sum.truncated(g, std::max(rel, 0)), unit, nullptr, 0), order);
}

}  // namespace detail

// Lowest (q,t)-degree of r; the lowest parts of the factors multiply.
inline int valuation(const FactoredRational& r) {
    if (r.is_zero()) return QTSeries::kExact;
    Grading g = qt_grading(r.ring());
    int v = g.degree(r.unit_monomial());
    for (const auto& [f, k] : r.factors()) v += k * f.min_degree(g);
    return v;
}

// (q,t)-expansion of r exact up to total degree `order`.
inline QTSeries expand(const FactoredRational& r, int order) {
    const RingPtr& ring = r.ring();
    Grading g = qt_grading(ring);
    if (r.is_zero()) return QTSeries::zero(ring, order);
    struct Part {
        const Poly* f;
        int k;
        int val;
    };
    std::vector<Part> parts;
    int total = g.degree(r.unit_monomial());
    for (const auto& [f, k] : r.factors()) {
        int v = f.min_degree(g);
        if (k < 0) {
            int d;
            Poly low = detail::lowest_part(f, g, d);
            if (!low.is_monomial())
                throw DenominatorNotUnit("factor " + f.to_string() + " has no unit leading part");
        }
        parts.push_back({&f, k, k * v});
        total += k * v;
    }
    if (total > order) return QTSeries::zero(ring, order);
    QTSeries acc(Poly::monomial(ring, r.unit_monomial(), r.coefficient()), QTSeries::kExact);
    for (const auto& p : parts) {
        // this part must be exact to order - (total - own valuation)
        int need = order - (total - p.val);
        QTSeries s;
        if (p.k > 0) {
            QTSeries base(*p.f, QTSeries::kExact);
            s = base;
            for (int i = 1; i < p.k; ++i) s = s * base;
        } else {
            int m = -p.k;
            // 1/f has valuation -v_f; each copy is made exact to `need` minus
            // the valuation of the other m-1 copies
            int v_f = p.val / p.k;
            QTSeries inv = detail::inverse_series(*p.f, g, need + (m - 1) * v_f);
            s = inv;
            for (int i = 1; i < m; ++i) s = s * inv;
        }
        acc = acc * s.truncated(need);
    }
    return acc.truncated(order);
}

// Sums factored terms whose only non-unit denominators are (q,t)-free, such
// as (z_i - z_j). Those poles are cleared over the multiset lcm, the
// cleared numerators are expanded and summed, and the lcm is divided out
// exactly at the end. A surviving pole raises NotDivisible.
class PoleClearingSum {
public:
    PoleClearingSum(RingPtr ring, int order) : ring_(std::move(ring)), order_(order), g_(qt_grading(ring_)) {}

    int order() const { return order_; }

    void add(const FactoredRational& r) {
        require_same_ring(ring_, r.ring());
        if (r.is_zero()) return;
        FactoredRational rest(ring_, r.coefficient(), r.unit_monomial());
        std::map<Poly, int> poles;
        for (const auto& [f, k] : r.factors()) {
            if (k < 0 && is_pole(f)) {
                poles[f] = -k;
            } else {
                rest.mul_factor(f, k);
            }
        }
        terms_.push_back({std::move(rest), std::move(poles)});
    }

    QTSeries finish() const {
        std::map<Poly, int> lcm;
        for (const auto& t : terms_)
            for (const auto& [f, k] : t.poles) lcm[f] = std::max(lcm[f], k);
        Poly total(ring_);
        for (const auto& t : terms_) {
            std::vector<Poly> cofactor;
            for (const auto& [f, k] : lcm) {
                auto it = t.poles.find(f);
                int have = it == t.poles.end() ? 0 : it->second;
                for (int i = have; i < k; ++i) cofactor.push_back(f);
            }
            Poly c = product(ring_, std::move(cofactor));
            QTSeries s = expand(t.rest, order_);
            total = total + s.poly() * c;
        }
        std::vector<Poly> dens;
        for (const auto& [f, k] : lcm)
            for (int i = 0; i < k; ++i) dens.push_back(f);
        Poly d = product(ring_, std::move(dens));
        if (!d.is_constant() || d.leading().coef != 1) total = total.divide_exact(d);
        return QTSeries(total, order_);
    }

private:
    struct Term {
        FactoredRational rest;
        std::map<Poly, int> poles;
    };
    RingPtr ring_;
    int order_;
    Grading g_;
    std::vector<Term> terms_;

    bool is_pole(const Poly& f) const {
        int d;
        Poly low = detail::lowest_part(f, g_, d);
        if (low.is_monomial()) return false;
        if (f.max_degree(g_) != d)
            throw DenominatorNotUnit("mixed pole " + f.to_string() + " cannot be cleared");
        return true;
    }
};

// (p;q)_inf expanded to (q,t)-order `order`; p must have positive (q,t)-degree.
inline QTSeries pochhammer_inf(const Poly& p, int order) {
    const RingPtr& ring = p.ring();
    Grading g = qt_grading(ring);
    if (p.is_zero()) return QTSeries::one(ring, order);
    if (!p.is_monomial()) throw InvalidArgument("pochhammer base must be a monomial");
    int d = g.degree(p.leading().mono);
    if (d <= 0) throw NonConvergent("(p;q)_inf needs p of positive (q,t)-degree, got " + p.to_string());
    Poly q = Poly::variable(ring, "q");
    QTSeries acc = QTSeries::one(ring, order);
    Poly pk = p;
    for (int k = 0; d + k <= order; ++k) {
        acc = QTSeries::multiply(acc, QTSeries(Poly::constant(ring, 1) - pk, QTSeries::kExact), order);
        pk = pk * q;
    }
    return acc;
}

}  // namespace maclab
