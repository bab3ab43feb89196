#pragma once

// q-Pochhammer symbols and q-shifts.

#include <algorithm>
#include <string>

#include "maclab/series.hpp"

namespace maclab {

// (c*m; q)_n = prod_{k<n} (1 - q^k c m), kept factored.
inline FactoredRational pochhammer(const RingPtr& ring, const Monomial& m, int n, const Rational& c = 1) {
    if (n < 0) throw InvalidArgument("pochhammer length must be nonnegative");
    FactoredRational r = FactoredRational::one(ring);
    Monomial qk = m;
    Monomial q = ring->var("q");
    Poly one = Poly::constant(ring, 1);
    for (int k = 0; k < n; ++k) {
        r.mul_factor(one - Poly::monomial(ring, qk, c), 1);
        if (r.is_zero()) break;
        qk *= q;
    }
    return r;
}

inline FactoredRational pochhammer(const Poly& p, int n) {
    if (p.is_zero()) return FactoredRational::one(p.ring());
    if (!p.is_monomial()) throw InvalidArgument("pochhammer base must be a monomial");
    return pochhammer(p.ring(), p.leading().mono, n, p.leading().coef);
}

// The finite product (m; q)_L that agrees with (m; q)_inf up to (q,t)-degree
// `order`: every omitted factor 1 - q^k m has degree above `order`. Bases of
// nonpositive degree are allowed; their first factors are kept exactly.
inline FactoredRational pochhammer_inf_factored(const RingPtr& ring, const Monomial& m, int order) {
    Grading g = qt_grading(ring);
    if (!ring->has("q")) throw InvalidArgument("ring has no q");
    int d = g.degree(m);
    return pochhammer(ring, m, std::max(0, order - d + 1));
}

// Ratio (a;q)_n / (b;q)_n of two monomial bases.
inline FactoredRational pochhammer_ratio(const RingPtr& ring, const Monomial& a, const Monomial& b, int n) {
    return pochhammer(ring, a, n) / pochhammer(ring, b, n);
}

// v -> q^power v
struct QShift {
    std::string variable;
    int power = 1;

    QShift then(const QShift& o) const {
        if (o.variable != variable) throw InvalidArgument("composing shifts of different variables");
        return {variable, power + o.power};
    }
    QShift inverse() const { return {variable, -power}; }
};

inline Poly apply_qshift(const Poly& f, const QShift& s) {
    const RingPtr& ring = f.ring();
    std::size_t v = ring->index(s.variable);
    std::size_t qi = ring->index("q");
    std::vector<Poly::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        m[qi] = static_cast<Monomial::value_type>(m[qi] + s.power * t.mono[v]);
        out.push_back({m, t.coef});
    }
    return Poly::from_terms(ring, std::move(out));
}

inline Poly apply_qshifts(Poly f, const std::vector<QShift>& shifts) {
    for (const auto& s : shifts) f = apply_qshift(f, s);
    return f;
}

}  // namespace maclab
