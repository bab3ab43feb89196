#pragma once

// Localization series of local Laumon spaces in the ring (q, t, z1..zN):
// the fixed-point coefficients C_theta, the generating series J in the
// simple-coroot variables x_1..x_{N-1}, its difference equation, the graded
// pieces J_alpha and their stable limit.

#include <string>

#include "maclab/baker_akhiezer.hpp"

namespace maclab {

namespace detail {

struct LaumonVars {
    RingPtr r;
    Monomial q, t;
    std::vector<Monomial> z;
    explicit LaumonVars(int n) : r(rings::laumon(n)), q(r->var("q")), t(r->var("t")), z(static_cast<std::size_t>(n + 1)) {
        for (int i = 1; i <= n; ++i) z[i] = r->var("z" + std::to_string(i));
    }
    Monomial qp(int k) const { return q.pow(k); }
    FactoredRational poch(const Monomial& m, int len) const { return pochhammer(r, m, len); }
};

}  // namespace detail

// Fixed-point weight C_theta(q, t, z).
inline FactoredRational C_theta(const ThetaMatrix& th) {
    int n = th.n();
    detail::LaumonVars v(n);
    FactoredRational out = FactoredRational::one(v.r);
    auto tail = [&](int a, int b, int k) {
        int s = 0;
        for (int c = k + 1; c <= n; ++c) s += th(a, c) - th(b, c);
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int len = th(i, j);
            if (len == 0) continue;
            Monomial base = v.qp(1 + tail(i, j, j)) * v.z[j] / v.z[i];
            out *= v.poch(v.q * v.t, len) * v.poch(v.t * base, len);
            out /= v.poch(v.q, len) * v.poch(base, len);
        }
    for (int k = 3; k <= n; ++k)
        for (int l = 1; l <= k - 1; ++l) {
            int len = th(l, k);
            if (len == 0) continue;
            for (int m = l + 1; m <= k - 1; ++m) {
                int e = tail(l, m, k);
                Monomial ml = v.qp(1 + e) * v.z[m] / v.z[l];
                Monomial lm = v.qp(1 - len + th(m, k) - e) * v.z[l] / v.z[m];
                out *= v.poch(v.t * ml, len) * v.poch(v.t * lm, len);
                out /= v.poch(ml, len) * v.poch(lm, len);
            }
        }
    return out;
}

// J = sum_theta C_theta prod (x_i ... x_{j-1})^theta_ij, up to x-degree d.
inline XSeries J_series(int n, int d) {
    RingPtr r = rings::laumon(n);
    std::vector<ThetaMatrix> ths = thetas_up_to_degree(n, d);
    auto cs = parallel_map<RationalFunction>(ths.size(), [&](std::size_t k) {
        return RationalFunction::from(C_theta(ths[k]));
    });
    XSeries out(r, n - 1, d);
    for (std::size_t k = 0; k < ths.size(); ++k) out.add(ths[k].degree(), cs[k]);
    return out;
}

// Which numerators the conjugated operator carries.
//   Printed: j<i gets 1 - q^-1 t^{i-j-1} X, k>i gets 1 - q t^{k-i+1} X.
//   Derived: the two swapped, which is what conjugating the first Macdonald
//            operator through s = q t, X_a = t^-1 y_{a+1}/y_a produces.
enum class ShirVariant { Printed, Derived };

inline const char* variant_name(ShirVariant v) { return v == ShirVariant::Printed ? "printed" : "derived"; }

// (D' - sum z_i) J up to x-degree d, with D' = sum_i z_i A_i T_{i,q^-1}
// and T_{i,q^-1}: x_{i-1} -> q x_{i-1}, x_i -> q^-1 x_i.
inline XSeries shir_residual(int n, int d, ShirVariant variant) {
    detail::LaumonVars v(n);
    const RingPtr& r = v.r;
    int m = n - 1;
    XSeries J = J_series(n, d);
    Poly one = Poly::constant(r, 1);
    auto mono = [&](const Monomial& x) { return Poly::monomial(r, x); };
    XSeries acc(r, m, d);
    Poly zsum(r);
    for (int i = 1; i <= n; ++i) {
        Poly zi = mono(v.z[i]);
        zsum = zsum + zi;
        XSeries a = XSeries::one(r, m, d);
        for (int j = 1; j < i; ++j) {
            int h = i - j;
            Monomial num = variant == ShirVariant::Printed ? v.qp(-1) * v.t.pow(h - 1) : v.q * v.t.pow(h + 1);
            a = a * XSeries::ratio(r, m, d, span_index(m, j, i), one, mono(num), mono(v.t.pow(h)));
        }
        for (int k = i + 1; k <= n; ++k) {
            int h = k - i;
            Monomial num = variant == ShirVariant::Printed ? v.q * v.t.pow(h + 1) : v.qp(-1) * v.t.pow(h - 1);
            a = a * XSeries::ratio(r, m, d, span_index(m, i, k), one, mono(num), mono(v.t.pow(h)));
        }
        XSeries g = J;
        if (i >= 2) g = g.qshifted(i - 1, 1);
        if (i <= m) g = g.qshifted(i, -1);
        acc = acc + (a * g).scaled(zi);
    }
    return acc - J.scaled(zsum);
}

inline VerificationReport verify_shir(int n, int d, ShirVariant variant = ShirVariant::Derived) {
    VerificationReport rep;
    rep.check = "shir";
    rep.parameters = {{"n", n}, {"degree", d}, {"operator", variant_name(variant)}};
    XSeries res = shir_residual(n, d, variant);
    for (const auto& [a, c] : res.coefficients()) rep.fail({alpha_string(a), "0", c.to_factored().to_string()});
    rep.details["coefficients_checked"] = multi_indices(n - 1, d).size();
    return rep;
}

// c_N at s = q t against C_theta t^{-sum (j-i) theta_ij}, for every theta of
// x-degree <= d.
inline VerificationReport substitution_check(int n, int d) {
    VerificationReport rep;
    rep.check = "substitution";
    rep.parameters = {{"n", n}, {"degree", d}};
    RingPtr src = rings::spectral(n), dst = rings::laumon(n);
    std::vector<Monomial> images(src->size());
    images[src->index("q")] = dst->var("q");
    images[src->index("s")] = dst->var("q") * dst->var("t");
    for (int i = 1; i <= n; ++i) images[src->index("z" + std::to_string(i))] = dst->var("z" + std::to_string(i));
    std::vector<ThetaMatrix> ths = thetas_up_to_degree(n, d);
    auto ok = parallel_map<int>(ths.size(), [&](std::size_t k) {
        const ThetaMatrix& th = ths[k];
        int w = 0;
        for (int a : th.degree()) w += a;
        FactoredRational lhs = c_N_recursive(th).substitute(dst, images);
        FactoredRational rhs = C_theta(th) * FactoredRational(dst, 1, dst->var("t", -w));
        return rational_eq(lhs, rhs) ? 1 : 0;
    });
    for (std::size_t k = 0; k < ths.size(); ++k)
        if (!ok[k]) rep.fail({ths[k].to_string(), "C_theta t^-deg", "c_N(s = q t)"});
    rep.details["thetas_checked"] = ths.size();
    return rep;
}

// All theta in M^(n) whose x-degree vector is exactly alpha.
inline std::vector<ThetaMatrix> thetas_with_degree(int n, const MultiIndex& alpha) {
    if (static_cast<int>(alpha.size()) != n - 1) throw InvalidArgument("degree vector has wrong length");
    std::vector<ThetaMatrix> out;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
    ThetaMatrix t(n);
    MultiIndex left = alpha;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            for (int x : left)
                if (x != 0) return;
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[k];
        int cap = left[i - 1];
        for (int a = i; a < j; ++a) cap = std::min(cap, left[a - 1]);
        for (int v = 0; v <= cap; ++v) {
            t.set(i, j, v);
            for (int a = i; a < j; ++a) left[a - 1] -= v;
            self(self, k + 1);
            for (int a = i; a < j; ++a) left[a - 1] += v;
        }
        t.set(i, j, 0);
    };
    rec(rec, 0);
    return out;
}

// Applies a monomial substitution of (q, t, z) to every coefficient; used
// for q -> q^-1 and for permuting z.
inline std::vector<Monomial> laumon_images(int n, int q_power, const std::vector<int>& perm = {}) {
    RingPtr r = rings::laumon(n);
    std::vector<Monomial> images(r->size());
    images[r->index("q")] = r->var("q", q_power);
    images[r->index("t")] = r->var("t");
    for (int i = 1; i <= n; ++i) {
        int w = perm.empty() ? i : perm[i - 1];
        images[r->index("z" + std::to_string(i))] = r->var("z" + std::to_string(w));
    }
    return images;
}

// Graded piece J_alpha expanded to (q,t)-order M. Its terms may carry
// (q,t)-free poles (1 - z_j/z_i) that only cancel in the sum.
inline QTSeries J_alpha(int n, const MultiIndex& alpha, int order) {
    RingPtr r = rings::laumon(n);
    std::vector<ThetaMatrix> ths = thetas_with_degree(n, alpha);
    PoleClearingSum acc(r, order);
    for (const auto& th : ths) acc.add(C_theta(th));
    return acc.finish();
}

// Product formula for the limit of J_alpha, expanded to order M.
inline QTSeries J_infinity(int n, int order) {
    detail::LaumonVars v(n);
    const RingPtr& r = v.r;
    auto inf = [&](const Monomial& m) { return pochhammer_inf_factored(r, m, order); };
    FactoredRational p = FactoredRational::one(r);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p *= inf(v.q * v.t * v.z[j] / v.z[i]) / inf(v.q * v.z[j] / v.z[i]);
    p *= (inf(v.q * v.t) / inf(v.q)).pow(n - 1);
    for (int i = 1; i <= n - 2; ++i) p *= (inf(v.q * v.t.pow(i + 1)) / inf(v.t.pow(i))).pow(n - i - 1);
    return expand(p, order);
}

// Coefficient-wise comparison of two series up to `order`; returns the
// differing (q,t)-bidegrees.
inline std::vector<std::pair<int, int>> series_differences(const QTSeries& a, const QTSeries& b, int order) {
    std::vector<std::pair<int, int>> out;
    QTSeries d = QTSeries(a.poly(), order) - QTSeries(b.poly(), order);
    std::size_t qi = d.ring()->index("q"), ti = d.ring()->index("t");
    for (const auto& t : d.poly().terms()) {
        std::pair<int, int> k{t.mono[qi], t.mono[ti]};
        if (out.empty() || out.back() != k) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The z-coefficient of q^a t^b, printed.
inline std::string to_string_coef(const QTSeries& s, std::pair<int, int> k) {
    const RingPtr& r = s.ring();
    std::size_t qi = r->index("q"), ti = r->index("t");
    std::vector<Poly::Term> out;
    for (const auto& t : s.poly().terms()) {
        if (t.mono[qi] != k.first || t.mono[ti] != k.second) continue;
        Monomial m = t.mono;
        m[qi] = 0;
        m[ti] = 0;
        out.push_back({m, t.coef});
    }
    return Poly::from_terms(r, std::move(out)).to_string();
}

inline std::string bidegree_string(std::pair<int, int> k) {
    return "q^" + std::to_string(k.first) + " t^" + std::to_string(k.second);
}

// The sector schedule used by default: alpha_k with d_i = 2^{N-1-i} k, so
// d_1 >> d_2 >> ... as k grows.
inline std::vector<MultiIndex> sector_schedule(int n, int points) {
    std::vector<MultiIndex> out;
    for (int k = 1; k <= points; ++k) {
        MultiIndex a(static_cast<std::size_t>(n - 1));
        for (int i = 1; i <= n - 1; ++i) a[i - 1] = k << (n - 1 - i);
        out.push_back(a);
    }
    return out;
}

// Expands J_alpha along the schedule, requires the last two points to agree
// below `order`, and compares the stable value with the product formula.
inline VerificationReport verify_junichi(int n, int order, const std::vector<MultiIndex>& schedule) {
    VerificationReport rep;
    rep.check = "junichi";
    Json sched = Json::array();
    for (const auto& a : schedule) sched.push_back(a);
    rep.parameters = {{"n", n}, {"order", order}, {"schedule", sched}};
    if (schedule.size() < 2) throw InvalidArgument("schedule needs at least two points");
    auto series = parallel_map<QTSeries>(schedule.size(), [&](std::size_t k) { return J_alpha(n, schedule[k], order); });
    const QTSeries& last = series.back();
    for (const auto& k : series_differences(series[series.size() - 2], last, order))
        rep.fail({alpha_string(schedule.back()) + " " + bidegree_string(k), "stable", "moved"}, Status::NotStabilized);
    std::size_t first_stable = series.size() - 1;
    while (first_stable > 0 && series_differences(series[first_stable - 1], last, order).empty()) --first_stable;
    rep.details["stable_from"] = schedule[first_stable];
    QTSeries lim = J_infinity(n, order);
    for (const auto& k : series_differences(last, lim, order))
        rep.fail({bidegree_string(k), to_string_coef(lim, k), to_string_coef(last, k)});
    return rep;
}

// Summation over the root lattice of type A_n in the variables z1..z_{n+1}:
//   sum_{chi in Q} prod_{alpha in R} (q^{1+<alpha,chi>} t z_alpha;q)_inf
//                                    / (q^{1+<alpha,chi>} z_alpha;q)_inf
// with Q = {chi in Z^{n+1} : sum chi = 0}, z_{e_a - e_b} = z_a/z_b.

namespace detail {

// The term for one lattice point, with every infinite product cut so that
// the term is exact to (q,t)-order `order`.
inline FactoredRational an_term(const RingPtr& r, const std::vector<int>& chi, int order) {
    int m = static_cast<int>(chi.size());
    Monomial q = r->var("q"), t = r->var("t");
    auto build = [&](int o) {
        FactoredRational out = FactoredRational::one(r);
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                if (a == b) continue;
                Monomial base = q.pow(1 + chi[a - 1] - chi[b - 1]) * r->var("z" + std::to_string(a)) /
                                r->var("z" + std::to_string(b));
                out *= pochhammer_inf_factored(r, t * base, o) / pochhammer_inf_factored(r, base, o);
            }
        return out;
    };
    FactoredRational term = build(order);
    int v = valuation(term);
    return v < 0 ? build(order - v) : term;
}

inline std::vector<std::vector<int>> root_lattice_box(int n, int radius) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int pos, int sum) -> void {
        if (pos == n) {
            if (std::abs(sum) > radius) return;
            cur[pos] = -sum;
            out.push_back(cur);
            return;
        }
        for (int v = -radius; v <= radius; ++v) {
            cur[pos] = v;
            self(self, pos + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace detail

// Lattice points whose term has (q,t)-valuation <= order. The box radius is
// doubled until doubling adds no such point.
inline std::vector<std::vector<int>> an_lattice_support(int n, int order, int* radius_out = nullptr) {
    RingPtr r = rings::laumon(n + 1);
    auto support = [&](int radius) {
        auto box = detail::root_lattice_box(n, radius);
        auto keep = parallel_map<int>(box.size(), [&](std::size_t k) {
            return valuation(detail::an_term(r, box[k], 0)) <= order ? 1 : 0;
        });
        std::vector<std::vector<int>> out;
        for (std::size_t k = 0; k < box.size(); ++k)
            if (keep[k]) out.push_back(box[k]);
        return out;
    };
    int radius = 1;
    auto cur = support(radius);
    for (;;) {
        auto next = support(2 * radius);
        if (next == cur) break;
        radius *= 2;
        cur = std::move(next);
    }
    if (radius_out) *radius_out = radius;
    return cur;
}

inline QTSeries an_lattice_sum(int n, int order) {
    RingPtr r = rings::laumon(n + 1);
    auto pts = an_lattice_support(n, order);
    auto terms = parallel_map<FactoredRational>(pts.size(), [&](std::size_t k) { return detail::an_term(r, pts[k], order); });
    PoleClearingSum acc(r, order);
    for (const auto& t : terms) acc.add(t);
    return acc.finish();
}

// Product over positive roots e_a - e_b (a < b) with height h = b - a:
// (q t^{h+1})(q^{delta} t^{h-1}) / ((q t^h)(t^h)), delta = 1 on simple roots.
inline QTSeries an_root_product(int n, int order) {
    RingPtr r = rings::laumon(n + 1);
    Monomial q = r->var("q"), t = r->var("t");
    FactoredRational p = FactoredRational::one(r);
    for (int a = 1; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b) {
            int h = b - a;
            p *= pochhammer_inf_factored(r, q * t.pow(h + 1), order) *
                 pochhammer_inf_factored(r, q.pow(h == 1 ? 1 : 0) * t.pow(h - 1), order);
            p /= pochhammer_inf_factored(r, q * t.pow(h), order) * pochhammer_inf_factored(r, t.pow(h), order);
        }
    return expand(p, order);
}

// ((q;q)/(qt;q))^{k-1} prod_{i=1}^{k-1} (q t^{i+1};q)/(t^i;q), in the ring of
// rank n.
inline QTSeries an_compact_product(int n, int k, int order) {
    RingPtr r = rings::laumon(n + 1);
    Monomial q = r->var("q"), t = r->var("t");
    auto inf = [&](const Monomial& m) { return pochhammer_inf_factored(r, m, order); };
    FactoredRational p = (inf(q) / inf(q * t)).pow(k - 1);
    for (int i = 1; i <= k - 1; ++i) p *= inf(q * t.pow(i + 1)) / inf(t.pow(i));
    return expand(p, order);
}

// Compares the lattice sum of rank n with the positive-root product. The
// compact right-hand form is recorded for both readings of its exponent.
inline VerificationReport an_summation_check(int n, int order) {
    VerificationReport rep;
    rep.check = "ansum";
    rep.parameters = {{"n", n}, {"order", order}};
    int radius = 0;
    auto pts = an_lattice_support(n, order, &radius);
    QTSeries lhs = an_lattice_sum(n, order);
    QTSeries rhs = an_root_product(n, order);
    for (const auto& k : series_differences(lhs, rhs, order))
        rep.fail({bidegree_string(k), to_string_coef(rhs, k), to_string_coef(lhs, k)});
    rep.details["lattice_points"] = pts.size();
    rep.details["radius"] = radius;
    rep.details["compact_form_rank"] = series_differences(an_compact_product(n, n, order), rhs, order).empty();
    rep.details["compact_form_rank_plus_one"] =
        series_differences(an_compact_product(n, n + 1, order), rhs, order).empty();
    return rep;
}

}  // namespace maclab
