#pragma once

// Coefficients c_N(theta; z; q, s) of the Baker-Akhiezer series, the series
// itself in the ratios x_a = y_{a+1}/y_a, its specialization to P_lambda and
// the eigen-identity check for the first Macdonald operator.
//
// Everything lives in the ring (q, s, z1..zN).

#include <string>

#include "maclab/macdonald.hpp"
#include "maclab/report.hpp"
#include "maclab/xseries.hpp"

namespace maclab {

// All theta in M^(n) with sum_{i<j} (j-i) theta_ij <= d, i.e. of
// x-degree at most d, sorted by entry list.
inline std::vector<ThetaMatrix> thetas_up_to_degree(int n, int d) {
    std::vector<ThetaMatrix> out;
    ThetaMatrix t(n);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 0; v * (j - i) <= left; ++v) {
            t.set(i, j, v);
            self(self, k + 1, left - v * (j - i));
        }
        t.set(i, j, 0);
    };
    rec(rec, 0, d);
    return out;
}

// All theta in M^(n) with every entry <= e.
inline std::vector<ThetaMatrix> thetas_bounded(int n, int e) {
    std::vector<ThetaMatrix> out;
    std::size_t cells = static_cast<std::size_t>(n * (n - 1) / 2);
    std::vector<int> v(cells, 0);
    while (true) {
        out.push_back(ThetaMatrix::from_entries(n, v));
        std::size_t k = cells;
        while (k > 0 && v[k - 1] == e) v[--k] = 0;
        if (k == 0) break;
        ++v[k - 1];
    }
    return out;
}

namespace detail {

struct SpectralVars {
    RingPtr r;
    Monomial q, s;
    std::vector<Monomial> z;  // z[i] for i = 1..n
    explicit SpectralVars(int n) : r(rings::spectral(n)), q(r->var("q")), s(r->var("s")), z(static_cast<std::size_t>(n + 1)) {
        for (int i = 1; i <= n; ++i) z[i] = r->var("z" + std::to_string(i));
    }
    Monomial qp(int k) const { return q.pow(k); }
    FactoredRational poch(const Monomial& m, int len) const { return pochhammer(r, m, len); }
};

}  // namespace detail

// The defining recursion: c_1 = 1 and c_N is c_{N-1} at shifted z times the
// level-N Pochhammer ratios.
inline FactoredRational c_N_recursive(const ThetaMatrix& th) {
    int n = th.n();
    detail::SpectralVars v(n);
    std::vector<Monomial> z = v.z;
    FactoredRational out = FactoredRational::one(v.r);
    for (int top = n; top >= 2; --top) {
        for (int i = 1; i <= top - 1; ++i) {
            int len = th(i, top);
            if (len == 0) continue;
            for (int j = i; j <= top - 1; ++j) {
                Monomial up = z[j + 1] / z[i];
                Monomial side = z[j] / z[i] * v.qp(-th(j, top));
                out *= v.poch(v.s * up, len);
                out /= v.poch(v.q * up, len);
                out *= v.poch(v.q * side / v.s, len);
                out /= v.poch(side, len);
            }
        }
        for (int i = 1; i <= top - 1; ++i) z[i] = v.qp(-th(i, top)) * z[i];
    }
    return out;
}

// First explicit product (k, i <= j <= k-1).
inline FactoredRational c_N_closed_first(const ThetaMatrix& th) {
    int n = th.n();
    detail::SpectralVars v(n);
    FactoredRational out = FactoredRational::one(v.r);
    auto tail = [&](int a, int b, int k) {
        int s = 0;
        for (int c = k + 1; c <= n; ++c) s += th(a, c) - th(b, c);
        return s;
    };
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k - 1; ++i) {
            int len = th(i, k);
            if (len == 0) continue;
            for (int j = i; j <= k - 1; ++j) {
                Monomial up = v.qp(tail(i, j + 1, k)) * v.z[j + 1] / v.z[i];
                Monomial side = v.qp(-th(j, k) + tail(i, j, k)) * v.z[j] / v.z[i];
                out *= v.poch(v.s * up, len);
                out /= v.poch(v.q * up, len);
                out *= v.poch(v.q * side / v.s, len);
                out /= v.poch(side, len);
            }
        }
    return out;
}

// Second explicit product, with the (q/s)^theta monomials pulled out.
inline FactoredRational c_N_closed_second(const ThetaMatrix& th) {
    int n = th.n();
    detail::SpectralVars v(n);
    FactoredRational out = FactoredRational::one(v.r);
    Monomial qs = v.q / v.s;
    auto tail = [&](int a, int b, int k) {
        int s = 0;
        for (int c = k + 1; c <= n; ++c) s += th(a, c) - th(b, c);
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int len = th(i, j);
            if (len == 0) continue;
            Monomial zr = v.z[j] / v.z[i];
            int c = tail(i, j, j);
            out *= FactoredRational(v.r, 1, qs.pow(len));
            out *= v.poch(v.s, len) * v.poch(v.qp(c) * v.s * zr, len);
            out /= v.poch(v.q, len) * v.poch(v.qp(1 + c) * zr, len);
        }
    for (int k = 3; k <= n; ++k)
        for (int l = 1; l <= k - 1; ++l) {
            int len = th(l, k);
            if (len == 0) continue;
            for (int m = l + 1; m <= k - 1; ++m) {
                int e = tail(l, m, k);
                int w = -len + th(m, k) - e;
                Monomial ml = v.z[m] / v.z[l];
                Monomial lm = v.z[l] / v.z[m];
                out *= FactoredRational(v.r, 1, qs.pow(len));
                out *= v.poch(v.qp(e) * v.s * ml, len) * v.poch(v.qp(w) * v.s * lm, len);
                out /= v.poch(v.qp(1 + e) * ml, len) * v.poch(v.qp(1 + w) * lm, len);
            }
        }
    return out;
}

// The two-variable example as printed, in both of its forms.
inline std::pair<FactoredRational, FactoredRational> c2_printed(int t12) {
    detail::SpectralVars v(2);
    Monomial zr = v.z[2] / v.z[1];
    FactoredRational a = v.poch(v.s * zr, t12) / v.poch(v.q * zr, t12) * v.poch(v.qp(-t12) * v.q / v.s, t12) /
                         v.poch(v.qp(-t12), t12);
    FactoredRational b = v.poch(v.s * zr, t12) / v.poch(v.q * zr, t12) * v.poch(v.s, t12) / v.poch(v.q, t12) *
                         FactoredRational(v.r, 1, (v.q / v.s).pow(t12));
    return {a, b};
}

// The three-variable example exactly as printed. With `swap_last` the last
// ratio of the middle line uses z_2/z_1 (what the recursion produces)
// instead of the printed z_1/z_2.
inline FactoredRational c3_printed(const ThetaMatrix& th, bool swap_last = false) {
    detail::SpectralVars v(3);
    int a = th(1, 2), b = th(1, 3), c = th(2, 3);
    auto& z = v.z;
    FactoredRational r = FactoredRational::one(v.r);
    Monomial z21 = z[2] / z[1], z31 = z[3] / z[1], z32 = z[3] / z[2];
    r *= v.poch(v.qp(b - c) * v.s * z21, a) / v.poch(v.qp(b - c) * v.q * z21, a);
    r *= v.poch(v.qp(-a) * v.q / v.s, a) / v.poch(v.qp(-a), a);
    r *= v.poch(v.s * z21, b) / v.poch(v.q * z21, b);
    r *= v.poch(v.qp(-b) * v.q / v.s, b) / v.poch(v.qp(-b), b);
    r *= v.poch(v.s * z31, b) / v.poch(v.q * z31, b);
    Monomial last = swap_last ? z21 : z21.inverse();
    r *= v.poch(v.qp(-c) * v.q * last / v.s, b) / v.poch(v.qp(-c) * last, b);
    r *= v.poch(v.s * z32, c) / v.poch(v.q * z32, c);
    r *= v.poch(v.qp(-c) * v.q / v.s, c) / v.poch(v.qp(-c), c);
    return r;
}

// sum_theta c_N(theta) x^{deg theta} over theta of x-degree <= d; the y^lambda
// prefactor is implicit.
inline XSeries f_N_series(int n, int d) {
    RingPtr r = rings::spectral(n);
    std::vector<ThetaMatrix> ths = thetas_up_to_degree(n, d);
    auto cs = parallel_map<RationalFunction>(ths.size(), [&](std::size_t k) {
        return RationalFunction::from(c_N_recursive(ths[k]));
    });
    XSeries out(r, n - 1, d);
    for (std::size_t k = 0; k < ths.size(); ++k) out.add(ths[k].degree(), cs[k]);
    return out;
}

// Images of (q, s, z1..zN) under z_i = s^{N-i} q^{lambda_i}, landing in (q, s, y1..yN).
inline std::vector<Monomial> specialization_images(const Partition& lambda, int n) {
    RingPtr src = rings::spectral(n);
    RingPtr dst = rings::macdonald(n);
    std::vector<Monomial> images(src->size());
    images[src->index("q")] = dst->var("q");
    images[src->index("s")] = dst->var("s");
    for (int i = 1; i <= n; ++i)
        images[src->index("z" + std::to_string(i))] = dst->var("s", n - i) * dst->var("q", lambda[i]);
    return images;
}

inline FactoredRational specialized_coefficient(const ThetaMatrix& th, const Partition& lambda) {
    int n = th.n();
    return c_N_recursive(th).substitute(rings::macdonald(n), specialization_images(lambda, n));
}

// The specialized series: checks that every theta outside Pol_lambda with
// entries <= lambda_1 + 1 drops out and returns the surviving finite sum.
inline SymmetricPolynomial specialize_f_to_P(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) throw InvalidArgument("partition longer than rank");
    RingPtr r = rings::macdonald(n);
    std::vector<ThetaMatrix> ths = thetas_bounded(n, lambda[1] + 1);
    auto cs = parallel_map<FactoredRational>(ths.size(), [&](std::size_t k) {
        return specialized_coefficient(ths[k], lambda);
    });
    std::vector<RationalFunction> terms;
    for (std::size_t k = 0; k < ths.size(); ++k) {
        bool inside = in_pol_lambda(ths[k], lambda);
        if (!inside && !cs[k].is_zero())
            throw TerminationFailure("coefficient at theta " + ths[k].to_string() + " outside Pol" + lambda.to_string() +
                                     " survives specialization");
        if (inside)
            terms.push_back(RationalFunction::from(cs[k]) *
                            Poly::monomial(r, y_monomial(r, strip_sizes(ths[k], lambda))));
    }
    return SymmetricPolynomial(n, RationalFunction::sum(r, terms));
}

// Residual of (D^1_N - sum z_i) on the series, in the ratio variables.
// T_{q,y_i} acts on y^lambda by s^{i-N} z_i and on x^alpha by
// q^{alpha_{i-1} - alpha_i}.
inline XSeries dai_ichi_residual(int n, int d) {
    RingPtr r = rings::spectral(n);
    int m = n - 1;
    XSeries f = f_N_series(n, d);
    Poly one = Poly::constant(r, 1);
    Poly s = Poly::variable(r, "s");
    XSeries acc(r, m, d);
    Poly zsum(r);
    for (int i = 1; i <= n; ++i) {
        Poly zi = Poly::variable(r, "z" + std::to_string(i));
        zsum = zsum + zi;
        XSeries a = XSeries::one(r, m, d);
        // (1 - s y_i/y_j)/(1 - y_i/y_j) for j < i, (s - y_j/y_i)/(1 - y_j/y_i) for j > i
        for (int j = 1; j < i; ++j) a = a * XSeries::ratio(r, m, d, span_index(m, j, i), one, s, one);
        for (int j = i + 1; j <= n; ++j) a = a * XSeries::ratio(r, m, d, span_index(m, i, j), s, one, one);
        XSeries g = f;
        if (i >= 2) g = g.qshifted(i - 1, 1);
        if (i <= m) g = g.qshifted(i, -1);
        acc = acc + (a * g).scaled(zi * Poly::variable(r, "s", i - n));
    }
    return acc - f.scaled(zsum);
}

inline std::string alpha_string(const MultiIndex& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

inline VerificationReport verify_dai_ichi(int n, int d) {
    VerificationReport rep;
    rep.check = "dai_ichi";
    rep.parameters = {{"n", n}, {"truncation", d}};
    XSeries res = dai_ichi_residual(n, d);
    for (const auto& [a, c] : res.coefficients())
        rep.fail({alpha_string(a), "0", c.to_factored().to_string()});
    rep.details["coefficients_checked"] = multi_indices(n - 1, d).size();
    return rep;
}

}  // namespace maclab
