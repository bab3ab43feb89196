#pragma once

// Macdonald polynomials P_lambda(y; q, s) in N variables.
//
// Two independent constructions: the tableau sum over Pol_lambda, and an
// eigenvector solve for the first Macdonald operator in the monomial basis.
// Polynomials live in the ring (q, s, y1..yN); s is the second Macdonald
// parameter.

#include <algorithm>
#include <map>

#include "maclab/parallel.hpp"
#include "maclab/partitions.hpp"
#include "maclab/q_calculus.hpp"
#include "maclab/rational_function.hpp"

namespace maclab {

class SymmetricPolynomial {
public:
    SymmetricPolynomial() = default;
    SymmetricPolynomial(int n, RationalFunction value) : n_(n), value_(std::move(value)) {}

    int n() const { return n_; }
    const RationalFunction& value() const { return value_; }
    const RingPtr& ring() const { return value_.ring(); }

    // Coefficients of the monomial symmetric functions m_mu, keyed by mu.
    std::map<Partition, FactoredRational> m_expansion() const {
        const RingPtr& r = ring();
        std::size_t y0 = r->index("y1");
        std::map<Partition, std::vector<Poly::Term>> coefs;
        for (const auto& t : value_.numerator().terms()) {
            std::vector<int> e(static_cast<std::size_t>(n_));
            bool sorted = true;
            for (int i = 0; i < n_; ++i) {
                e[i] = t.mono[y0 + i];
                if (e[i] < 0 || (i > 0 && e[i] > e[i - 1])) sorted = false;
            }
            if (!sorted) continue;
            Monomial m = t.mono;
            for (int i = 0; i < n_; ++i) m[y0 + i] = 0;
            coefs[Partition(e)].push_back({m, t.coef});
        }
        std::map<Partition, FactoredRational> out;
        for (auto& [mu, ts] : coefs) {
            FactoredRational c = FactoredRational::from_poly(Poly::from_terms(r, std::move(ts)));
            for (const auto& [f, k] : value_.denominator_factors()) c.mul_factor(f, -k);
            out.emplace(mu, reduced(c));
        }
        return out;
    }

    bool is_symmetric() const {
        const RingPtr& r = ring();
        std::size_t y0 = r->index("y1");
        for (int i = 0; i + 1 < n_; ++i) {
            std::vector<Monomial> images;
            for (std::size_t v = 0; v < r->size(); ++v) {
                Monomial m;
                std::size_t w = v;
                if (v == y0 + i) w = y0 + i + 1;
                if (v == y0 + i + 1) w = y0 + i;
                m[w] = 1;
                images.push_back(m);
            }
            if (value_.numerator().substitute(r, images) != value_.numerator()) return false;
        }
        return true;
    }

    friend bool operator==(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
        return a.n_ == b.n_ && a.value_ == b.value_;
    }

private:
    int n_ = 0;
    RationalFunction value_;
};

inline Monomial y_monomial(const RingPtr& ring, const std::vector<int>& exps) {
    Monomial m;
    std::size_t y0 = ring->index("y1");
    for (std::size_t i = 0; i < exps.size(); ++i) m[y0 + i] = static_cast<Monomial::value_type>(exps[i]);
    return m;
}

// Sum of the distinct rearrangements of y^mu.
inline SymmetricPolynomial monomial_symmetric(const Partition& mu, int n) {
    if (static_cast<int>(mu.length()) > n) throw InvalidArgument("partition longer than the number of variables");
    RingPtr r = rings::macdonald(n);
    std::vector<int> e = mu.padded(static_cast<std::size_t>(n));
    std::sort(e.begin(), e.end());
    std::vector<Poly::Term> terms;
    do {
        terms.push_back({y_monomial(r, e), 1});
    } while (std::next_permutation(e.begin(), e.end()));
    return SymmetricPolynomial(n, RationalFunction(Poly::from_terms(r, std::move(terms))));
}

// sum_i q^{lambda_i} s^{N-i}
inline Poly macdonald_eigenvalue(const Partition& lambda, int n) {
    RingPtr r = rings::macdonald(n);
    std::vector<Poly::Term> terms;
    for (int i = 1; i <= n; ++i) terms.push_back({r->var("q", lambda[i]) * r->var("s", n - i), 1});
    return Poly::from_terms(r, std::move(terms));
}

// Tableau coefficient of theta in Pol_lambda, as a product of Pochhammer
// ratios over the chain lambda^(0) .. lambda^(N).
inline FactoredRational psi_T(const ThetaMatrix& theta, const Partition& lambda) {
    int n = theta.n();
    RingPtr r = rings::macdonald(n);
    std::vector<Partition> chain = theta_to_tableau(theta, lambda);
    FactoredRational out = FactoredRational::one(r);
    auto qs = [&](int a, int b) { return r->var("q", a) * r->var("s", b); };
    for (int k = 2; k <= n; ++k) {
        const Partition& cur = chain[k];
        const Partition& prev = chain[k - 1];
        for (int i = 1; i <= k - 1; ++i) {
            int len = theta(i, k);
            if (len == 0) continue;
            for (int j = i; j <= k - 1; ++j) {
                int a = -cur[i] + prev[j];
                int b = -cur[i] + cur[j + 1];
                out *= pochhammer(r, qs(a + 1, i - j - 1), len);
                out /= pochhammer(r, qs(a, i - j), len);
                out *= pochhammer(r, qs(b, i - j), len);
                out /= pochhammer(r, qs(b + 1, i - j - 1), len);
            }
        }
    }
    return out;
}

// P_lambda as the tableau sum  sum_theta psi_T(theta) y^{weight(theta)}.
inline SymmetricPolynomial macdonald_P(const Partition& lambda, int n) {
    RingPtr r = rings::macdonald(n);
    std::vector<ThetaMatrix> thetas = enumerate_pol_lambda(lambda, n);
    auto terms = parallel_map<RationalFunction>(thetas.size(), [&](std::size_t k) {
        const ThetaMatrix& t = thetas[k];
        return RationalFunction::from(psi_T(t, lambda)) * Poly::monomial(r, y_monomial(r, strip_sizes(t, lambda)));
    });
    return SymmetricPolynomial(n, RationalFunction::sum(r, terms));
}

namespace detail {

// Numerator of D^1_N applied to the polynomial `num` (no y-denominators).
inline Poly apply_D1N_numerator(const Poly& num, int n) {
    const RingPtr& r = num.ring();
    auto y = [&](int i) { return Poly::variable(r, "y" + std::to_string(i)); };
    Poly s = Poly::variable(r, "s");
    Poly total(r);
    for (int i = 1; i <= n; ++i) {
        // (-1)^(i-1) * prod_{a<b, a,b != i}(y_a - y_b) * prod_{j != i}(s y_i - y_j)
        std::vector<Poly> parts{apply_qshift(num, {"y" + std::to_string(i), 1})};
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (a != i && b != i) parts.push_back(y(a) - y(b));
        for (int j = 1; j <= n; ++j)
            if (j != i) parts.push_back(s * y(i) - y(j));
        Poly term = product(r, std::move(parts));
        total = (i % 2 == 1) ? total + term : total - term;
    }
    // divide by the Vandermonde one linear factor at a time
    try {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) total = total.divide_exact(y(a) - y(b));
    } catch (const NotDivisible&) {
        throw DenominatorSurvives("D1N: Vandermonde does not divide; input is not symmetric");
    }
    return total;
}

}  // namespace detail

// sum_i prod_{j != i} (s y_i - y_j)/(y_i - y_j) T_{q,y_i} f
inline SymmetricPolynomial apply_D1N(const SymmetricPolynomial& f) {
    return SymmetricPolynomial(f.n(), f.value().with_numerator(detail::apply_D1N_numerator(f.value().numerator(), f.n())));
}

// Partitions mu of |lambda| with mu <= lambda in dominance, decreasing lex.
inline std::vector<Partition> dominated_partitions(const Partition& lambda, int n) {
    std::vector<Partition> out;
    for (const auto& mu : partitions_of(lambda.size(), static_cast<std::size_t>(n)))
        if (dominated_by(mu, lambda)) out.push_back(mu);
    return out;
}

// Independent construction: the eigenvector of D^1_N with the m_lambda
// coefficient normalized to 1, by back substitution in the m-basis.
inline SymmetricPolynomial macdonald_P_oracle(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) throw InvalidArgument("partition longer than the number of variables");
    RingPtr r = rings::macdonald(n);
    std::vector<Partition> mus = dominated_partitions(lambda, n);  // mus[0] == lambda
    std::size_t m = mus.size();
    // D m_nu, read off on m_mu
    auto images = parallel_map<std::map<Partition, FactoredRational>>(m, [&](std::size_t k) {
        return apply_D1N(monomial_symmetric(mus[k], n)).m_expansion();
    });
    Poly e_lambda = macdonald_eigenvalue(lambda, n);
    std::vector<RationalFunction> u(m, RationalFunction::zero(r));
    u[0] = RationalFunction(Poly::constant(r, 1));
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<RationalFunction> acc;
        for (std::size_t v = 0; v < k; ++v) {
            auto it = images[v].find(mus[k]);
            if (it == images[v].end() || u[v].is_zero()) continue;
            acc.push_back(u[v] * RationalFunction::from(it->second));
        }
        Poly gap = e_lambda - macdonald_eigenvalue(mus[k], n);
        if (gap.is_zero())
            throw EigenvalueCollision("eigenvalues of " + lambda.to_string() + " and " + mus[k].to_string() + " coincide");
        RationalFunction s = RationalFunction::sum(r, acc);
        u[k] = s * RationalFunction::from(FactoredRational::from_poly(gap, -1));
    }
    std::vector<RationalFunction> parts;
    for (std::size_t k = 0; k < m; ++k)
        if (!u[k].is_zero()) parts.push_back(u[k] * monomial_symmetric(mus[k], n).value().numerator());
    return SymmetricPolynomial(n, RationalFunction::sum(r, parts));
}

// Maps a polynomial of (q, s, y1..yN) into (q, t, z1..zN) with s -> t, y -> z.
inline Poly to_spectral_names(const Poly& p, const RingPtr& target) {
    const RingPtr& r = p.ring();
    std::vector<Monomial> images;
    for (std::size_t v = 0; v < r->size(); ++v) {
        std::string name = r->name(v);
        if (name == "s") name = "t";
        if (name[0] == 'y') name = "z" + name.substr(1);
        images.push_back(target->var(name));
    }
    return p.substitute(target, images);
}

}  // namespace maclab
