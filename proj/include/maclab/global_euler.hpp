#pragma once

// Euler characteristics of twisted De Rham complexes of global Laumon
// spaces: the finite Weyl sums over fixed points, their stable limit H,
// the Betti limit H_0, the difference operator on weights and its Pieri
// counterpart, and the closed form through Macdonald polynomials.

#include <numeric>
#include <optional>

#include "maclab/laumon.hpp"
#include "maclab/macdonald.hpp"

namespace maclab {

// A GL(N) coweight, stored by components. The fundamental coweight w_i is
// e_1 + ... + e_i, so l_i = c_i - c_{i+1}.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> components) : c_(std::move(components)) {
        if (c_.empty()) throw InvalidArgument("weight needs at least one component");
    }
    // sum l_i w_i with last component 0.
    static GLWeight from_l(int n, const std::vector<int>& l) {
        if (static_cast<int>(l.size()) != n - 1) throw InvalidArgument("need N-1 fundamental coordinates");
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (int i = n - 2; i >= 0; --i) c[i] = c[i + 1] + l[i];
        return GLWeight(c);
    }
    static GLWeight zero(int n) { return GLWeight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static GLWeight fundamental(int n, int i) {
        std::vector<int> l(static_cast<std::size_t>(n - 1), 0);
        l[i - 1] = 1;
        return from_l(n, l);
    }

    int n() const { return static_cast<int>(c_.size()); }
    const std::vector<int>& components() const { return c_; }
    int operator[](int i) const { return c_[i - 1]; }
    std::vector<int> l() const {
        std::vector<int> out;
        for (int i = 1; i < n(); ++i) out.push_back(c_[i - 1] - c_[i]);
        return out;
    }
    bool is_dominant() const {
        for (int x : l())
            if (x < 0) return false;
        return true;
    }
    // <gamma, weight> with gamma in simple coroots.
    int pairing(const MultiIndex& gamma) const {
        auto ls = l();
        if (gamma.size() != ls.size()) throw InvalidArgument("degree vector has wrong length");
        return std::inner_product(gamma.begin(), gamma.end(), ls.begin(), 0);
    }
    // T_r lowers l_r and raises l_{r-1}; on components it is c - e_r.
    GLWeight T(int r) const {
        if (r < 1 || r > n()) throw InvalidArgument("T_r needs 1 <= r <= N");
        GLWeight w = *this;
        --w.c_[r - 1];
        return w;
    }
    GLWeight shifted(int k) const {
        GLWeight w = *this;
        for (int& x : w.c_) x += k;
        return w;
    }
    // The partition c - c_N (dominant weights only).
    Partition partition() const {
        require_dominant();
        std::vector<int> p;
        for (int x : c_) p.push_back(x - c_.back());
        return Partition(p);
    }
    // (l_1 + ... + l_{N-1}, ..., l_1, 0): the reading under which T_r adds a
    // box in row N - r + 1. Equals the partition of -w0 of the weight.
    Partition reversed_partition() const {
        require_dominant();
        std::vector<int> p;
        for (int i = n(); i >= 1; --i) p.push_back(c_.front() - c_[i - 1]);
        return Partition(p);
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + ")";
    }
    friend bool operator==(const GLWeight& a, const GLWeight& b) { return a.c_ == b.c_; }

private:
    std::vector<int> c_;
    void require_dominant() const {
        if (!is_dominant()) throw InvalidArgument("weight " + to_string() + " is not dominant");
    }
};

// A permutation w of {1..N}; acts on z by z_i -> z_{w(i)}.
class WeylElement {
public:
    explicit WeylElement(std::vector<int> perm) : p_(std::move(perm)) {
        std::vector<int> s = p_;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != static_cast<int>(i) + 1) throw InvalidArgument("not a permutation");
    }
    static WeylElement identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 1);
        return WeylElement(p);
    }
    static std::vector<WeylElement> all(int n) {
        std::vector<WeylElement> out;
        std::vector<int> p = identity(n).p_;
        do out.emplace_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
    int n() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_[i - 1]; }
    const std::vector<int>& permutation() const { return p_; }
    int sign() const {
        int inv = 0;
        for (std::size_t i = 0; i < p_.size(); ++i)
            for (std::size_t j = i + 1; j < p_.size(); ++j)
                if (p_[i] > p_[j]) ++inv;
        return inv % 2 ? -1 : 1;
    }
    // (a b)(i) = a(b(i))
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        std::vector<int> p;
        for (int i = 1; i <= b.n(); ++i) p.push_back(a(b(i)));
        return WeylElement(p);
    }
    WeylElement inverse() const {
        std::vector<int> p(p_.size());
        for (int i = 1; i <= n(); ++i) p[p_[i - 1] - 1] = i;
        return WeylElement(p);
    }
    // (w c)_{w(i)} = c_i, so that z^{w c} is z^c with z_i -> z_{w(i)}.
    GLWeight act(const GLWeight& c) const {
        std::vector<int> out(p_.size());
        for (int i = 1; i <= n(); ++i) out[p_[i - 1] - 1] = c[i];
        return GLWeight(out);
    }
    Poly act(const Poly& f) const { return f.substitute(f.ring(), laumon_images(n(), 1, p_)); }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.p_ == b.p_; }

private:
    std::vector<int> p_;
};

namespace detail {

inline Poly z_power(const RingPtr& r, const GLWeight& c) {
    Monomial m;
    for (int i = 1; i <= c.n(); ++i) m = m * r->var("z" + std::to_string(i), c[i]);
    return Poly::monomial(r, m);
}

inline Poly z_var(const RingPtr& r, int i) { return Poly::variable(r, "z" + std::to_string(i)); }

// prod_{i<j} (z_i - t z_j) and prod_{i<j} (z_i - z_j): the Weyl product
// prod (1 - t z_j/z_i)/(1 - z_j/z_i) with its common monomial cancelled.
inline Poly weyl_numerator(const RingPtr& r, int n) {
    Poly t = Poly::variable(r, "t");
    Poly out = Poly::constant(r, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out = out * (z_var(r, i) - t * z_var(r, j));
    return out;
}
inline Poly vandermonde(const RingPtr& r, int n) {
    Poly out = Poly::constant(r, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out = out * (z_var(r, i) - z_var(r, j));
    return out;
}

}  // namespace detail

// sum_w w( f prod_{i<j} (1 - t z_j/z_i)/(1 - z_j/z_i) ), computed as the
// antisymmetrization of f prod (z_i - t z_j) divided by the Vandermonde.
inline Poly weyl_symmetrize(const Poly& f, int n) {
    const RingPtr& r = f.ring();
    Poly g = f * detail::weyl_numerator(r, n);
    Poly acc(r);
    for (const auto& w : WeylElement::all(n)) acc = w.sign() > 0 ? acc + w.act(g) : acc - w.act(g);
    return acc.divide_exact(detail::vandermonde(r, n));
}

// Exact form of the same sum for a rational function f.
inline RationalFunction weyl_symmetrize(const RationalFunction& f, int n) {
    const RingPtr& r = f.ring();
    RationalFunction g = f * detail::weyl_numerator(r, n);
    std::vector<RationalFunction> parts;
    for (const auto& w : WeylElement::all(n)) {
        FactoredRational h = g.to_factored().substitute(r, laumon_images(n, 1, w.permutation()));
        parts.push_back(RationalFunction::from(h * FactoredRational(r, w.sign(), Monomial{})));
    }
    RationalFunction sum = RationalFunction::sum(r, parts);
    Poly num = sum.numerator().divide_exact(detail::vandermonde(r, n));
    // cancel whatever the numerator shares with the denominator
    FactoredRational out = FactoredRational::one(r);
    for (const auto& [f, k] : sum.denominator_factors()) {
        int left = k;
        while (left > 0 && f.divides(num)) {
            num = num.divide_exact(f);
            --left;
        }
        if (left > 0) out.mul_factor(f, -left);
    }
    return RationalFunction::from(out * FactoredRational::from_poly(num));
}

// J_gamma with q inverted, as an exact rational function.
inline RationalFunction J_alpha_inverted_exact(int n, const MultiIndex& gamma) {
    RingPtr r = rings::laumon(n);
    auto im = laumon_images(n, -1);
    std::vector<RationalFunction> parts;
    for (const auto& th : thetas_with_degree(n, gamma)) parts.push_back(RationalFunction::from(C_theta(th).substitute(r, im)));
    return RationalFunction::sum(r, parts);
}

inline RationalFunction J_alpha_exact(int n, const MultiIndex& beta) {
    RingPtr r = rings::laumon(n);
    std::vector<RationalFunction> parts;
    for (const auto& th : thetas_with_degree(n, beta)) parts.push_back(RationalFunction::from(C_theta(th)));
    return RationalFunction::sum(r, parts);
}

// All gamma with 0 <= gamma <= alpha componentwise.
inline std::vector<MultiIndex> sub_degrees(const MultiIndex& alpha) {
    std::vector<MultiIndex> out;
    MultiIndex cur(alpha.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == alpha.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= alpha[pos]; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// The finite sum over splittings gamma + beta = alpha and w in S_N of
//   z^{w c} q^{<gamma, c>} J_gamma(q^-1, t, wz) J_beta(q, t, wz)
//   prod_{i<j} (1 - t wz_j/wz_i)/(1 - wz_j/wz_i),
// exactly. It is a Laurent polynomial; anything else raises.
inline FactoredRational euler_char_global(const MultiIndex& alpha, const GLWeight& c) {
    int n = c.n();
    RingPtr r = rings::laumon(n);
    if (static_cast<int>(alpha.size()) != n - 1) throw InvalidArgument("degree vector has wrong length");
    auto gammas = sub_degrees(alpha);
    auto parts = parallel_map<RationalFunction>(gammas.size(), [&](std::size_t k) {
        const MultiIndex& g = gammas[k];
        MultiIndex b(alpha.size());
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = alpha[i] - g[i];
        return (J_alpha_inverted_exact(n, g) * J_alpha_exact(n, b)).scaled(1, r->var("q", c.pairing(g)));
    });
    RationalFunction s = RationalFunction::sum(r, parts) * detail::z_power(r, c);
    FactoredRational out = weyl_symmetrize(s, n).to_factored();
    for (const auto& [f, k] : out.factors())
        if (k < 0) throw DenominatorSurvives("Weyl sum keeps the factor " + f.to_string());
    return out;
}

namespace detail {

// q^{<gamma,c>} J_gamma(q^-1) to order M, or nothing when every term of the
// theta sum starts above M.
inline std::optional<Poly> weighted_inverted_piece(int n, const MultiIndex& gamma, int shift, int order) {
    RingPtr r = rings::laumon(n);
    auto im = laumon_images(n, -1);
    PoleClearingSum acc(r, order - shift);
    bool any = false;
    for (const auto& th : thetas_with_degree(n, gamma)) {
        FactoredRational c = C_theta(th).substitute(r, im);
        if (valuation(c) + shift > order) continue;
        acc.add(c);
        any = true;
    }
    if (!any) return std::nullopt;
    Poly p = acc.finish().poly().scaled(1, r->var("q", shift));
    if (p.is_zero()) return std::nullopt;
    return p;
}

}  // namespace detail

// (q,t)-expansion of euler_char_global to total order M.
inline Poly euler_char_series(const MultiIndex& alpha, const GLWeight& c, int order) {
    int n = c.n();
    RingPtr r = rings::laumon(n);
    Grading g = qt_grading(r);
    auto gammas = sub_degrees(alpha);
    auto parts = parallel_map<Poly>(gammas.size(), [&](std::size_t k) {
        const MultiIndex& gm = gammas[k];
        auto m = detail::weighted_inverted_piece(n, gm, c.pairing(gm), order);
        if (!m) return Poly(r);
        MultiIndex b(alpha.size());
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = alpha[i] - gm[i];
        int vm = m->min_degree(g);
        QTSeries p = J_alpha(n, b, order - std::min(0, vm));
        return Poly::multiply(*m, p.poly(), &g, order);
    });
    Poly s(r);
    for (const auto& p : parts) s = s + p;
    s = (s * detail::z_power(r, c)).truncated(g, order);
    return weyl_symmetrize(s, n).truncated(g, order);
}

// The part of a series a formal Taylor series can carry: nonnegative q and
// t exponents.
inline Poly taylor_part(const Poly& p) {
    const RingPtr& r = p.ring();
    std::size_t qi = r->index("q"), ti = r->index("t");
    return p.filtered([&](const Monomial& m) { return m[qi] >= 0 && m[ti] >= 0; });
}

struct HLimitResult {
    QTSeries series;
    VerificationReport report;
};

// Expands the finite sums along `schedule` and requires the Taylor parts of
// the last two to agree below order M. Terms with negative q-exponent may
// persist at any finite alpha; they drift to ever lower q-powers and are
// recorded in the report.
inline HLimitResult H_limit(const GLWeight& c, const std::vector<MultiIndex>& schedule, int order) {
    int n = c.n();
    RingPtr r = rings::laumon(n);
    if (schedule.size() < 2) throw InvalidArgument("schedule needs at least two points");
    HLimitResult out;
    VerificationReport& rep = out.report;
    rep.check = "h_limit";
    Json sched = Json::array();
    for (const auto& a : schedule) sched.push_back(a);
    rep.parameters = {{"n", n}, {"weight", c.components()}, {"order", order}, {"schedule", sched}};
    std::vector<Poly> full;
    for (const auto& a : schedule) full.push_back(euler_char_series(a, c, order));
    std::vector<Poly> taylor;
    for (const auto& p : full) taylor.push_back(taylor_part(p));
    const Poly& last = taylor.back();
    QTSeries a(taylor[taylor.size() - 2], order), b(last, order);
    for (const auto& k : series_differences(a, b, order))
        rep.fail({alpha_string(schedule.back()) + " " + bidegree_string(k), to_string_coef(a, k), to_string_coef(b, k)},
                 Status::NotStabilized);
    std::size_t first = taylor.size() - 1;
    while (first > 0 && taylor[first - 1] == last) --first;
    rep.details["stable_from"] = schedule[first];
    rep.details["negative_q_terms_at_last"] = (full.back() - last).terms().size();
    out.series = QTSeries(last, order);
    return out;
}

// Default sector schedule for H_limit: alpha_k = (2^{N-2} k, ..., 2k, k).
inline std::vector<MultiIndex> h_schedule(int n, int points) { return sector_schedule(n, points); }

// H_0(t) = W(t) / ( prod_{k=2}^{N-1} (1-t^k)^{2(N-k)} (1-t^N) (1-t)^{N-2} ),
// W(t) = prod_{k=1}^{N-1} (1 + t + ... + t^k).
inline FactoredRational H0_closed(int n) {
    if (n < 2) throw InvalidArgument("H_0 needs N >= 2");
    RingPtr r = rings::laumon(n);
    Poly one = Poly::constant(r, 1);
    auto tk = [&](int k) { return Poly::variable(r, "t", k); };
    FactoredRational out = FactoredRational::one(r);
    for (int k = 1; k <= n - 1; ++k) {
        Poly s(r);
        for (int e = 0; e <= k; ++e) s = s + tk(e);
        out *= FactoredRational::from_poly(s);
    }
    for (int k = 2; k <= n - 1; ++k) out /= FactoredRational::from_poly(one - tk(k), 2 * (n - k));
    out /= FactoredRational::from_poly(one - tk(n));
    if (n > 2) out /= FactoredRational::from_poly(one - tk(1), n - 2);
    return out;
}

// F(t) to t-order `order` by counting: multisets of nonsimple positive
// roots alpha (weight height - 1) together with multisets of positive roots
// beta (weight height + 1).
inline std::vector<long long> F_poly(int n, int order) {
    std::vector<int> weights;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            int h = b - a;
            if (h >= 2) weights.push_back(h - 1);
            weights.push_back(h + 1);
        }
    // counts[i] = number of multisets of total weight i, one root kind at a time
    std::vector<long long> counts(static_cast<std::size_t>(order + 1), 0);
    counts[0] = 1;
    for (int w : weights)
        for (int i = w; i <= order; ++i) counts[i] += counts[i - w];
    return counts;
}

// t-coefficients of W(t) F(t) to the given order.
inline std::vector<long long> WF_series(int n, int order) {
    std::vector<long long> w{1};
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<long long> nw(w.size() + k, 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (int e = 0; e <= k; ++e) nw[i + e] += w[i];
        w = nw;
    }
    auto f = F_poly(n, order);
    std::vector<long long> out(static_cast<std::size_t>(order + 1), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; i + j <= static_cast<std::size_t>(order); ++j) out[i + j] += w[i] * f[j];
    return out;
}

namespace detail {

inline FactoredRational one_minus(const RingPtr& r, int tpow, int qpow) {
    return FactoredRational::from_poly(Poly::constant(r, 1) - Poly::monomial(r, r->var("t", tpow) * r->var("q", qpow)));
}

// l_a + ... + l_b (1-based, inclusive).
inline int lsum(const std::vector<int>& l, int a, int b) {
    int s = 0;
    for (int i = a; i <= b; ++i) s += l[i - 1];
    return s;
}

}  // namespace detail

// Coefficient K_r of the difference operator on weights:
//   prod_{d=1}^{N-r} (1 - t^{d+1} q^{S_d - 1}) / (1 - t^d q^{S_d}),   S_d = l_r + ... + l_{r+d-1}
//   prod_{e=1}^{r-1} (1 - t^{e-1} q^{S'_e + 1}) / (1 - t^e q^{S'_e}), S'_e = l_{r-e} + ... + l_{r-1}
inline FactoredRational frakD_K(const GLWeight& c, int r) {
    int n = c.n();
    if (r < 1 || r > n) throw InvalidArgument("K_r needs 1 <= r <= N");
    RingPtr R = rings::laumon(n);
    auto l = c.l();
    FactoredRational out = FactoredRational::one(R);
    for (int d = 1; d <= n - r; ++d) {
        int s = detail::lsum(l, r, r + d - 1);
        out *= detail::one_minus(R, d + 1, s - 1) / detail::one_minus(R, d, s);
    }
    for (int e = 1; e <= r - 1; ++e) {
        int s = detail::lsum(l, r - e, r - 1);
        out *= detail::one_minus(R, e - 1, s + 1) / detail::one_minus(R, e, s);
    }
    return out;
}

// Pieri coefficient L_r for adding a box in row N - r + 1 of the reversed
// partition:
//   prod_{d=1}^{N-r} (1 - t^{d-1} q^{S_d})(1 - t^{d+1} q^{S_d - 1})
//                    / ((1 - t^d q^{S_d})(1 - t^d q^{S_d - 1})).
inline FactoredRational pieri_L(const GLWeight& c, int r) {
    int n = c.n();
    if (r < 1 || r > n) throw InvalidArgument("L_r needs 1 <= r <= N");
    RingPtr R = rings::laumon(n);
    auto l = c.l();
    FactoredRational out = FactoredRational::one(R);
    for (int d = 1; d <= n - r; ++d) {
        int s = detail::lsum(l, r, r + d - 1);
        out *= detail::one_minus(R, d - 1, s) * detail::one_minus(R, d + 1, s - 1);
        out /= detail::one_minus(R, d, s) * detail::one_minus(R, d, s - 1);
    }
    return out;
}

// prod_{1<=i<=j<=N-1} (t^{j-i+1};q)_{l_i+..+l_j} / (t^{j-i} q;q)_{l_i+..+l_j}
inline FactoredRational h_prefactor(const GLWeight& c) {
    int n = c.n();
    RingPtr R = rings::laumon(n);
    auto l = c.l();
    Monomial q = R->var("q"), t = R->var("t");
    FactoredRational out = FactoredRational::one(R);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            int s = detail::lsum(l, i, j);
            if (s < 0) throw InvalidArgument("prefactor needs a dominant weight");
            out *= pochhammer(R, t.pow(j - i + 1), s) / pochhammer(R, t.pow(j - i) * q, s);
        }
    return out;
}

// P_lambda in (q, t, z) with the Macdonald parameter named t.
inline FactoredRational macdonald_P_laumon(const Partition& lambda, int n) {
    RingPtr src = rings::macdonald(n), dst = rings::laumon(n);
    std::vector<Monomial> im(src->size());
    im[src->index("q")] = dst->var("q");
    im[src->index("s")] = dst->var("t");
    for (int i = 1; i <= n; ++i) im[src->index("y" + std::to_string(i))] = dst->var("z" + std::to_string(i));
    return macdonald_P(lambda, n).value().to_factored().substitute(dst, im);
}

// Which partition a weight is paired with.
enum class WeightReading { Components, Reversed };

inline const char* reading_name(WeightReading w) { return w == WeightReading::Components ? "components" : "reversed"; }

// GL-level Macdonald polynomial of a dominant weight:
//   Components: (z_1..z_N)^{c_N} P_{c - c_N}(z)
//   Reversed:   (z_1..z_N)^{-c_1} P_{reversed}(z)
inline FactoredRational weight_P(const GLWeight& c, WeightReading reading) {
    int n = c.n();
    RingPtr R = rings::laumon(n);
    Monomial all;
    for (int i = 1; i <= n; ++i) all = all * R->var("z" + std::to_string(i));
    if (reading == WeightReading::Components)
        return macdonald_P_laumon(c.partition(), n) * FactoredRational(R, 1, all.pow(c[n]));
    return macdonald_P_laumon(c.reversed_partition(), n) * FactoredRational(R, 1, all.pow(-c[1]));
}

struct HEqualsP {
    FactoredRational prefactor;  // H_0 times the Pochhammer product
    FactoredRational P;
    FactoredRational value() const { return prefactor * P; }
};

// H = H_0 prod (...) P for a dominant weight. The components reading is the
// one that matches the stable limit of the Weyl sums.
inline HEqualsP h_equals_p(const GLWeight& c, WeightReading reading = WeightReading::Components) {
    if (!c.is_dominant()) throw InvalidArgument("h_equals_p needs a dominant weight, got " + c.to_string());
    return {H0_closed(c.n()) * h_prefactor(c), weight_P(c, reading)};
}

// Compares H_limit with the closed form to order M.
inline VerificationReport verify_h_equals_p(const GLWeight& c, const std::vector<MultiIndex>& schedule, int order) {
    HLimitResult h = H_limit(c, schedule, order);
    VerificationReport rep;
    rep.check = "hp";
    rep.parameters = {{"n", c.n()}, {"weight", c.components()}, {"order", order}};
    rep.absorb(h.report);
    QTSeries closed = expand(h_equals_p(c).value(), order);
    for (const auto& k : series_differences(h.series, closed, order))
        rep.fail({bidegree_string(k), to_string_coef(closed, k), to_string_coef(h.series, k)});
    rep.details["stable_from"] = h.report.details["stable_from"];
    return rep;
}

namespace detail {

// Checks sum(parts) = e * g, exactly or at seeded points.
inline void compare_sum(VerificationReport& rep, const std::string& index, const std::vector<FactoredRational>& parts,
                        const FactoredRational& g, const Poly& e, EqualityMode mode) {
    const RingPtr& R = g.ring();
    if (mode == EqualityMode::Preview) {
        bool same = rational_eq_probabilistic(
            R,
            [&](const std::vector<Rational>& pt) {
                Rational s = 0;
                for (const auto& p : parts) s += p.evaluate(pt);
                return s;
            },
            [&](const std::vector<Rational>& pt) { return Rational(g.evaluate(pt) * e.evaluate(pt)); });
        if (same)
            rep.mark_preview();
        else
            rep.fail({index, "agreement at sample points", "disagreement"});
        return;
    }
    std::vector<RationalFunction> rf;
    for (const auto& p : parts) rf.push_back(RationalFunction::from(p));
    RationalFunction lhs = RationalFunction::sum(R, rf);
    RationalFunction rhs = RationalFunction::from(g) * e;
    if (!(lhs == rhs)) rep.fail({index, rhs.to_factored().to_string(), lhs.to_factored().to_string()});
}

}  // namespace detail

// sum_r K_r(c) G_{T_r c} against the eigenvalue times G_c, with
// G = H_0 prod (...) P and G of a nondominant weight set to 0. Reversed
// reading: eigenvalue z_1 + ... + z_N, and T_r adds a box to the reversed
// partition. Components reading: eigenvalue z_1^-1 + ... + z_N^-1, and T_r
// removes a box from row r.
inline VerificationReport verify_cor_diff(const GLWeight& c, WeightReading reading = WeightReading::Reversed,
                                          EqualityMode mode = EqualityMode::Exact) {
    int n = c.n();
    RingPtr R = rings::laumon(n);
    VerificationReport rep;
    rep.check = "cordiff";
    rep.parameters = {{"n", n}, {"weight", c.components()}, {"reading", reading_name(reading)}};
    if (!c.is_dominant()) throw InvalidArgument("cordiff needs a dominant weight, got " + c.to_string());
    auto G = [&](const GLWeight& w) { return h_equals_p(w, reading).value(); };
    std::vector<FactoredRational> parts;
    for (int r = 1; r <= n; ++r) {
        GLWeight w = c.T(r);
        if (!w.is_dominant()) continue;
        parts.push_back(frakD_K(c, r) * G(w));
    }
    Poly e(R);
    for (int i = 1; i <= n; ++i) e = e + Poly::variable(R, "z" + std::to_string(i), reading == WeightReading::Reversed ? 1 : -1);
    detail::compare_sum(rep, c.to_string(), parts, G(c), e, mode);
    return rep;
}

// Pieri rule in the reversed reading: sum_r L_r P_{T_r c} = (z_1 + ... + z_N) P_c.
inline VerificationReport verify_pieri(const GLWeight& c, EqualityMode mode = EqualityMode::Exact) {
    int n = c.n();
    RingPtr R = rings::laumon(n);
    VerificationReport rep;
    rep.check = "pieri";
    rep.parameters = {{"n", n}, {"weight", c.components()}};
    std::vector<FactoredRational> parts;
    for (int r = 1; r <= n; ++r) {
        GLWeight w = c.T(r);
        if (!w.is_dominant()) continue;
        parts.push_back(pieri_L(c, r) * weight_P(w, WeightReading::Reversed));
    }
    Poly e(R);
    for (int i = 1; i <= n; ++i) e = e + Poly::variable(R, "z" + std::to_string(i));
    detail::compare_sum(rep, c.to_string(), parts, weight_P(c, WeightReading::Reversed), e, mode);
    return rep;
}

// prod_{i=1}^{N-2} ((t^i;q)_inf / (q t^{i+1};q)_inf)^{N-i-1}, cut for order M.
inline FactoredRational nonsimple_product(int n, int order) {
    RingPtr R = rings::laumon(n);
    Monomial q = R->var("q"), t = R->var("t");
    FactoredRational out = FactoredRational::one(R);
    for (int i = 1; i <= n - 2; ++i)
        out *= (pochhammer_inf_factored(R, t.pow(i), order) / pochhammer_inf_factored(R, q * t.pow(i + 1), order)).pow(n - i - 1);
    return out;
}

// Closed form for the resolution of the space of based maps: the H = P
// form times the nonsimple-root product, expanded to order M.
inline QTSeries chi_bQ(const GLWeight& c, int order) {
    return expand(h_equals_p(c).value() * nonsimple_product(c.n(), order), order);
}

// The localization sum for the same quantity:
//   sum_w z^{wc} ( sum_theta C_theta(q^-1, t, wz) q^{sum (l_i+..+l_{j-1}) theta_ij} )
//   prod_{i<j} (qt wz_j/wz_i;q)_inf/(q wz_j/wz_i;q)_inf ((qt;q)_inf/(q;q)_inf)^{N-1}
//   prod_{i<j} (1 - t wz_j/wz_i)/(1 - wz_j/wz_i),
// with the theta sum taken over x-degrees until a doubling of the degree
// bound adds nothing below order M.
inline QTSeries chi_bQ_localization(const GLWeight& c, int order, int* degree_out = nullptr) {
    int n = c.n();
    RingPtr R = rings::laumon(n);
    Grading g = qt_grading(R);
    if (!c.is_dominant()) throw InvalidArgument("chi_bQ needs a dominant weight");
    auto inner = [&](int bound) {
        auto gammas = multi_indices(n - 1, bound);
        auto parts = parallel_map<Poly>(gammas.size(), [&](std::size_t k) {
            auto m = detail::weighted_inverted_piece(n, gammas[k], c.pairing(gammas[k]), order);
            return m ? m->truncated(g, order) : Poly(R);
        });
        Poly s(R);
        for (const auto& p : parts) s = s + p;
        return s;
    };
    int bound = 1;
    Poly s = inner(bound);
    for (;;) {
        Poly next = inner(2 * bound);
        if (next == s) break;
        bound *= 2;
        s = std::move(next);
    }
    if (degree_out) *degree_out = bound;
    detail::LaumonVars v(n);
    auto inf = [&](const Monomial& m) { return pochhammer_inf_factored(R, m, order); };
    FactoredRational prod = (inf(v.q * v.t) / inf(v.q)).pow(n - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) prod *= inf(v.q * v.t * v.z[j] / v.z[i]) / inf(v.q * v.z[j] / v.z[i]);
    Poly f = Poly::multiply(s * detail::z_power(R, c), expand(prod, order).poly(), &g, order);
    return QTSeries(weyl_symmetrize(f, n).truncated(g, order), order);
}

inline VerificationReport verify_chi_bQ(const GLWeight& c, int order) {
    VerificationReport rep;
    rep.check = "chibq";
    rep.parameters = {{"n", c.n()}, {"weight", c.components()}, {"order", order}};
    int bound = 0;
    QTSeries loc = chi_bQ_localization(c, order, &bound);
    QTSeries closed = chi_bQ(c, order);
    for (const auto& k : series_differences(loc, closed, order))
        rep.fail({bidegree_string(k), to_string_coef(closed, k), to_string_coef(loc, k)});
    rep.details["theta_degree_bound"] = bound;
    return rep;
}

}  // namespace maclab
