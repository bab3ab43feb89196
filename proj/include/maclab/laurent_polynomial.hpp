#pragma once

// Sparse Laurent polynomials with exact rational coefficients.

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maclab/errors.hpp"
#include "maclab/rational.hpp"
#include "maclab/ring.hpp"

namespace maclab {

// Subset of ring variables whose summed exponents define a degree. Used to
// truncate (q,t)-series and to grade the ratio variables of x/y-series.
struct Grading {
    std::vector<std::size_t> vars;

    int degree(const Monomial& m) const {
        int d = 0;
        for (auto v : vars) d += m[v];
        return d;
    }
};

class LaurentPolynomial {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static LaurentPolynomial constant(RingPtr ring, const Rational& c) {
        LaurentPolynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({Monomial{}, c});
        p.canonicalize_coefs();
        return p;
    }
    static LaurentPolynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
        LaurentPolynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({m, c});
        p.canonicalize_coefs();
        return p;
    }
    static LaurentPolynomial variable(RingPtr ring, const std::string& name, int power = 1) {
        Monomial m = ring->var(name, power);
        return monomial(std::move(ring), m);
    }

    // Builds from unsorted, possibly repeated terms.
    static LaurentPolynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        LaurentPolynomial p(std::move(ring));
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) {
            t.coef.canonicalize();
            acc[t.mono] += t.coef;
        }
        p.adopt(acc);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    const Term& leading() const { return terms_.front(); }

    Rational coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coef;
        return 0;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, 1);
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, -1);
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return multiply(a, b, nullptr, 0);
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial scaled(const Rational& c, const Monomial& m = Monomial{}) const {
        LaurentPolynomial r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
        return r;  // multiplying by a monomial preserves grlex order
    }

    // Product keeping only terms whose graded degree is <= max_degree.
    static LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                      const Grading* grading, int max_degree) {
        require_same_ring(a.ring_, b.ring_);
        LaurentPolynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.is_monomial() && !grading) return b.scaled(a.terms_[0].coef, a.terms_[0].mono);
        if (b.is_monomial() && !grading) return a.scaled(b.terms_[0].coef, b.terms_[0].mono);
        std::vector<int> db;
        if (grading) {
            db.reserve(b.size());
            for (const auto& t : b.terms_) db.push_back(grading->degree(t.mono));
        }
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(a.size() * b.size() / 2 + 8);
        Rational prod;
        for (const auto& ta : a.terms_) {
            int da = grading ? grading->degree(ta.mono) : 0;
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                if (grading && da + db[j] > max_degree) continue;
                const auto& tb = b.terms_[j];
                mpq_mul(prod.get_mpq_t(), ta.coef.get_mpq_t(), tb.coef.get_mpq_t());
                acc[ta.mono * tb.mono] += prod;
            }
        }
        r.adopt(acc);
        return r;
    }

    LaurentPolynomial pow(int k) const {
        if (k < 0) {
            if (!is_monomial()) throw InvalidArgument("negative power of a non-monomial");
            return monomial(ring_, terms_[0].mono.pow(k), maclab::pow(terms_[0].coef, k));
        }
        LaurentPolynomial r = constant(ring_, 1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    LaurentPolynomial truncated(const Grading& g, int max_degree) const {
        LaurentPolynomial r(ring_);
        for (const auto& t : terms_)
            if (g.degree(t.mono) <= max_degree) r.terms_.push_back(t);
        return r;
    }

    LaurentPolynomial filtered(const std::function<bool(const Monomial&)>& keep) const {
        LaurentPolynomial r(ring_);
        for (const auto& t : terms_)
            if (keep(t.mono)) r.terms_.push_back(t);
        return r;
    }

    // Per-variable minimum / maximum exponent (zero for the empty polynomial).
    Monomial min_exponents() const { return extreme(true); }
    Monomial max_exponents() const { return extreme(false); }

    int min_degree(const Grading& g) const {
        int d = 0;
        bool first = true;
        for (const auto& t : terms_) {
            int x = g.degree(t.mono);
            if (first || x < d) d = x;
            first = false;
        }
        return d;
    }
    int max_degree(const Grading& g) const {
        int d = 0;
        bool first = true;
        for (const auto& t : terms_) {
            int x = g.degree(t.mono);
            if (first || x > d) d = x;
            first = false;
        }
        return d;
    }

    // Ring homomorphism determined by the image monomial of every variable.
    // `images[i]` lives in `target`; coefficients are carried unchanged.
    LaurentPolynomial substitute(const RingPtr& target, const std::vector<Monomial>& images) const {
        if (images.size() != ring_->size())
            throw InvalidArgument("substitution needs one image per variable");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < images.size(); ++i)
                if (t.mono[i] != 0) m *= images[i].pow(t.mono[i]);
            out.push_back({m, t.coef});
        }
        return from_terms(target, std::move(out));
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != ring_->size()) throw InvalidArgument("evaluation point has wrong arity");
        Rational sum = 0;
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t i = 0; i < point.size(); ++i)
                if (t.mono[i] != 0) v *= maclab::pow(point[i], t.mono[i]);
            sum += v;
        }
        return sum;
    }

    // Exact quotient *this / d. Throws NotDivisible when d does not divide.
    LaurentPolynomial divide_exact(const LaurentPolynomial& d) const {
        require_same_ring(ring_, d.ring_);
        if (d.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
        if (is_zero()) return *this;
        if (d.is_monomial())
            return scaled(1 / d.terms_[0].coef, d.terms_[0].mono.inverse());
        // Shift both to honest polynomials not divisible by any variable; the
        // quotient of such polynomials is again a polynomial.
        Monomial shift_f = min_exponents().inverse();
        Monomial shift_d = d.min_exponents().inverse();
        LaurentPolynomial f1 = scaled(1, shift_f), d1 = d.scaled(1, shift_d);
        const Term lead = d1.terms_.front();
        std::map<Monomial, Rational, GrlexGreater> rem;
        for (const auto& t : f1.terms_) rem.emplace(t.mono, t.coef);
        std::vector<Term> quot;
        while (!rem.empty()) {
            auto it = rem.begin();
            if (!it->first.divisible_by(lead.mono))
                throw NotDivisible("polynomial division leaves a remainder");
            Monomial qm = it->first / lead.mono;
            Rational qc = it->second / lead.coef;
            quot.push_back({qm, qc});
            for (const auto& t : d1.terms_) {
                Monomial m = t.mono * qm;
                auto jt = rem.find(m);
                Rational delta = qc * t.coef;
                if (jt == rem.end()) {
                    rem.emplace(m, -delta);
                } else {
                    jt->second -= delta;
                    if (jt->second == 0) rem.erase(jt);
                }
            }
        }
        LaurentPolynomial q(ring_);
        q.terms_ = std::move(quot);  // produced in descending order
        return q.scaled(1, shift_d / shift_f);
    }

    bool divides(const LaurentPolynomial& f) const {
        try {
            (void)f.divide_exact(*this);
            return true;
        } catch (const NotDivisible&) {
            return false;
        }
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // Total order on polynomials of one ring (term-by-term); used to key factor maps.
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& ta = a.terms_[i];
            const auto& tb = b.terms_[i];
            if (!(ta.mono == tb.mono)) return grlex_less(tb.mono, ta.mono);
            int c = cmp(ta.coef, tb.coef);
            if (c != 0) return c < 0;
        }
        return a.terms_.size() < b.terms_.size();
    }

    // Canonical text form: terms in descending grlex order, "p/q" coefficients.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coef;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (c < 0) c = -c;
            bool one = t.mono.is_one();
            bool need_star = false;
            if (c != 1 || one) {
                os << maclab::to_string(c);
                need_star = true;
            }
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                int e = t.mono[i];
                if (e == 0) continue;
                if (need_star) os << "*";
                os << ring_->name(i);
                if (e != 1) os << "^" << e;
                need_star = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;  // sorted by descending grlex, no zero coefficients

    void canonicalize_coefs() {
        for (auto& t : terms_) t.coef.canonicalize();
    }

    void adopt(std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) terms_.push_back({m, std::move(c)});
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_less(y.mono, x.mono); });
    }

    static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, int sign) {
        if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
        LaurentPolynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && grlex_less(b.terms_[j].mono, a.terms_[i].mono))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || grlex_less(a.terms_[i].mono, b.terms_[j].mono)) {
                Term t = b.terms_[j++];
                if (sign < 0) t.coef = -t.coef;
                r.terms_.push_back(std::move(t));
            } else {
                Rational c = a.terms_[i].coef;
                if (sign > 0) {
                    c += b.terms_[j].coef;
                } else {
                    c -= b.terms_[j].coef;
                }
                if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Monomial extreme(bool lowest) const {
        Monomial m;
        if (terms_.empty()) return m;
        m = terms_[0].mono;
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < kMaxVars; ++i)
                m[i] = lowest ? std::min(m[i], t.mono[i]) : std::max(m[i], t.mono[i]);
        return m;
    }
};

using Poly = LaurentPolynomial;

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// Balanced product of many polynomials (keeps intermediate sizes small).
inline Poly product(const RingPtr& ring, std::vector<Poly> factors) {
    if (factors.empty()) return Poly::constant(ring, 1);
    while (factors.size() > 1) {
        std::vector<Poly> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() % 2) next.push_back(std::move(factors.back()));
        factors = std::move(next);
    }
    return std::move(factors.front());
}

}  // namespace maclab
