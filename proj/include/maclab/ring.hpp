#pragma once

// Variable contexts and exponent vectors.
//
// A Ring is an interned, immutable ordered list of variable names. Two
// polynomials can be combined only if they live in the same Ring; interning
// makes that a pointer comparison. Variables listed earlier are *smaller* in
// the monomial order (q < t < z1 < ... < y1 < ...).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "maclab/errors.hpp"

namespace maclab {

inline constexpr std::size_t kMaxVars = 16;

class Monomial {
public:
    using value_type = std::int16_t;

    Monomial() { e_.fill(0); }

    value_type operator[](std::size_t i) const { return e_[i]; }
    value_type& operator[](std::size_t i) { return e_[i]; }

    // Total degree over all variables.
    int degree() const {
        int d = 0;
        for (auto v : e_) d += v;
        return d;
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
    }

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < kMaxVars; ++i) e_[i] = static_cast<value_type>(e_[i] + o.e_[i]);
        return *this;
    }
    Monomial& operator/=(const Monomial& o) {
        for (std::size_t i = 0; i < kMaxVars; ++i) e_[i] = static_cast<value_type>(e_[i] - o.e_[i]);
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }

    Monomial pow(int k) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<value_type>(e_[i] * k);
        return r;
    }
    Monomial inverse() const { return pow(-1); }

    // true iff every exponent of `o` is <= the corresponding one here
    bool divisible_by(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] < o.e_[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : e_) {
            h ^= static_cast<std::uint16_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    const std::array<value_type, kMaxVars>& data() const { return e_; }

private:
    std::array<value_type, kMaxVars> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded lexicographic order: total degree first, then the exponent of the
// largest variable (highest index) decides.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = kMaxVars; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    // Returns the unique Ring with these variable names.
    static RingPtr make(std::vector<std::string> names) {
        if (names.size() > kMaxVars)
            throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables per ring");
        static std::mutex mu;
        static std::map<std::vector<std::string>, RingPtr> interned;
        std::lock_guard<std::mutex> lock(mu);
        auto it = interned.find(names);
        if (it != interned.end()) return it->second;
        RingPtr r(new Ring(names));
        interned.emplace(std::move(names), r);
        return r;
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::size_t index(const std::string& n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) throw UnknownVariable(n);
        return static_cast<std::size_t>(it - names_.begin());
    }
    bool has(const std::string& n) const {
        return std::find(names_.begin(), names_.end(), n) != names_.end();
    }

    Monomial var(const std::string& n, int power = 1) const {
        Monomial m;
        m[index(n)] = static_cast<Monomial::value_type>(power);
        return m;
    }

private:
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a != b) throw RingMismatch("operands live in different variable contexts");
}

// Standard rings used across the library.
namespace rings {

inline std::vector<std::string> indexed(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

// (q, s, y1..yN): Macdonald polynomials, s is the Macdonald parameter.
inline RingPtr macdonald(int n) {
    std::vector<std::string> v{"q", "s"};
    for (auto& y : indexed("y", n)) v.push_back(y);
    return Ring::make(v);
}
// (q, s, z1..zN): Baker-Akhiezer coefficients.
inline RingPtr spectral(int n) {
    std::vector<std::string> v{"q", "s"};
    for (auto& z : indexed("z", n)) v.push_back(z);
    return Ring::make(v);
}
// (q, t, z1..zN): Laumon and global Euler characteristic computations.
inline RingPtr laumon(int n) {
    std::vector<std::string> v{"q", "t"};
    for (auto& z : indexed("z", n)) v.push_back(z);
    return Ring::make(v);
}
// (z1..zN): coefficients of (q,t)-series.
inline RingPtr torus(int n) { return Ring::make(indexed("z", n)); }

}  // namespace rings

}  // namespace maclab
