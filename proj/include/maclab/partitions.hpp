#pragma once

// Partitions, strictly upper-triangular theta matrices, the lattice points
// of Pol_lambda and the theta <-> tableau bijection.
//
// Indices in the public API are 1-based to match the usual matrix
// notation; storage is 0-based.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "maclab/errors.hpp"

namespace maclab {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw InvalidArgument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    // parts_[i-1], zero past the end
    int operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::vector<int> padded(std::size_t n) const {
        std::vector<int> v(n, 0);
        for (std::size_t i = 0; i < std::min(n, parts_.size()); ++i) v[i] = parts_[i];
        return v;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // lexicographic
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// mu <= lambda in dominance order (equal sizes required for true).
inline bool dominated_by(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) return false;
    int a = 0, b = 0;
    std::size_t n = std::max(mu.length(), lambda.length());
    for (std::size_t i = 1; i <= n; ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

// Partitions of n with at most `max_len` parts, in decreasing lex order.
inline std::vector<Partition> partitions_of(int n, std::size_t max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_len) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// lambda / mu is a horizontal strip: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    std::size_t n = std::max(lambda.length(), mu.length()) + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (mu[i] > lambda[i]) return false;
        if (mu[i] < lambda[i + 1]) return false;
    }
    return true;
}

class ThetaMatrix {
public:
    ThetaMatrix() = default;
    explicit ThetaMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n > 1 ? n * (n - 1) / 2 : 0), 0) {
        if (n < 1) throw InvalidArgument("theta matrix rank must be positive");
    }

    int n() const { return n_; }

    // theta_{ij} for 1 <= i, j <= n; zero on and below the diagonal
    int operator()(int i, int j) const { return i < j ? e_[slot(i, j)] : 0; }
    void set(int i, int j, int v) {
        if (i >= j) throw InvalidArgument("theta is strictly upper triangular");
        if (v < 0) throw InvalidArgument("theta entries must be nonnegative");
        e_[slot(i, j)] = v;
    }

    // (theta_12, theta_13, ..., theta_1N, theta_23, ...)
    const std::vector<int>& entries() const { return e_; }
    static ThetaMatrix from_entries(int n, const std::vector<int>& v) {
        ThetaMatrix t(n);
        if (v.size() != t.e_.size()) throw InvalidArgument("wrong number of theta entries");
        for (int x : v)
            if (x < 0) throw InvalidArgument("theta entries must be nonnegative");
        t.e_ = v;
        return t;
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }
    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    // d_a = sum_{i <= a < j} theta_ij, a = 1..n-1: the x-degree when theta_ij
    // carries x_i ... x_{j-1}.
    std::vector<int> degree() const {
        std::vector<int> d(static_cast<std::size_t>(std::max(n_ - 1, 0)), 0);
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                for (int a = i; a < j; ++a) d[a - 1] += (*this)(i, j);
        return d;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
        os << "]";
        return os.str();
    }

    friend bool operator==(const ThetaMatrix& a, const ThetaMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator<(const ThetaMatrix& a, const ThetaMatrix& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.e_ < b.e_;
    }

private:
    int n_ = 1;
    std::vector<int> e_;

    std::size_t slot(int i, int j) const {
        if (i < 1 || j > n_) throw InvalidArgument("theta index out of range");
        // rows 1..i-1 hold (n-1) + ... + (n-i+1) entries
        int before = (i - 1) * n_ - (i - 1) * i / 2;
        return static_cast<std::size_t>(before + (j - i - 1));
    }
};

// Upper bound for theta_ij given the entries to its right in rows i, i+1.
inline int pol_bound(const ThetaMatrix& t, const std::vector<int>& lam, int i, int j) {
    int n = t.n();
    int b = lam[i - 1] - lam[i];
    for (int k = j + 1; k <= n; ++k) b -= t(i, k) - t(i + 1, k);
    return b;
}

inline bool in_pol_lambda(const ThetaMatrix& t, const Partition& lambda) {
    int n = t.n();
    if (static_cast<int>(lambda.length()) > n) return false;
    std::vector<int> lam = lambda.padded(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (t(i, j) > pol_bound(t, lam, i, j)) return false;
    return true;
}

// All lattice points of Pol_lambda, sorted by entry list.
inline std::vector<ThetaMatrix> enumerate_pol_lambda(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) throw InvalidArgument("partition longer than rank");
    std::vector<int> lam = lambda.padded(static_cast<std::size_t>(n));
    // each bound reads entries to the right in its own row and the row below,
    // so fill rows bottom-up and each row right to left
    std::vector<std::pair<int, int>> order;
    for (int i = n - 1; i >= 1; --i)
        for (int j = n; j > i; --j) order.emplace_back(i, j);
    std::vector<ThetaMatrix> out;
    ThetaMatrix t(n);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = order[k];
        int b = pol_bound(t, lam, i, j);
        for (int v = 0; v <= b; ++v) {
            t.set(i, j, v);
            self(self, k + 1);
        }
        t.set(i, j, 0);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Chain lambda^(0) = 0, ..., lambda^(n) = lambda with
// lambda^(j)_i = sum_{k <= j} theta_ik and diagonal theta_ii = lambda_i - sum_{k>i} theta_ik.
inline std::vector<Partition> theta_to_tableau(const ThetaMatrix& t, const Partition& lambda) {
    int n = t.n();
    if (static_cast<int>(lambda.length()) > n) throw NotATableau("partition longer than rank");
    std::vector<int> lam = lambda.padded(static_cast<std::size_t>(n));
    std::vector<int> diag(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int d = lam[i - 1];
        for (int k = i + 1; k <= n; ++k) d -= t(i, k);
        if (d < 0) throw NotATableau("row " + std::to_string(i) + " overflows");
        diag[i - 1] = d;
    }
    std::vector<Partition> chain;
    chain.emplace_back();
    for (int j = 1; j <= n; ++j) {
        std::vector<int> row(static_cast<std::size_t>(j));
        for (int i = 1; i <= j; ++i) {
            int s = diag[i - 1];
            for (int k = i + 1; k <= j; ++k) s += t(i, k);
            row[i - 1] = s;
        }
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i] > row[i - 1]) throw NotATableau("step " + std::to_string(j) + " is not a partition");
        Partition p(row);
        if (!is_horizontal_strip(p, chain.back()))
            throw NotATableau("step " + std::to_string(j) + " is not a horizontal strip");
        chain.push_back(p);
    }
    return chain;
}

// Inverse of theta_to_tableau: theta_ij = lambda^(j)_i - lambda^(j-1)_i.
inline ThetaMatrix tableau_to_theta(const std::vector<Partition>& chain) {
    if (chain.size() < 2) throw NotATableau("chain needs at least one step");
    int n = static_cast<int>(chain.size()) - 1;
    if (chain.front().size() != 0) throw NotATableau("chain must start at the empty partition");
    ThetaMatrix t(n);
    for (int j = 1; j <= n; ++j) {
        const Partition& a = chain[j - 1];
        const Partition& b = chain[j];
        if (static_cast<int>(b.length()) > j) throw NotATableau("step " + std::to_string(j) + " is too long");
        if (!is_horizontal_strip(b, a)) throw NotATableau("step " + std::to_string(j) + " is not a horizontal strip");
        for (int i = 1; i < j; ++i) t.set(i, j, b[i] - a[i]);
    }
    return t;
}

// |theta^(i)| = lambda_i + sum_{a<i} theta_ai - sum_{b>i} theta_ib, the
// number of boxes labelled i.
inline std::vector<int> strip_sizes(const ThetaMatrix& t, const Partition& lambda) {
    int n = t.n();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int s = lambda[i];
        for (int a = 1; a < i; ++a) s += t(a, i);
        for (int b = i + 1; b <= n; ++b) s -= t(i, b);
        out[i - 1] = s;
    }
    return out;
}

}  // namespace maclab
