// Partitions, theta matrices, Pol_lambda and the tableau bijection.

#include <gtest/gtest.h>

#include <set>

#include "maclab/partitions.hpp"

using namespace maclab;

namespace {

// Semistandard fillings of shape lambda with entries 1..n, filled cell by
// cell in reading order; returns the list of content vectors.
std::vector<std::vector<int>> ssyt_contents(const Partition& lambda, int n) {
    std::vector<std::vector<int>> grid;
    for (int row : lambda.parts()) grid.emplace_back(row, 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            std::vector<int> content(n, 0);
            for (const auto& row : grid)
                for (int v : row) ++content[v - 1];
            out.push_back(content);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[r][c] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Partition> small_partitions(int max_size, int n) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s)
        for (const auto& p : partitions_of(s, static_cast<std::size_t>(n))) out.push_back(p);
    return out;
}

}  // namespace

TEST(Partition, Basics) {
    Partition p{3, 1, 0};
    EXPECT_EQ(p.length(), 2u);
    EXPECT_EQ(p.size(), 4);
    EXPECT_EQ(p[5], 0);
    EXPECT_THROW(Partition({1, 2}), InvalidArgument);
    EXPECT_TRUE(dominated_by(Partition{2, 2}, Partition{3, 1}));
    EXPECT_FALSE(dominated_by(Partition{3, 1}, Partition{2, 2}));
    EXPECT_EQ(partitions_of(4, 4).size(), 5u);
    EXPECT_EQ(partitions_of(4, 2).size(), 3u);
}

TEST(HorizontalStrip, Examples) {
    EXPECT_TRUE(is_horizontal_strip(Partition{2, 1}, Partition{1, 1}));
    EXPECT_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1, 0}));
    EXPECT_TRUE(is_horizontal_strip(Partition{3, 1}, Partition{3, 1}));
    EXPECT_FALSE(is_horizontal_strip(Partition{1}, Partition{2}));
}

TEST(PolLambda, Examples) {
    auto one = enumerate_pol_lambda(Partition{}, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].entries().empty());
    auto two = enumerate_pol_lambda(Partition{2, 0}, 2);
    ASSERT_EQ(two.size(), 3u);
    for (int v = 0; v < 3; ++v) EXPECT_EQ(two[v](1, 2), v);
    EXPECT_EQ(enumerate_pol_lambda(Partition{1, 0, 0}, 3).size(), 3u);
    auto zero = enumerate_pol_lambda(Partition{}, 4);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_zero());
}

TEST(PolLambda, SortedLexicographically) {
    auto ts = enumerate_pol_lambda(Partition{3, 1}, 3);
    for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_LT(ts[i - 1].entries(), ts[i].entries());
}

TEST(PolLambdaProperty, CountMatchesSsytOracle) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : small_partitions(5, n)) {
            auto ts = enumerate_pol_lambda(lam, n);
            auto tableaux = ssyt_contents(lam, n);
            EXPECT_EQ(ts.size(), tableaux.size()) << lam.to_string() << " N=" << n;
            // the multiset of weights matches as well
            std::multiset<std::vector<int>> a(tableaux.begin(), tableaux.end()), b;
            for (const auto& t : ts) b.insert(strip_sizes(t, lam));
            EXPECT_EQ(a, b) << lam.to_string() << " N=" << n;
            for (const auto& t : ts) EXPECT_TRUE(in_pol_lambda(t, lam));
        }
}

TEST(Tableau, Examples) {
    auto chain = theta_to_tableau(ThetaMatrix(2), Partition{});
    ASSERT_EQ(chain.size(), 3u);
    for (const auto& p : chain) EXPECT_EQ(p, Partition{});
    ThetaMatrix t(2);
    t.set(1, 2, 1);
    chain = theta_to_tableau(t, Partition{1, 0});
    EXPECT_EQ(chain[1], Partition{});
    EXPECT_EQ(chain[2], Partition{1});
    // theta_12 = 2 exceeds lambda_1 - lambda_2 for lambda = (2,2)
    ThetaMatrix bad(2);
    bad.set(1, 2, 2);
    EXPECT_THROW(theta_to_tableau(bad, Partition{2, 2}), NotATableau);
}

TEST(TableauProperty, BijectionRoundTrip) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : small_partitions(5, n))
            for (const auto& t : enumerate_pol_lambda(lam, n)) {
                auto chain = theta_to_tableau(t, lam);
                EXPECT_EQ(chain.back(), lam);
                EXPECT_EQ(tableau_to_theta(chain), t);
                EXPECT_EQ(theta_to_tableau(tableau_to_theta(chain), lam), chain);
            }
}

TEST(StripSizes, Examples) {
    EXPECT_EQ(strip_sizes(ThetaMatrix(2), Partition{2, 1}), (std::vector<int>{2, 1}));
    ThetaMatrix t(2);
    t.set(1, 2, 1);
    EXPECT_EQ(strip_sizes(t, Partition{1, 0}), (std::vector<int>{0, 1}));
}

TEST(StripSizesProperty, NonnegativeAndSumToSize) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : small_partitions(5, n))
            for (const auto& t : enumerate_pol_lambda(lam, n)) {
                auto s = strip_sizes(t, lam);
                int total = 0;
                for (int x : s) {
                    EXPECT_GE(x, 0);
                    total += x;
                }
                EXPECT_EQ(total, lam.size());
            }
}

TEST(ThetaMatrix, DegreeVector) {
    ThetaMatrix t(3);
    t.set(1, 3, 1);
    EXPECT_EQ(t.degree(), (std::vector<int>{1, 1}));
    t.set(2, 3, 2);
    EXPECT_EQ(t.degree(), (std::vector<int>{1, 3}));
    EXPECT_THROW(t.set(2, 2, 1), InvalidArgument);
}
