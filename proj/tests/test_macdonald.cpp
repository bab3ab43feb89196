// Macdonald polynomials: tableau sum, the first Macdonald operator and the
// eigenvector oracle.

#include <gtest/gtest.h>

#include "maclab/macdonald.hpp"
#include "maclab/serialize.hpp"

using namespace maclab;

namespace {

RingPtr R(int n) { return rings::macdonald(n); }
Poly P(int n, const std::string& s) { return parse_poly(R(n), s); }
FactoredRational F(int n, const std::string& s, int k = 1) { return FactoredRational::from_poly(P(n, s), k); }
SymmetricPolynomial sym(int n, const std::string& s) { return SymmetricPolynomial(n, RationalFunction(P(n, s))); }

std::vector<std::pair<Partition, int>> cases(int max_size, int max_n) {
    std::vector<std::pair<Partition, int>> out;
    for (int n = 1; n <= max_n; ++n)
        for (int s = 0; s <= max_size; ++s)
            for (const auto& p : partitions_of(s, static_cast<std::size_t>(n))) out.emplace_back(p, n);
    return out;
}

}  // namespace

TEST(MonomialSymmetric, Examples) {
    EXPECT_EQ(monomial_symmetric(Partition{1}, 2).value().numerator(), P(2, "y1 + y2"));
    EXPECT_EQ(monomial_symmetric(Partition{1, 1}, 2).value().numerator(), P(2, "y1*y2"));
    EXPECT_EQ(monomial_symmetric(Partition{2, 1}, 3).value().numerator().size(), 6u);
}

TEST(PsiT, Examples) {
    EXPECT_TRUE(rational_eq(psi_T(ThetaMatrix(3), Partition{2, 1}), FactoredRational::one(R(3))));
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_pol_lambda(Partition{1}, n))
            EXPECT_TRUE(rational_eq(psi_T(t, Partition{1}), FactoredRational::one(R(n))));
    // by hand from the two-variable eigen-equation: (1+q)(1-s)/(1-q s)
    ThetaMatrix t(2);
    t.set(1, 2, 1);
    EXPECT_TRUE(rational_eq(psi_T(t, Partition{2}), F(2, "1 + q") * F(2, "1 - s") * F(2, "1 - q*s", -1)));
}

TEST(MacdonaldP, Examples) {
    EXPECT_EQ(macdonald_P(Partition{1}, 3).value().numerator(), P(3, "y1 + y2 + y3"));
    EXPECT_EQ(macdonald_P(Partition{1, 1}, 2).value().numerator(), P(2, "y1*y2"));
    auto m = macdonald_P(Partition{2}, 2).m_expansion();
    ASSERT_EQ(m.size(), 2u);
    EXPECT_TRUE(rational_eq(m.at(Partition{2}), FactoredRational::one(R(2))));
    EXPECT_TRUE(rational_eq(m.at(Partition{1, 1}), F(2, "1 + q") * F(2, "1 - s") * F(2, "1 - q*s", -1)));
}

TEST(ApplyD1N, Examples) {
    EXPECT_EQ(apply_D1N(sym(2, "1")).value().numerator(), P(2, "1 + s"));
    EXPECT_EQ(apply_D1N(sym(2, "y1 + y2")).value().numerator(), P(2, "q*s*y1 + y1 + q*s*y2 + y2"));
    EXPECT_EQ(apply_D1N(sym(2, "y1*y2")).value().numerator(), P(2, "q*s*y1*y2 + q*y1*y2"));
    EXPECT_THROW(apply_D1N(sym(2, "y1")), DenominatorSurvives);
}

TEST(Oracle, Examples) {
    EXPECT_EQ(macdonald_P_oracle(Partition{1}, 3).value().numerator(), P(3, "y1 + y2 + y3"));
    EXPECT_EQ(macdonald_P_oracle(Partition{2}, 2), macdonald_P(Partition{2}, 2));
    EXPECT_EQ(macdonald_P_oracle(Partition{2, 1}, 3), macdonald_P(Partition{2, 1}, 3));
}

// Smaller than the acceptance range; the acceptance binary covers |lambda| <= 5, N <= 4.
TEST(MacdonaldProperty, SymmetricUnitriangularEigen) {
    for (const auto& [lam, n] : cases(4, 3)) {
        SymmetricPolynomial p = macdonald_P(lam, n);
        EXPECT_TRUE(p.is_symmetric()) << lam.to_string();
        auto m = p.m_expansion();
        EXPECT_TRUE(rational_eq(m.at(lam), FactoredRational::one(R(n))));
        for (const auto& [mu, c] : m) EXPECT_TRUE(dominated_by(mu, lam)) << mu.to_string();
        SymmetricPolynomial d = apply_D1N(p);
        EXPECT_EQ(d.value(), p.value() * macdonald_eigenvalue(lam, n)) << lam.to_string() << " N=" << n;
        EXPECT_EQ(p, macdonald_P_oracle(lam, n)) << lam.to_string() << " N=" << n;
    }
}
