// Baker-Akhiezer coefficients, the ratio series, specialization and the
// eigen-identity residual.

#include <gtest/gtest.h>

#include "maclab/baker_akhiezer.hpp"

using namespace maclab;

namespace {

RingPtr S(int n) { return rings::spectral(n); }
FactoredRational F(int n, const std::string& s, int k = 1) {
    return FactoredRational::from_poly(parse_poly(S(n), s), k);
}
ThetaMatrix theta(int n, std::vector<int> e) { return ThetaMatrix::from_entries(n, e); }

}  // namespace

TEST(CN, Examples) {
    EXPECT_TRUE(rational_eq(c_N_recursive(ThetaMatrix(1)), FactoredRational::one(S(1))));
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(rational_eq(c_N_recursive(ThetaMatrix(n)), FactoredRational::one(S(n))));
        EXPECT_TRUE(rational_eq(c_N_closed_first(ThetaMatrix(n)), FactoredRational::one(S(n))));
        EXPECT_TRUE(rational_eq(c_N_closed_second(ThetaMatrix(n)), FactoredRational::one(S(n))));
    }
    // (1 - s z2/z1)/(1 - q z2/z1) (1 - s)/(1 - q) q/s
    FactoredRational hand = F(2, "1 - s*z2*z1^-1") * F(2, "1 - q*z2*z1^-1", -1) * F(2, "1 - s") *
                            F(2, "1 - q", -1) * F(2, "q*s^-1");
    EXPECT_TRUE(rational_eq(c_N_recursive(theta(2, {1})), hand));
    EXPECT_TRUE(rational_eq(c_N_closed_first(theta(2, {1})), hand));
    EXPECT_TRUE(rational_eq(c_N_closed_second(theta(2, {1})), hand));
}

TEST(CN, RecursionEqualsClosedFormsSmall) {
    for (int n = 2; n <= 3; ++n)
        for (const auto& t : thetas_bounded(n, 2)) {
            FactoredRational rec = c_N_recursive(t);
            EXPECT_TRUE(rational_eq(rec, c_N_closed_first(t))) << t.to_string();
            EXPECT_TRUE(rational_eq(rec, c_N_closed_second(t))) << t.to_string();
        }
}

TEST(CN, PrintedTwoVariableExample) {
    for (int a = 0; a <= 3; ++a) {
        auto [first, second] = c2_printed(a);
        EXPECT_TRUE(rational_eq(first, c_N_recursive(theta(2, {a}))));
        EXPECT_TRUE(rational_eq(second, c_N_recursive(theta(2, {a}))));
    }
}

TEST(CN, PrintedThreeVariableExample) {
    // agreement wherever the last middle-line ratio is trivial
    for (const auto& t : thetas_bounded(3, 2)) {
        EXPECT_TRUE(rational_eq(c3_printed(t, true), c_N_recursive(t))) << t.to_string();
        if (t(1, 3) == 0) EXPECT_TRUE(rational_eq(c3_printed(t), c_N_recursive(t))) << t.to_string();
    }
}

TEST(FNSeries, Examples) {
    XSeries f0 = f_N_series(2, 0);
    ASSERT_EQ(f0.coefficients().size(), 1u);
    EXPECT_EQ(f0.coefficient({0}).numerator(), Poly::constant(S(2), 1));
    XSeries f1 = f_N_series(2, 1);
    EXPECT_EQ(f1.coefficient({1}), RationalFunction::from(c_N_recursive(theta(2, {1}))));
    XSeries f3 = f_N_series(3, 1);
    EXPECT_EQ(f3.coefficients().size(), 3u);
    // x1 x2 collects theta_13 = 1 and theta_12 = theta_23 = 1 at degree 2
    XSeries f32 = f_N_series(3, 2);
    EXPECT_EQ(f32.coefficient({1, 1}), RationalFunction::from(c_N_recursive(theta(3, {0, 1, 0}))) +
                                           RationalFunction::from(c_N_recursive(theta(3, {1, 0, 1}))));
}

TEST(Specialize, Examples) {
    EXPECT_EQ(specialize_f_to_P(Partition{}, 2).value().numerator(), Poly::constant(rings::macdonald(2), 1));
    EXPECT_EQ(specialize_f_to_P(Partition{1}, 2).value().numerator(),
              parse_poly(rings::macdonald(2), "y1 + y2"));
    EXPECT_EQ(specialize_f_to_P(Partition{2}, 2), macdonald_P(Partition{2}, 2));
}

TEST(SpecializeProperty, MatchesTableauCoefficient) {
    for (int n = 2; n <= 3; ++n)
        for (const auto& lam : partitions_of(3, static_cast<std::size_t>(n)))
            for (const auto& t : enumerate_pol_lambda(lam, n))
                EXPECT_TRUE(rational_eq(specialized_coefficient(t, lam), psi_T(t, lam))) << t.to_string();
}

TEST(DaiIchi, OrderZeroAndSmallRuns) {
    XSeries r0 = dai_ichi_residual(2, 0);
    EXPECT_TRUE(r0.is_zero());
    EXPECT_TRUE(verify_dai_ichi(2, 2).passed());
    EXPECT_TRUE(verify_dai_ichi(3, 1).passed());
}
