#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>

#include "sihins/continuous_analysis.hpp"
#include "sihins/discrete_analysis.hpp"
#include "test_support.hpp"

using namespace sihins;

namespace {

EpidemicParams with_beta(double beta) {
    auto p = baseline_scenario().epidemic;
    p.beta = beta;
    return p;
}

}  // namespace

TEST(DiscreteJacobian, IsIdentityPlusScaledJacobian) {
    fixtures::ParamGenerator gen(21);
    for (int k = 0; k < 200; ++k) {
        const auto p = gen.epidemic();
        const double dt = gen.uniform(0.001, 1.0);
        const double S = gen.uniform(0, 3000), I = gen.uniform(0, 100), H = gen.uniform(0, 100);
        const auto jb = discrete_jacobian(p, dt, S, I, H);
        const auto j = jacobian(p, S, I, H);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) EXPECT_EQ(jb[r][c], (r == c ? 1.0 : 0.0) + dt * j[r][c]);
    }
}

TEST(DiscreteJacobian, DiseaseFreeEntry) {
    const auto p = with_beta(0.001);
    const auto e = disease_free_equilibrium(p);
    EXPECT_NEAR(discrete_jacobian(p, 0.05, e.S, e.I, e.H)[0][0], 0.9996275, 1e-15);
}

TEST(DiscreteJacobian, VanishingStepIsIdentity) {
    const auto p = with_beta(0.003);
    const auto jb = discrete_jacobian(p, 1e-14, 500, 20, 30);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) EXPECT_NEAR(jb[r][c], r == c ? 1.0 : 0.0, 1e-10);
}

TEST(DiscreteDfe, Verdicts) {
    EXPECT_EQ(classify_dfe_discrete(with_beta(0.001), 0.05).verdict, Stability::Stable);
    for (double dt : {0.01, 0.05, 0.5, 1.0}) {
        const auto c = classify_dfe_discrete(with_beta(0.003), dt);
        EXPECT_EQ(c.verdict, Stability::Unstable);
        EXPECT_GT(c.eigenvalues[1], 1.0);
    }
}

TEST(DiscreteDfe, BoundaryStepIsNonHyperbolic) {
    const auto p = with_beta(0.001);
    const auto c = classify_dfe_discrete(p, 2.0 / p.mu1);
    EXPECT_NEAR(std::abs(c.eigenvalues[0]), 1.0, 1e-12);
    EXPECT_EQ(c.verdict, Stability::NonHyperbolic);
}

TEST(DiscreteDfe, Threshold) {
    const auto p = with_beta(0.001);
    const double r0 = basic_reproduction_number(p);
    const double expected = std::min({2.0 / p.mu1, 2.0 / (p.alpha1 + p.mu2),
                                      2.0 / (infected_exit_rate(p) * (1.0 - r0))});
    EXPECT_DOUBLE_EQ(classify_dfe_discrete(p, 0.05).dt_threshold, expected);
}

TEST(DiscreteDfe, SmallStepMatchesContinuousRandomised) {
    fixtures::ParamGenerator gen(23);
    for (int k = 0; k < 1000; ++k) {
        const auto p = gen.epidemic();
        const double r0 = basic_reproduction_number(p);
        if (std::abs(r0 - 1.0) < 1e-3) continue;
        const double dt = 1e-3 * classify_dfe_discrete(p, 1.0).dt_threshold;
        EXPECT_EQ(classify_dfe_discrete(p, dt).verdict, classify_dfe(p).verdict);
    }
}

TEST(DiscreteEe, EndemicScenario) {
    const auto c = classify_ee_discrete(with_beta(0.003), 0.05);
    ASSERT_TRUE(c.has_value());
    EXPECT_NEAR(c->schur_cohn.cond_plus, 6.1623184e-8, 1e-14);
    EXPECT_NEAR(c->schur_cohn.cond_plus, 6.16e-8, 1e-10);
    EXPECT_GT(c->schur_cohn.cond_plus, 0.0);
    EXPECT_LT(c->max_root_modulus, 1.0);
    EXPECT_FALSE(classify_ee_discrete(with_beta(0.001), 0.05).has_value());
}

TEST(DiscreteEe, VanishingStepDegeneratesToIdentity) {
    const auto c = classify_ee_discrete(with_beta(0.003), 1e-9);
    ASSERT_TRUE(c.has_value());
    EXPECT_NEAR(c->coefficients[0], -3.0, 1e-8);
    EXPECT_NEAR(c->coefficients[1], 3.0, 1e-8);
    EXPECT_NEAR(c->coefficients[2], -1.0, 1e-8);
    for (const auto& r : c->roots) EXPECT_NEAR(std::abs(r), 1.0, 1e-2);
}

TEST(DiscreteEe, SumIdentityRandomised) {
    fixtures::ParamGenerator gen(29);
    int checked = 0;
    for (int k = 0; k < 2000; ++k) {
        const auto p = gen.epidemic();
        if (basic_reproduction_number(p) <= 1.0 + 1e-6) continue;
        const double dt = 1.0 / static_cast<double>(1 + gen.engine()() % 40);
        const auto ee = *endemic_equilibrium(p);
        const auto c = classify_ee_discrete(p, dt);
        ASSERT_TRUE(c.has_value());
        const double expected = p.beta * ee.I * p.mu2 * (p.alpha1 + p.gamma + p.mu2) * dt * dt * dt;
        // The sum cancels O(1) terms down to O(dt^3); allow for the
        // extended-precision rounding of those terms.
        const double slack = 1e-9 * expected + 64 * LDBL_EPSILON * 8.0;
        EXPECT_NEAR(c->schur_cohn.cond_plus, expected, slack);
        EXPECT_GT(c->schur_cohn.cond_plus, 0.0);
        const auto poly = characteristic_coefficients<long double>(
            discrete_jacobian(p, dt, ee.S, ee.I, ee.H));
        for (int n = 0; n < 3; ++n) {
            EXPECT_TRUE(relatively_close(c->coefficients[n], static_cast<double>(poly[n]), 1e-9));
        }
        ++checked;
    }
    EXPECT_GT(checked, 200);
}

TEST(DiscreteEe, SchurCohnImpliesRootsInsideRandomised) {
    fixtures::ParamGenerator gen(31);
    int sufficient = 0, fallback = 0;
    for (int k = 0; k < 3000; ++k) {
        const auto p = gen.epidemic();
        if (basic_reproduction_number(p) <= 1.0 + 1e-6) continue;
        const double dt = gen.around(0.5, 1.5);
        const auto c = classify_ee_discrete(p, dt);
        ASSERT_TRUE(c.has_value());
        if (c->schur_cohn_sufficient) {
            ++sufficient;
            EXPECT_LT(c->max_root_modulus, 1.0 + kUnitCircleTolerance);
            EXPECT_EQ(c->verdict, EeDiscreteVerdict::StableBySchurCohn);
        } else {
            ++fallback;
            EXPECT_NE(c->verdict, EeDiscreteVerdict::StableBySchurCohn);
        }
    }
    EXPECT_GT(sufficient, 100);
    EXPECT_GT(fallback, 10);
}

TEST(CubicRoots, ReconstructPolynomial) {
    fixtures::ParamGenerator gen(37);
    for (int k = 0; k < 500; ++k) {
        const double a = gen.uniform(-5, 5), b = gen.uniform(-5, 5), c = gen.uniform(-5, 5);
        for (const auto& r : cubic_roots(a, b, c)) {
            const auto value = r * r * r + a * r * r + b * r + c;
            EXPECT_LT(std::abs(value), 1e-9 * (1 + std::abs(r) * std::abs(r) * std::abs(r)));
        }
    }
}
