#include <gtest/gtest.h>

#include <cmath>

#include "reference_tables.hpp"
#include "sihins/sensitivity.hpp"

using namespace sihins;

namespace {

std::size_t idx(Parameter p) { return static_cast<std::size_t>(p); }
std::size_t idx(Quantity q) { return static_cast<std::size_t>(q); }

const SensitivityTable& table_for(bool endemic) {
    static const SensitivityTable df = sensitivity_table(default_scenarios().disease_free);
    static const SensitivityTable en = sensitivity_table(default_scenarios().endemic);
    return endemic ? en : df;
}

}  // namespace

TEST(Names, RoundTrip) {
    for (Parameter p : kAllParameters) EXPECT_EQ(parameter_from_name(name(p)), p);
    EXPECT_FALSE(parameter_from_name("S0").has_value());
    EXPECT_EQ(name(Quantity::GrossPremium), "P_gross");
}

TEST(Perturb, ScalesOneField) {
    const auto sc = default_scenarios().disease_free;
    const auto up = perturb(sc, Parameter::Beta, 0.10);
    EXPECT_DOUBLE_EQ(up.epidemic.beta, 0.0011);
    auto back = up;
    back.epidemic.beta = sc.epidemic.beta;
    EXPECT_EQ(back, sc);
    EXPECT_EQ(perturb(sc, Parameter::Omega, 0.0), sc);
    EXPECT_THROW(perturb(sc, Parameter::Mu1, -1.5), InvalidPerturbation);
}

TEST(PerturbationSet, NonzeroEntries) {
    EXPECT_EQ(PerturbationSet{}.nonzero(), (std::vector<double>{-0.10, -0.05, 0.05, 0.10}));
    EXPECT_THROW((PerturbationSet{{0.0, 0.0}}.nonzero()), ValidationError);
}

TEST(EvaluateQuantity, Examples) {
    const auto [df, en] = default_scenarios();
    EXPECT_NEAR(evaluate_quantity(df, Quantity::R0), 0.77683, 5e-6);
    EXPECT_NEAR(evaluate_quantity(en, Quantity::Capital), 89658189, 0.005 * 89658189);
    auto no_profit = en;
    no_profit.policy.phi = 0;
    EXPECT_NEAR(evaluate_quantity(no_profit, Quantity::EndProfit), 0.0, 1e-3);
}

TEST(SensitivityIndex, R0Cells) {
    const auto sc = default_scenarios().endemic;
    EXPECT_NEAR(sensitivity_index(sc, Quantity::R0, Parameter::Lambda), 1.0, 1e-12);
    EXPECT_NEAR(sensitivity_index(sc, Quantity::R0, Parameter::Gamma), -0.9109167, 1e-7);
    EXPECT_NEAR(sensitivity_index(sc, Quantity::R0, Parameter::Gamma), -0.91092, 5e-5);
    EXPECT_EQ(sensitivity_index(sc, Quantity::R0, Parameter::Interest), 0.0);
    EXPECT_NEAR(sensitivity_index(sc, Quantity::R0, Parameter::Mu1), fixtures::r0_mu1_estimator(),
                1e-12);
    EXPECT_NEAR(fixtures::r0_mu1_estimator(), -1.0063036, 1e-7);
}

TEST(SensitivityTable, ShortHorizonHasNoCapital) {
    auto sc = default_scenarios().disease_free;
    sc.policy.horizon_T = 60;
    EXPECT_EQ(evaluate_quantity(sc, Quantity::Capital), 0.0);
    EXPECT_THROW(sensitivity_table(sc), ZeroBaseline);
}

TEST(SensitivityIndex, ZeroBaseline) {
    auto sc = default_scenarios().endemic;
    sc.policy.phi = 0;
    sc.policy.horizon_T = 50;
    // Pi_end collapses to round-off around zero; force an exact zero.
    sc.policy.benefit_H = sc.policy.benefit_D = sc.policy.benefit_Dstar = 0;
    EXPECT_THROW(sensitivity_index(sc, Quantity::EndProfit, Parameter::Beta), ZeroBaseline);
}

TEST(AnalyticR0, Values) {
    const auto a = analytic_r0_sensitivities(baseline_scenario().epidemic);
    EXPECT_NEAR(a[idx(Parameter::Alpha2)], -0.06866, 1e-5);
    EXPECT_NEAR(a[idx(Parameter::Alpha2)], -0.068654, 1e-6);
    EXPECT_NEAR(a[idx(Parameter::Mu2)], -0.025114, 1e-6);
    EXPECT_EQ(a[idx(Parameter::Alpha1)], 0.0);
    EXPECT_EQ(a[idx(Parameter::Mu1)], -1.0);
}

TEST(AnalyticR0, MatchesEstimatorBothScenarios) {
    for (bool endemic : {false, true}) {
        const auto sc = endemic ? default_scenarios().endemic : default_scenarios().disease_free;
        const auto exact = analytic_r0_sensitivities(sc.epidemic);
        for (Parameter p : kAllParameters) {
            EXPECT_NEAR(table_for(endemic).at(Quantity::R0, p), exact[idx(p)], 0.01) << name(p);
        }
    }
}

TEST(SensitivityTable, ExactCells) {
    for (bool endemic : {false, true}) {
        const auto& t = table_for(endemic);
        EXPECT_NEAR(t.at(Quantity::R0, Parameter::Lambda), 1.0, 1e-12);
        EXPECT_NEAR(t.at(Quantity::R0, Parameter::Beta), 1.0, 1e-12);
        EXPECT_NEAR(t.at(Quantity::EndProfit, Parameter::Phi), 1.0, 1e-9);
        EXPECT_NEAR(t.at(Quantity::EndProfit, Parameter::Omega), 0.0, 1e-9);
        EXPECT_NEAR(t.at(Quantity::Capital, Parameter::Omega), 0.0, 1e-9);
        EXPECT_NEAR(t.at(Quantity::GrossPremium, Parameter::Omega), 0.1 / 1.15, 1e-9);
        EXPECT_NEAR(t.at(Quantity::GrossPremium, Parameter::Phi), 0.05 / 1.15, 1e-9);
    }
}

TEST(SensitivityTable, MatchesReferenceCells) {
    for (bool endemic : {false, true}) {
        const auto& t = table_for(endemic);
        const auto& expected_table = endemic ? fixtures::kExpectedEndemic : fixtures::kExpectedDiseaseFree;
        for (Parameter p : kAllParameters) {
            for (Quantity q : kAllQuantities) {
                const double expected = (p == Parameter::Mu1 && q == Quantity::R0)
                                            ? fixtures::r0_mu1_estimator()
                                            : expected_table[idx(p)][idx(q)];
                EXPECT_NEAR(t.at(q, p), expected, 0.01) << name(q) << "/" << name(p);
            }
        }
    }
}

TEST(SensitivityTable, AgreesWithSingleCellEstimator) {
    const auto sc = default_scenarios().disease_free;
    EXPECT_DOUBLE_EQ(table_for(false).at(Quantity::Capital, Parameter::BenefitH),
                     sensitivity_index(sc, Quantity::Capital, Parameter::BenefitH));
}

TEST(SensitivityTable, CustomPerturbations) {
    auto sc = default_scenarios().endemic;
    sc.policy.horizon_T = 100;
    const auto t = sensitivity_table(sc, PerturbationSet{{0.01}}, "custom");
    EXPECT_EQ(t.scenario, "custom");
    EXPECT_NEAR(t.at(Quantity::R0, Parameter::Mu1), -1.0 / 1.01, 1e-12);
}
