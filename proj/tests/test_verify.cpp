#include <gtest/gtest.h>

#include <numbers>

#include "gft/json_io.hpp"
#include "gft/nelder_mead.hpp"
#include "gft/verify.hpp"

using namespace gft;

TEST(NelderMead, FindsQuadraticPeak) {
    const auto r = nelder_mead_maximize(
        [](const std::vector<double>& x) { return -(x[0] - 1) * (x[0] - 1) - 2 * (x[1] + 0.5) * (x[1] + 0.5); },
        {0.0, 0.0}, {0.5, 0.5}, 500);
    EXPECT_NEAR(r.x[0], 1.0, 1e-6);
    EXPECT_NEAR(r.x[1], -0.5, 1e-6);
}

TEST(Search, T1HalfPlane) {
    const auto phi = MindaPhi::janowski(1, -1);
    const auto r = search_supremum(Claim::T1, phi, SearchBudget{}, 7);
    EXPECT_LE(r.empirical_sup, 1.25 + tol_violation);
    EXPECT_GE(r.empirical_sup, 0.98 * 1.25);
    EXPECT_FALSE(r.violation);
    EXPECT_DOUBLE_EQ(r.theoretical_bound, 1.25);
    EXPECT_EQ(r.num_samples, 2000u);
}

TEST(Search, LargerBudgetAgrees) {
    const auto phi = MindaPhi::janowski(1, -1);
    SearchBudget big;
    big.samples = 20000;
    const auto small = search_supremum(Claim::T1, phi, SearchBudget{}, 7);
    const auto large = search_supremum(Claim::T1, phi, big, 7);
    EXPECT_NEAR(small.empirical_sup, large.empirical_sup, 0.01 * large.empirical_sup);
}

TEST(Search, T5HalfPlane) {
    const auto r = search_supremum(Claim::T5, MindaPhi::janowski(1, -1), SearchBudget{}, 3);
    EXPECT_LE(r.empirical_sup, 84.0 + 1e-6);
    EXPECT_FALSE(r.violation);
    const auto k = extremal_starlike(MindaPhi::janowski(1, -1));
    EXPECT_NEAR(std::abs(toeplitz_det(k, 3, 2)), 84.0, 1e-9);
}

TEST(Search, ZeroSamplesUsesExtremal) {
    SearchBudget b;
    b.samples = 0;
    const auto r = search_supremum(Claim::T2, MindaPhi::janowski(1, -1), b, 1);
    EXPECT_NEAR(r.empirical_sup, 5.0 / 16.0, 1e-12);
    EXPECT_EQ(r.best_params, rotated_identity_sample());
    EXPECT_EQ(r.num_samples, 0u);
}

TEST(Search, GateFailureThrows) {
    EXPECT_THROW(search_supremum(Claim::T1, MindaPhi::custom({2, 1, 0}), SearchBudget{}, 0), hypothesis_gate_failed);
    EXPECT_THROW(check_attainment(Claim::T1, MindaPhi::custom({2, 1, 0})), hypothesis_gate_failed);
}

TEST(Search, ReproducibleAcrossThreadCounts) {
    SearchBudget one, many;
    one.threads = 1;
    many.threads = 4;
    one.samples = many.samples = 500;
    const auto phi = MindaPhi::power(0.9);
    EXPECT_EQ(search_supremum(Claim::T5, phi, one, 11), search_supremum(Claim::T5, phi, many, 11));
    EXPECT_EQ(search_supremum(Claim::T2, phi, one, 11), search_supremum(Claim::T2, phi, one, 11));
}

TEST(Search, SampledSupMonotoneInBudget) {
    const auto phi = MindaPhi::janowski(0.5, -0.8);
    double prev = 0.0;
    for (std::size_t n : {100u, 400u, 1600u}) {
        SearchBudget b;
        b.samples = n;
        b.refine_steps = 0;
        const auto r = search_supremum(Claim::T2, phi, b, 5);
        EXPECT_GE(r.sampled_sup, prev);
        prev = r.sampled_sup;
    }
}

TEST(Attainment, HalfPlaneTheorems) {
    const auto phi = MindaPhi::janowski(1, -1);
    for (Claim c : theorem_claims) EXPECT_NEAR(check_attainment(c, phi), 0.0, 1e-9) << to_string(c);
}

TEST(Attainment, ConvexT2AndT3Values) {
    const auto phi = MindaPhi::janowski(1, -1);
    EXPECT_NEAR(std::abs(evaluate(Functional::log_toeplitz_21, extremal_convex(phi))), 5.0 / 16.0, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(Functional::log_toeplitz_22, extremal_starlike(phi))), 13.0 / 36.0, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(Functional::toeplitz_32, extremal_convex(MindaPhi::robertson(0.5)))), 4.0, 1e-12);
}

TEST(Attainment, Corollaries) {
    EXPECT_NEAR(check_corollary_attainment(Claim::Crlr, Functional::toeplitz_32, 0.4), 0.0, 1e-9);
    EXPECT_NEAR(check_corollary_attainment(Claim::C6, Functional::log_toeplitz_22, 0.1), 0.0, 1e-9);
    EXPECT_NEAR(check_corollary_attainment(Claim::SSb, Functional::toeplitz_32, 0.9), 0.0, 1e-9);
}

TEST(GateWindow, AlphaJointAndLambda) {
    const auto joint = scan_gate_window({Claim::T5, Claim::T6}, Family::alpha, 1e-3);
    ASSERT_EQ(joint.transitions.size(), 1u);
    EXPECT_NEAR(joint.transitions[0], 1.0 / 7.0, 2e-3);
    EXPECT_TRUE(joint.points.front().second);

    const auto lam = scan_gate_window(Claim::T6, Family::lambda, 1e-3);
    ASSERT_FALSE(lam.transitions.empty());
    EXPECT_NEAR(lam.transitions.back(), 5.0 / 14.0, 2e-3);
    EXPECT_TRUE(lam.points.back().second);
}

TEST(GateWindow, Beta) {
    const auto t6 = scan_gate_window(Claim::T6, Family::beta, 1e-3);
    ASSERT_FALSE(t6.transitions.empty());
    EXPECT_NEAR(t6.transitions.back(), 8.0 / 9.0, 2e-3);
    const auto t5 = scan_gate_window(Claim::T5, Family::beta, 1e-3);
    ASSERT_FALSE(t5.transitions.empty());
    EXPECT_NEAR(t5.transitions.back(), 0.75, 2e-3);
}

TEST(LemmaFuzz, Small) {
    EXPECT_LE(lemma_fuzz(Lemma::prokhorov_szynal, 500, 1).max_slack, 1e-9);
    EXPECT_LE(lemma_fuzz(Lemma::efraimidis, 500, 1).max_slack, 1e-9);
    EXPECT_EQ(lemma_fuzz(Lemma::efraimidis, 50, 2, 1).max_slack, lemma_fuzz(Lemma::efraimidis, 50, 2, 3).max_slack);
}

TEST(Json, BoundReportRoundTrip) {
    for (Claim c : theorem_claims) {
        for (const auto& phi : {MindaPhi::janowski(1, -1), MindaPhi::custom({2, 1, 0}), MindaPhi::power(0.8)}) {
            const auto r = bound_theorem(c, phi);
            const nlohmann::json j = r;
            EXPECT_EQ(nlohmann::json::parse(j.dump()).get<BoundReport>(), r);
        }
    }
    const auto cr = bound_corollary(Claim::Crlr, Functional::toeplitz_32, 0.4);
    EXPECT_EQ(nlohmann::json::parse(nlohmann::json(cr).dump()).get<BoundReport>(), cr);
}

TEST(Json, SearchResultRoundTrip) {
    SearchBudget b;
    b.samples = 200;
    const auto r = search_supremum(Claim::T4, MindaPhi::janowski(1, -1), b, 9);
    const nlohmann::json j = r;
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<SearchResult>(), r);
}
