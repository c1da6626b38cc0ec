#include <gtest/gtest.h>

#include <set>

#include "grunlab/concavity.hpp"
#include "grunlab/functional.hpp"
#include "grunlab/search.hpp"

using namespace grunlab;

TEST(RandomConcave, ValidAndDeterministic) {
    const auto a = random_concave(42, 3);
    EXPECT_TRUE(p_concavity_check(a.piecewise(), 1.0).concave);
    const auto b = random_concave(42, 3);
    ASSERT_EQ(a.breakpoints().size(), b.breakpoints().size());
    for (std::size_t i = 0; i < a.breakpoints().size(); ++i) {
        EXPECT_EQ(a.breakpoints()[i].t, b.breakpoints()[i].t);
        EXPECT_EQ(a.breakpoints()[i].h, b.breakpoints()[i].h);
    }
    EXPECT_EQ(profile_hash(a), profile_hash(b));
    EXPECT_NE(profile_hash(a), profile_hash(random_concave(43, 3)));
}

TEST(RandomConcave, TenThousandDrawsAllValid) {
    int zero_end = 0;
    for (std::uint64_t s = 0; s < 10'000; ++s) {
        const int m = 3 + static_cast<int>(s % 30);
        const auto h = random_concave(s, m, -1.0, 2.0);
        EXPECT_EQ(static_cast<int>(h.breakpoints().size()), m);
        EXPECT_DOUBLE_EQ(h.lo(), -1.0);
        EXPECT_DOUBLE_EQ(h.hi(), 2.0);
        // Re-validating through the public constructor must succeed.
        EXPECT_NO_THROW(ConcaveProfile(h.piecewise()));
        if (h.breakpoints().front().h == 0.0 || h.breakpoints().back().h == 0.0) ++zero_end;
    }
    // Endpoint zeros are part of the distribution.
    EXPECT_GT(zero_end, 500);
}

TEST(RandomConcave, RejectsTooFewBreakpoints) { EXPECT_THROW(random_concave(1, 2), ParameterError); }

TEST(Search, ConfigValidation) {
    SearchConfig c;
    c.breakpoints = 2;
    EXPECT_THROW(c.validate(), ParameterError);
    c = {};
    c.budget = 0;
    EXPECT_THROW(c.validate(), ParameterError);
    c = {};
    c.beta = 0;
    EXPECT_THROW(c.validate(), ParameterError);
}

TEST(Search, ReachesDiagonalEqualityCase) {
    SearchConfig c;
    c.seed = 7;
    const auto r = minimize_tail_ratio(c);
    EXPECT_LE(r.gap, 1e-3);
    EXPECT_GE(r.gap, -1e-9);
    EXPECT_NEAR(r.best_ratio, tail_mass_ratio(r.best, 1.0, 1.0), 1e-15);
    ASSERT_FALSE(r.trace.empty());
}

TEST(Search, ReachesAlphaLessThanBetaEqualityCase) {
    SearchConfig c;
    c.seed = 11;
    c.alpha = 1;
    c.beta = 2;
    const auto r = minimize_tail_ratio(c);
    EXPECT_LE(r.gap, 1e-3);
    EXPECT_GE(r.gap, -1e-9);
}

TEST(Search, BetaBelowAlphaOnlyReportsGap) {
    SearchConfig c;
    c.seed = 3;
    c.alpha = 3;
    c.beta = 1;
    c.budget = 2000;
    c.restarts = 2;
    const auto r = minimize_tail_ratio(c);
    EXPECT_GE(r.gap, -1e-9);
    EXPECT_EQ(r.bound.regime, Regime::beta_le_alpha);
}

TEST(Search, DeterministicAcrossWorkerCounts) {
    SearchConfig c;
    c.seed = 5;
    c.budget = 1500;
    c.restarts = 4;
    c.workers = 1;
    const auto one = minimize_tail_ratio(c);
    c.workers = 3;
    const auto three = minimize_tail_ratio(c);
    EXPECT_EQ(one.best_ratio, three.best_ratio);
    EXPECT_EQ(one.best_restart, three.best_restart);
    EXPECT_EQ(profile_hash(one.best), profile_hash(three.best));
    EXPECT_EQ(one.trace.size(), three.trace.size());
}

TEST(Search, TraceIsMonotonePerRestart) {
    SearchConfig c;
    c.seed = 9;
    c.budget = 800;
    c.restarts = 3;
    const auto r = minimize_tail_ratio(c);
    for (std::size_t i = 1; i < r.trace.size(); ++i)
        if (r.trace[i].restart == r.trace[i - 1].restart) EXPECT_LT(r.trace[i].ratio, r.trace[i - 1].ratio);
}

TEST(Search, ProjectionKeepsProfilesValid) {
    std::vector<double> t{0, 0.25, 0.5, 0.75, 1};
    // Wildly non-concave and partly negative input.
    const auto y = detail::project_concave(t, {-3, 2, -1, 5, 0.5});
    ASSERT_TRUE(y.has_value());
    EXPECT_NO_THROW(ConcaveProfile(detail::zip(t, *y)));
    EXPECT_FALSE(detail::project_concave(t, {0, 0, 0, 0, 0}).has_value());
}

TEST(Sweep, SmallGridNoViolations) {
    const auto s = sweep({0.5, 1, 2}, {0.5, 1, 3}, 40, 7);
    EXPECT_EQ(s.rows.size(), 9u);
    EXPECT_EQ(s.violations, 0);
    for (const auto& r : s.rows) {
        EXPECT_GE(r.min_slack, -1e-9);
        EXPECT_EQ(r.argmin_profile_hash.size(), 16u);
        EXPECT_EQ(r.trials, 40);
    }
    const auto csv = sweep_csv(s);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,beta,trials,min_slack,argmin_profile_hash,seed");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
}

TEST(Sweep, DiagonalSlackNearZero) {
    // Nearly affine draws (small slope spread, one zero endpoint) sit close to the equality case.
    const auto s = sweep({1}, {1}, 400, 2);
    EXPECT_LT(s.rows.front().min_slack, 2e-2);
}

TEST(Sweep, EmptyGrid) {
    const auto s = sweep({}, {1.0}, 10, 1);
    EXPECT_TRUE(s.rows.empty());
    EXPECT_EQ(s.violations, 0);
    EXPECT_EQ(sweep_csv(s), "alpha,beta,trials,min_slack,argmin_profile_hash,seed\n");
}

TEST(Sweep, Deterministic) {
    const auto a = sweep({1, 2}, {1, 2}, 30, 77, 1);
    const auto b = sweep({1, 2}, {1, 2}, 30, 77, 4);
    EXPECT_EQ(sweep_csv(a), sweep_csv(b));
}
