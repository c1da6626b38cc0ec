#include <gtest/gtest.h>

#include <cmath>

#include "grunlab/bounds.hpp"
#include "grunlab/functional.hpp"
#include "grunlab/search.hpp"
#include "oracle.hpp"

using namespace grunlab;

namespace {

ConcaveProfile down() { return ConcaveProfile({{0, 1}, {1, 0}}); }
ConcaveProfile flat() { return ConcaveProfile({{0, 1}, {1, 1}}); }

}  // namespace

TEST(FunctionalBound, Examples) {
    EXPECT_NEAR(functional_bound(1, 1).value, 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(functional_bound(2, 1).value, 0.25, 1e-15);
    EXPECT_EQ(functional_bound(2, 1).regime, Regime::beta_le_alpha);
    EXPECT_NEAR(functional_bound(1, 2).value, 8.0 / 27.0, 1e-15);
    EXPECT_EQ(functional_bound(1, 2).regime, Regime::alpha_le_beta);
}

TEST(FunctionalBound, SmallBetaLimitIsOneOverNPlusOne) {
    // alpha = n - 1 = 2: ((beta+1)/4)^(beta+1) -> 1/4 as beta -> 0+.
    EXPECT_NEAR(functional_bound(2, 1e-12).value, 0.25, 1e-11);
    // alpha = 1 (n = 2): -> 1/3.
    EXPECT_NEAR(functional_bound(1, 1e-12).value, 1.0 / 3.0, 1e-11);
}

TEST(FunctionalBound, LargeBetaRootLimit) {
    for (int n : {2, 3, 5}) {
        const double q = static_cast<double>(n) / (n + 1);
        EXPECT_NEAR(functional_bound_root(n - 1, 1e15), q, 1e-14);
        // Moderate beta where the direct power is still representable.
        EXPECT_NEAR(functional_bound_root(n - 1, 50), std::pow(functional_bound(n - 1, 50).value, 1.0 / 50), 1e-14);
        // Raised to n - 1 it is the section ratio constant.
        EXPECT_NEAR(std::pow(functional_bound_root(n - 1, 1e15), n - 1), classic_bounds(n).makai_fradelizi.value, 1e-13);
    }
}

TEST(FunctionalBound, InvalidParameters) {
    EXPECT_THROW(functional_bound(-0.1, 1), ParameterError);
    EXPECT_THROW(functional_bound(1, 0), ParameterError);
}

TEST(FunctionalBound, BranchesAgreeOnDiagonal) {
    for (double a = 0.05; a < 20; a *= 1.37) {
        const double lo = std::pow((a + 1) / (a + 2), a + 1);
        EXPECT_NEAR(functional_bound(a, a).value, lo, 1e-15);
        EXPECT_NEAR(functional_bound(a, a * (1 + 1e-12)).value, functional_bound(a, a).value, 1e-10);
    }
}

TEST(GrunbaumR, Examples) {
    EXPECT_NEAR(grunbaum_r_bound(0.5, 1).value, 27.0 / 64.0, 1e-15);
    EXPECT_NEAR(grunbaum_r_bound(1, 0).value, 0.25, 1e-15);
    EXPECT_EQ(grunbaum_r_bound(1, 0).regime, Regime::midpoint);
    EXPECT_NEAR(grunbaum_r_bound(1, 2).value, 0.25, 1e-15);
    EXPECT_EQ(grunbaum_r_bound(1, 2).regime, Regime::r_ge_1);
    EXPECT_EQ(grunbaum_r_bound(1, 0.5).regime, Regime::r_le_1);
    EXPECT_THROW(grunbaum_r_bound(0, 1), ParameterError);
    EXPECT_THROW(grunbaum_r_bound(1, -1), ParameterError);
}

TEST(GrunbaumR, MidpointValueIsHalfPower) {
    for (double p : {0.1, 0.5, 1.0, 3.0}) EXPECT_NEAR(grunbaum_r_bound(p, 0).value, std::pow(0.5, (p + 1) / p), 1e-15);
}

TEST(GrunbaumR, BranchesAgreeAtROne) {
    for (double p = 0.05; p < 10; p *= 1.5) {
        const double e = (p + 1) / p;
        const double hi = std::pow((p + 1) / (2 * p + 1), e);
        EXPECT_NEAR(grunbaum_r_bound(p, 1).value, hi, 1e-15);
        EXPECT_NEAR(grunbaum_r_bound(p, 1 - 1e-13).value, hi, 1e-11);
    }
}

TEST(JensenBbl, ExamplesAndDominance) {
    EXPECT_NEAR(jensen_bbl_bound(1, 1).value, 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(jensen_bbl_bound(0.5, 1).value, 1.0 / 64.0, 1e-15);
    EXPECT_NEAR(jensen_bbl_bound(1, 2).value, 1.0 / 16.0, 1e-15);
    EXPECT_LT(jensen_bbl_bound(1, 2).value, grunbaum_r_bound(1, 2).value);
    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 20; ++j) {
            const double p = 0.1 * i;
            const double r = 0.2 * j;
            EXPECT_GT(grunbaum_r_bound(p, r).value, jensen_bbl_bound(p, r).value);
        }
}

TEST(ClassicBounds, Examples) {
    const auto b2 = classic_bounds(2);
    EXPECT_NEAR(b2.grunbaum.value, 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(b2.minkowski_radon.value, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(b2.makai_fradelizi.value, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(b2.grunbaum.value, b2.makai_fradelizi.value * 2.0 / 3.0, 1e-15);
    const auto b3 = classic_bounds(3);
    EXPECT_NEAR(b3.grunbaum.value, 27.0 / 64.0, 1e-15);
    EXPECT_NEAR(b3.minkowski_radon.value, 0.25, 1e-15);
    EXPECT_NEAR(b3.makai_fradelizi.value, 9.0 / 16.0, 1e-15);
    EXPECT_THROW(classic_bounds(1), ParameterError);
}

TEST(ClassicBounds, ReductionFromFunctionalBound) {
    for (int n = 2; n <= 8; ++n)
        EXPECT_NEAR(functional_bound(n - 1, n - 1).value, classic_bounds(n).grunbaum.value, 1e-15);
}

TEST(VerifyFunctional, Examples) {
    const auto r1 = verify_functional(down(), 1, 1);
    EXPECT_NEAR(r1.ratio, 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(r1.slack, 0.0, 1e-15);
    EXPECT_TRUE(r1.pass);
    EXPECT_EQ(r1.theorem, "functional_grunbaum");

    const auto r2 = verify_functional(flat(), 1, 1);
    EXPECT_NEAR(r2.slack, 0.5 - 4.0 / 9.0, 1e-15);
    EXPECT_TRUE(r2.pass);

    const auto r3 = verify_functional(down(), 1, 2);
    EXPECT_NEAR(r3.ratio, 8.0 / 27.0, 1e-15);
    EXPECT_NEAR(r3.slack, 0.0, 1e-15);
    EXPECT_TRUE(r3.pass);
}

TEST(VerifyFunctional, RejectsNonConcaveRawProfile) {
    const PiecewiseLinear v({{0, 1}, {0.5, 0.1}, {1, 1}});
    EXPECT_THROW(verify_functional(v, 1, 1), ValidationError);
}

TEST(VerifyFunctional, ReportJsonFields) {
    const auto j = to_json(verify_functional(down(), 1, 1));
    for (const char* k : {"theorem", "ratio", "bound", "slack", "pass", "provenance"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["provenance"]["kind"], "exact");
    EXPECT_EQ(j["details"]["alpha"], 1.0);
}

TEST(Comparison, FixesDecreasingAffine) {
    const auto g = build_comparison_affine(down(), 1, 1);
    EXPECT_NEAR(g.gamma, 0.0, 1e-13);
    EXPECT_NEAR(g.delta, 1.0, 1e-13);
    EXPECT_NEAR(g.c, 1.0, 1e-13);
}

TEST(Comparison, ConstantProfile) {
    const auto g = build_comparison_affine(flat(), 1, 1);
    EXPECT_NEAR(g.delta, 1.5, 1e-13);
    EXPECT_NEAR(g.c, 1.0, 1e-13);
    EXPECT_NEAR(g.gamma, 1.5 - std::sqrt(2.0), 1e-13);
    const auto v = validate_comparison(flat(), g, 1, 1);
    EXPECT_TRUE(v.pass);
    // Masses checked against an independent quadrature of g.
    const auto gb = [&](double t) { return g.value(t); };
    EXPECT_NEAR(oracle::gk(gb, g.gamma, g.delta), 1.0, 1e-12);
    EXPECT_NEAR(oracle::gk(gb, 0.5, g.delta), 0.5, 1e-12);
}

TEST(Comparison, TentProfileAlphaTwoBetaOne) {
    const ConcaveProfile h({{0, 0.5}, {0.5, 1.0}, {1, 0}});
    const auto g = build_comparison_affine(h, 2, 1);
    const auto v = validate_comparison(h, g, 2, 1);
    EXPECT_TRUE(v.pass) << v.value_match_error << ' ' << v.tail_domination_excess << ' ' << v.crossings_left << ' '
                        << v.crossings_right;
}

TEST(Comparison, IdentityHasEqualTailsEverywhere) {
    const auto g = build_comparison_affine(down(), 1, 1);
    const auto v = validate_comparison(down(), g, 1, 1);
    EXPECT_TRUE(v.pass);
    EXPECT_NEAR(v.tail_domination_excess, 0.0, 1e-12);
}

TEST(Comparison, VanishingAtCentroidIsDegenerate) {
    // Raw profile that vanishes at its own centroid.
    const PiecewiseLinear z({{0, 1}, {0.4, 0}, {0.6, 0}, {1, 1}});
    EXPECT_THROW(build_comparison_affine(z, 1, 1), DegenerateError);
}

TEST(Comparison, G0ClosedFormMatchesBetaIntegrals) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto h = random_concave(s, 8);
        for (auto [a, b] : {std::pair{2.0, 1.0}, {3.0, 0.5}, {1.0, 1.0}, {3.0, 2.0}}) {
            const auto g = build_comparison_affine(h, a, b);
            EXPECT_NEAR(g.g0(a, b), g0_via_beta(g, a, b), 1e-12);
        }
    }
}

TEST(Comparison, AffineCentroidMatchesQuadrature) {
    const auto g = build_comparison_affine(flat(), 1.5, 2.5);
    const auto m = oracle::gk([&](double t) { return t * std::pow(g.value(t), 1.5); }, g.gamma, g.delta);
    const auto z = oracle::gk([&](double t) { return std::pow(g.value(t), 1.5); }, g.gamma, g.delta);
    EXPECT_NEAR(g.centroid(1.5), m / z, 1e-12);
}

TEST(CentroidDomination, Examples) {
    const auto e = centroid_domination_check(down(), 1, 1);
    EXPECT_TRUE(e.holds);
    EXPECT_NEAR(e.g_alpha_h, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(e.reference, 1.0 / 3.0, 1e-13);

    const auto c = centroid_domination_check(flat(), 1, 1);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.g_alpha_h, 0.5, 1e-14);
    EXPECT_NEAR(c.reference, 1.5 - std::sqrt(2.0) + std::sqrt(2.0) / 3.0, 1e-13);

    const auto d = centroid_domination_check(flat(), 1, 2);
    EXPECT_EQ(d.regime, Regime::alpha_le_beta);
    EXPECT_TRUE(d.holds);
    EXPECT_LE(0.5, d.reference);
}

TEST(Properties, VerifyFunctionalOnRandomProfiles) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto h = random_concave(s, 3 + static_cast<int>(s % 25));
        for (double a : {0.0, 0.5, 1.0, 2.5})
            for (double b : {0.5, 1.0, 2.0, 4.0}) {
                const auto r = verify_functional(h, a, b);
                EXPECT_TRUE(r.pass) << "seed " << s << " alpha " << a << " beta " << b << " slack " << r.slack;
            }
    }
}

TEST(Properties, ComparisonValidOnRandomProfiles) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto h = random_concave(s, 3 + static_cast<int>(s % 10));
        for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
            const auto g = build_comparison_affine(h, a, b);
            const auto v = validate_comparison(h, g, a, b);
            EXPECT_TRUE(v.pass) << "seed " << s;
            EXPECT_TRUE(centroid_domination_check(h, a, b).holds) << "seed " << s;
        }
    }
}
