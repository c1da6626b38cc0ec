#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grunlab/concavity.hpp"
#include "grunlab/integrals.hpp"
#include "grunlab/profile.hpp"
#include "grunlab/search.hpp"
#include "oracle.hpp"

using namespace grunlab;

namespace {

ConcaveProfile down() { return ConcaveProfile({{0, 1}, {1, 0}}); }
ConcaveProfile up() { return ConcaveProfile({{0, 0}, {1, 1}}); }
ConcaveProfile flat(double lo, double hi, double c = 1.0) { return ConcaveProfile({{lo, c}, {hi, c}}); }

}  // namespace

TEST(Evaluate, LinearInterpolation) {
    EXPECT_DOUBLE_EQ(evaluate(PiecewiseLinear({{0, 1}, {1, 0}}), 0.5), 0.5);
    EXPECT_DOUBLE_EQ(evaluate(AnalyticProfile::constant(2, 0, 3), 1.7), 2.0);
    EXPECT_DOUBLE_EQ(evaluate(AnalyticProfile::decreasing_power(1, 0, 1, 2), 0.5), 0.25);
}

TEST(Evaluate, OutsideDomainThrows) {
    EXPECT_THROW(evaluate(down(), 1.5), DomainError);
    EXPECT_THROW(evaluate(down(), -1e-3), DomainError);
    EXPECT_THROW(evaluate(AnalyticProfile::constant(2, 0, 3), 3.1), DomainError);
}

TEST(Validation, RejectsBadBreakpoints) {
    EXPECT_THROW(PiecewiseLinear({{0, 1}}), ValidationError);
    EXPECT_THROW(PiecewiseLinear({{0, 1}, {0, 2}}), ValidationError);
    EXPECT_THROW(PiecewiseLinear({{0, 1}, {1, -0.1}}), ValidationError);
    EXPECT_THROW(PiecewiseLinear({{0, NAN}, {1, 1}}), ValidationError);
    // interior zero
    EXPECT_THROW(ConcaveProfile({{0, 1}, {0.5, 0}, {1, 1}}), ValidationError);
    // convex kink
    EXPECT_THROW(ConcaveProfile({{0, 1}, {0.5, 0.2}, {1, 1}}), ValidationError);
    // zero mass
    EXPECT_THROW(ConcaveProfile({{0, 0}, {1, 0}}), ValidationError);
    EXPECT_NO_THROW(ConcaveProfile({{0, 0}, {0.5, 1}, {1, 0}}));
}

TEST(PoweredIntegral, Examples) {
    EXPECT_NEAR(powered_integral(flat(0, 3), 5.0, 0, 3), 3.0, 1e-14);
    EXPECT_NEAR(powered_integral(down(), 2.0, 0, 1), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(powered_integral(down(), 1.0, 1.0 / 3.0, 1.0), 2.0 / 9.0, 1e-14);
}

TEST(PoweredIntegral, NonPositiveExponentThrows) {
    EXPECT_THROW(powered_integral(down(), 0.0, 0, 1), ParameterError);
    EXPECT_THROW(powered_integral(down(), -1.0, 0, 1), ParameterError);
}

TEST(PoweredIntegral, SubintervalOutsideDomainThrows) {
    EXPECT_THROW(powered_integral(down(), 1.0, -0.5, 1), DomainError);
}

TEST(MomentIntegral, Examples) {
    EXPECT_NEAR(moment_integral(flat(0, 2), 1.0, 0, 2), 2.0, 1e-14);
    EXPECT_NEAR(moment_integral(down(), 1.0, 0, 1), 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(moment_integral(up(), 1.0, 0, 1), 1.0 / 3.0, 1e-14);
}

TEST(AlphaCentroid, Examples) {
    EXPECT_NEAR(alpha_centroid(flat(0, 2), 7.0), 1.0, 1e-14);
    EXPECT_NEAR(alpha_centroid(down(), 1.0), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(alpha_centroid(down(), 2.0), 0.25, 1e-14);
    EXPECT_NEAR(alpha_centroid(up(), 1.0), 2.0 / 3.0, 1e-14);
}

TEST(AlphaCentroid, ZeroAlphaIsExactMidpoint) {
    const ConcaveProfile h({{-0.3, 0.2}, {0.1, 1.0}, {1.7, 0.0}});
    EXPECT_EQ(alpha_centroid(h, 0.0), 0.5 * (-0.3 + 1.7));
}

TEST(TailMassRatio, Examples) {
    for (double a : {0.0, 0.5, 1.0, 4.0})
        for (double b : {0.5, 1.0, 3.0}) EXPECT_NEAR(tail_mass_ratio(flat(0, 1), a, b), 0.5, 1e-14);
    EXPECT_NEAR(tail_mass_ratio(down(), 1.0, 1.0), 4.0 / 9.0, 1e-14);
    EXPECT_NEAR(tail_mass_ratio(down(), 1.0, 2.0), 8.0 / 27.0, 1e-14);
}

TEST(PConcavity, Examples) {
    std::vector<double> grid;
    for (int i = 0; i < 64; ++i) grid.push_back(i / 63.0);
    const auto sq = [](double t) { return (1 - t) * (1 - t); };
    EXPECT_TRUE(p_concavity_check_on(sq, grid, 0.5).concave);
    EXPECT_TRUE(p_concavity_check(AnalyticProfile::decreasing_power(1, 0, 1, 2), 0.5).concave);

    // Linear interpolation of those samples overshoots the square between knots,
    // so its square root bulges at midpoints: the interpolant itself is not 1/2-concave.
    std::vector<Breakpoint> pts;
    for (double t : grid) pts.push_back({t, sq(t)});
    EXPECT_FALSE(p_concavity_check(PiecewiseLinear(pts), 0.5).concave);

    const auto bad = p_concavity_check(AnalyticProfile::decreasing_power(1, 0, 1, 1), 2.0);
    ASSERT_FALSE(bad.concave);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_GE(bad.witness->mid, 0.0);
    EXPECT_LE(bad.witness->mid, 1.0);

    // (1-t)^2 is convex everywhere, so a grid aligned to t = 0.5 finds a witness there.
    const auto centred = p_concavity_check_on([](double t) { return 1.0 - t; }, {0.25, 0.5, 0.75}, 2.0);
    ASSERT_FALSE(centred.concave);
    EXPECT_DOUBLE_EQ(centred.witness->mid, 0.5);

    for (double p : {0.1, 1.0, 5.0}) EXPECT_TRUE(p_concavity_check(flat(0, 1).piecewise(), p).concave);
}

TEST(Superlevel, MeasureClosedForms) {
    // h = 1 on [0,1]: W(s) = (1 - s^beta)/beta
    for (double beta : {0.5, 1.0, 2.0})
        for (double s : {0.0, 0.3, 0.9, 1.0})
            EXPECT_NEAR(superlevel_measure(flat(0, 1), beta, s), (1 - std::pow(s, beta)) / beta, 1e-13);
    // h = 1 - t, beta = 1: W(s) = (1 - s)^2 / 2
    for (double s : {0.0, 0.25, 0.8}) EXPECT_NEAR(superlevel_measure(down(), 1.0, s), (1 - s) * (1 - s) / 2, 1e-14);
}

TEST(Superlevel, ConstantAndTriangle) {
    EXPECT_TRUE(superlevel_measure_concavity_check(flat(0, 1), 1.0).concave);
    EXPECT_TRUE(superlevel_measure_concavity_check(down(), 1.0).concave);
}

TEST(Superlevel, RandomProfilesBetaAtLeastOne) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto h = random_concave(s, 3 + static_cast<int>(s % 12));
        for (double beta : {1.0, 2.0, 3.0}) {
            const auto c = superlevel_measure_concavity_check(h, beta);
            EXPECT_TRUE(c.concave) << "seed " << s << " beta " << beta << " violation " << c.max_violation;
            // A finer grid agrees with the default one.
            EXPECT_TRUE(superlevel_measure_concavity_check(h, beta, 1024).concave);
        }
    }
}

TEST(Superlevel, SqrtDensityFailsNearZeroLevel) {
    // With beta < 1 the density y^(beta-1) blows up at y = 0 and W^(1/(beta+1))
    // picks up a convex s^beta term near s = 0.
    const auto c = superlevel_measure_concavity_check(flat(0, 1), 0.5);
    EXPECT_FALSE(c.concave);
    EXPECT_LT(c.worst_s, 0.05);
}

TEST(Properties, ScaleInvariance) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto h = random_concave(s, 7);
        const auto h2 = h.scaled(3.7);
        EXPECT_NEAR(alpha_centroid(h2, 1.5), alpha_centroid(h, 1.5), 1e-13);
        EXPECT_NEAR(tail_mass_ratio(h2, 1.5, 2.5), tail_mass_ratio(h, 1.5, 2.5), 1e-13);
    }
}

TEST(Properties, TranslationCovariance) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto h = random_concave(s, 9);
        for (double tau : {-2.5, 0.75, 10.0})
            EXPECT_NEAR(alpha_centroid(h.translated(tau), 2.0), alpha_centroid(h, 2.0) + tau, 1e-10);
    }
}

TEST(Properties, ReflectionComplement) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto h = random_concave(s, 6);
        const auto r = h.reflected();
        for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 3.0}, {3.0, 0.5}}) {
            EXPECT_NEAR(tail_mass_ratio(r, a, b) + tail_mass_ratio(h, a, b), 1.0, 1e-10);
            EXPECT_NEAR(tail_mass_ratio(r, a, b), head_mass_ratio(h, a, b), 1e-10);
        }
    }
}

TEST(Properties, CentroidStrictlyInside) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto h = random_concave(s, 3 + static_cast<int>(s % 20));
        for (double a : {0.25, 1.0, 8.0}) {
            const double g = alpha_centroid(h, a);
            EXPECT_GT(g, h.lo());
            EXPECT_LT(g, h.hi());
        }
    }
}

TEST(Properties, Additivity) {
    const QuadratureSpec spec;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto h = random_concave(s, 11);
        for (double beta : {0.5, 1.0, 3.3}) {
            const double whole = powered_integral(h, beta, 0, 1);
            const double split = powered_integral(h, beta, 0, 0.37) + powered_integral(h, beta, 0.37, 1);
            EXPECT_NEAR(whole, split, 2 * spec.abs_tol);
        }
    }
}

TEST(Properties, AgreesWithIndependentQuadrature) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto h = random_concave(s, 3 + static_cast<int>(s % 15));
        for (double beta : {0.5, 1.0, 2.0, 3.7}) {
            EXPECT_NEAR(powered_integral(h, beta, 0, 1), oracle::mass(h, beta, 0, 1), 1e-12);
            EXPECT_NEAR(moment_integral(h, beta, 0, 1), oracle::moment(h, beta, 0, 1), 1e-12);
            EXPECT_NEAR(tail_mass_ratio(h, 1.3, beta), oracle::tail_ratio(h, 1.3, beta), 1e-11);
        }
    }
}

TEST(Analytic, ClosedFormsAgreeWithQuadrature) {
    const auto dec = AnalyticProfile::decreasing_power(1.7, -0.4, 1.3, 2.5);
    const auto inc = AnalyticProfile::increasing_power(0.6, 0.5, 2.0, 0.7);
    const auto ball = AnalyticProfile::ball_section(1.3, 4, 0.2);
    for (double beta : {0.5, 1.0, 2.0}) {
        for (const AnalyticProfile* p : {&dec, &inc, &ball}) {
            const double lo = p->lo();
            const double hi = p->hi();
            const double s = lo + 0.2 * (hi - lo);
            const double e = lo + 0.9 * (hi - lo);
            const auto f = [&](double t) { return std::pow(p->value(t), beta); };
            const auto tf = [&](double t) { return t * std::pow(p->value(t), beta); };
            const double ref = oracle::gk(f, s, e);
            EXPECT_NEAR(p->powered_integral(beta, s, e), ref, 1e-9 * ref);
            const double mref = oracle::gk(tf, s, e);
            EXPECT_NEAR(p->moment_integral(beta, s, e), mref, 1e-9 * std::fabs(mref) + 1e-12);
        }
    }
}

TEST(Analytic, IncreasingPowerDomain) {
    const auto g = AnalyticProfile::increasing_power(1.0, 0.5, 2.0, 1.0);
    EXPECT_DOUBLE_EQ(g.lo(), -0.5);
    EXPECT_DOUBLE_EQ(g.hi(), 2.0);
    EXPECT_DOUBLE_EQ(g.value(1.0), 1.5);
}

TEST(Analytic, BallSectionVolume) {
    // Integral of the (n-1)-ball section over [-R, R] is the n-ball volume.
    for (int n : {2, 3, 5}) {
        const auto f = AnalyticProfile::ball_section(1.1, n);
        EXPECT_NEAR(powered_integral(f, 1.0), unit_ball_volume(n) * std::pow(1.1, n), 1e-10);
    }
}

TEST(Quadrature, SpecValidation) {
    EXPECT_THROW((QuadratureSpec{0.0, 60}.validate()), ParameterError);
    EXPECT_THROW((QuadratureSpec{1e-10, 0}.validate()), ParameterError);
}

TEST(Quadrature, ConvergenceErrorCarriesEstimate) {
    const QuadratureSpec tight{1e-300, 3};
    try {
        adaptive_simpson([](double t) { return std::sqrt(t); }, 0.0, 1.0, tight);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_NEAR(e.best_estimate(), 2.0 / 3.0, 1e-2);
    }
}
