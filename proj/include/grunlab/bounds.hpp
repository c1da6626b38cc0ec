#pragma once

// Sharp lower bounds for halfspace mass ratios through powered centroids.

#include <cmath>
#include <map>
#include <string>

#include "grunlab/errors.hpp"

namespace grunlab {

enum class Regime {
    beta_le_alpha,
    alpha_le_beta,
    r_ge_1,
    r_le_1,
    midpoint,
    jensen_bbl,
    minkowski_radon,
    makai_fradelizi,
    grunbaum_classic,
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::beta_le_alpha: return "beta_le_alpha";
        case Regime::alpha_le_beta: return "alpha_le_beta";
        case Regime::r_ge_1: return "r_ge_1";
        case Regime::r_le_1: return "r_le_1";
        case Regime::midpoint: return "midpoint";
        case Regime::jensen_bbl: return "jensen_bbl";
        case Regime::minkowski_radon: return "minkowski_radon";
        case Regime::makai_fradelizi: return "makai_fradelizi";
        case Regime::grunbaum_classic: return "grunbaum_classic";
    }
    return "?";
}

struct SharpBound {
    double value;
    Regime regime;
    std::map<std::string, double> params;
};

/// Lower bound for the right-tail beta-mass beyond the alpha-centroid of a
/// nonnegative concave function.
inline SharpBound functional_bound(double alpha, double beta) {
    if (!(alpha >= 0.0)) throw ParameterError("functional_bound: alpha must be >= 0");
    if (!(beta > 0.0)) throw ParameterError("functional_bound: beta must be > 0");
    if (beta <= alpha)
        return {std::pow((beta + 1.0) / (alpha + 2.0), beta + 1.0), Regime::beta_le_alpha,
                {{"alpha", alpha}, {"beta", beta}}};
    return {std::pow((alpha + 1.0) / (alpha + 2.0), beta + 1.0), Regime::alpha_le_beta,
            {{"alpha", alpha}, {"beta", beta}}};
}

/// functional_bound(alpha, beta)^{1/beta}, evaluated in the log domain so that
/// large beta does not underflow. Tends to (alpha+1)/(alpha+2) as beta grows.
inline double functional_bound_root(double alpha, double beta) {
    functional_bound(alpha, beta);
    const double base = beta <= alpha ? (beta + 1.0) / (alpha + 2.0) : (alpha + 1.0) / (alpha + 2.0);
    return std::exp((beta + 1.0) / beta * std::log(base));
}

/// Halfspace volume fraction through the r-powered centroid of a set with
/// p-concave section profile.
inline SharpBound grunbaum_r_bound(double p, double r) {
    if (!(p > 0.0)) throw ParameterError("grunbaum_r_bound: p must be > 0");
    if (!(r >= 0.0)) throw ParameterError("grunbaum_r_bound: r must be >= 0");
    const double e = (p + 1.0) / p;
    std::map<std::string, double> params{{"p", p}, {"r", r}};
    if (r >= 1.0) return {std::pow((p + 1.0) / (2.0 * p + r), e), Regime::r_ge_1, params};
    return {std::pow((p + r) / (2.0 * p + r), e), r == 0.0 ? Regime::midpoint : Regime::r_le_1, params};
}

/// The weaker constant obtained from Jensen plus Borell-Brascamp-Lieb.
inline SharpBound jensen_bbl_bound(double p, double r) {
    if (!(p > 0.0) || !(r > 0.0)) throw ParameterError("jensen_bbl_bound: p and r must be > 0");
    return {std::pow(p / (2.0 * p + r), (p + 1.0) / p), Regime::jensen_bbl, {{"p", p}, {"r", r}}};
}

/// g(sum f x / sum f) >= p/((n+1)p+1) ||g||_inf for concave g, p-concave f.
inline double jensen_bbl_mean_constant(int n, double p) {
    if (n < 1 || !(p > 0.0)) throw ParameterError("jensen_bbl_mean_constant: need n >= 1, p > 0");
    return p / ((n + 1) * p + 1.0);
}

struct ClassicBounds {
    SharpBound grunbaum;
    SharpBound minkowski_radon;
    SharpBound makai_fradelizi;
};

inline ClassicBounds classic_bounds(int n) {
    if (n < 2) throw ParameterError("classic_bounds: n must be >= 2");
    const double q = static_cast<double>(n) / (n + 1);
    const std::map<std::string, double> params{{"n", static_cast<double>(n)}};
    return {
        {std::pow(q, n), Regime::grunbaum_classic, params},
        {1.0 / (n + 1), Regime::minkowski_radon, params},
        {std::pow(q, n - 1), Regime::makai_fradelizi, params},
    };
}

}  // namespace grunlab
