#pragma once

#include <algorithm>
#include <cmath>

#include "grunlab/errors.hpp"
#include "grunlab/profile.hpp"

namespace grunlab {

template <OneDimProfile P>
double evaluate(const P& h, double t) {
    return h.value(t);
}

template <OneDimProfile P>
double powered_integral(const P& h, double beta, double s, double e, const QuadratureSpec& spec = {}) {
    return h.powered_integral(beta, s, e, spec);
}

template <OneDimProfile P>
double powered_integral(const P& h, double beta, const QuadratureSpec& spec = {}) {
    return h.powered_integral(beta, h.lo(), h.hi(), spec);
}

template <OneDimProfile P>
double moment_integral(const P& h, double beta, double s, double e, const QuadratureSpec& spec = {}) {
    return h.moment_integral(beta, s, e, spec);
}

template <OneDimProfile P>
double moment_integral(const P& h, double beta, const QuadratureSpec& spec = {}) {
    return h.moment_integral(beta, h.lo(), h.hi(), spec);
}

/// g_alpha(h) = int t h^alpha / int h^alpha; alpha = 0 is the midpoint limit.
template <OneDimProfile P>
double alpha_centroid(const P& h, double alpha, const QuadratureSpec& spec = {}) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be finite and >= 0");
    if (alpha == 0.0) return 0.5 * (h.lo() + h.hi());
    const double mass = powered_integral(h, alpha, spec);
    if (!(mass > 0.0)) throw DegenerateError("profile has zero powered integral; centroid undefined");
    const double c = moment_integral(h, alpha, spec) / mass;
    // Rounding can push the ratio a few ulps past the support.
    return std::clamp(c, h.lo(), h.hi());
}

/// int_{g_alpha(h)}^b h^beta / int_a^b h^beta.
template <OneDimProfile P>
double tail_mass_ratio(const P& h, double alpha, double beta, const QuadratureSpec& spec = {}) {
    const double total = powered_integral(h, beta, spec);
    if (!(total > 0.0)) throw DegenerateError("profile has zero powered integral");
    const double g = alpha_centroid(h, alpha, spec);
    return powered_integral(h, beta, g, h.hi(), spec) / total;
}

/// int_a^{g_alpha(h)} h^beta / int_a^b h^beta, the mirror of tail_mass_ratio.
template <OneDimProfile P>
double head_mass_ratio(const P& h, double alpha, double beta, const QuadratureSpec& spec = {}) {
    const double total = powered_integral(h, beta, spec);
    if (!(total > 0.0)) throw DegenerateError("profile has zero powered integral");
    const double g = alpha_centroid(h, alpha, spec);
    return powered_integral(h, beta, h.lo(), g, spec) / total;
}

}  // namespace grunlab
