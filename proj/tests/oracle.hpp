#pragma once

// Independent reference values for the tests. Integrals go through a
// double-exponential rule split at every breakpoint, never through the
// library's own closed forms. The rule copes with the h^beta endpoint
// singularities that appear when beta < 1 and h vanishes at an end.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <vector>

#include "grunlab/profile.hpp"

namespace oracle {

template <class F>
double gk(const F& f, double a, double b) {
    if (a == b) return 0.0;
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    return rule.integrate(f, a, b, 1e-14);
}

template <class F>
double gk_split(const F& f, std::vector<double> knots) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) acc += gk(f, knots[i], knots[i + 1]);
    return acc;
}

inline std::vector<double> knots(const grunlab::ConcaveProfile& h, double s, double e) {
    std::vector<double> k{s};
    for (const auto& bp : h.breakpoints())
        if (bp.t > s && bp.t < e) k.push_back(bp.t);
    k.push_back(e);
    return k;
}

inline double mass(const grunlab::ConcaveProfile& h, double beta, double s, double e) {
    return gk_split([&](double t) { return std::pow(h.value(t), beta); }, knots(h, s, e));
}

inline double moment(const grunlab::ConcaveProfile& h, double beta, double s, double e) {
    return gk_split([&](double t) { return t * std::pow(h.value(t), beta); }, knots(h, s, e));
}

inline double centroid(const grunlab::ConcaveProfile& h, double alpha) {
    if (alpha == 0.0) return 0.5 * (h.lo() + h.hi());
    return moment(h, alpha, h.lo(), h.hi()) / mass(h, alpha, h.lo(), h.hi());
}

inline double tail_ratio(const grunlab::ConcaveProfile& h, double alpha, double beta) {
    const double g = centroid(h, alpha);
    return mass(h, beta, g, h.hi()) / mass(h, beta, h.lo(), h.hi());
}

}  // namespace oracle
