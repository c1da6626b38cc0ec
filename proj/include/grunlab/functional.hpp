#pragma once

// Theorem verdicts on concave profiles and the decreasing affine comparison
// function that matches a profile's value at its alpha-centroid together with
// its total and right-tail beta-masses.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "grunlab/bounds.hpp"
#include "grunlab/concavity.hpp"
#include "grunlab/integrals.hpp"
#include "grunlab/quadrature.hpp"
#include "grunlab/report.hpp"

namespace grunlab {

namespace detail {

template <class P>
Provenance profile_provenance(const P& h, const QuadratureSpec& spec) {
    if constexpr (std::is_same_v<P, AnalyticProfile>) {
        if (h.kind() == AnalyticProfile::Kind::ball_section) return Provenance::quadrature(spec.abs_tol);
    } else if constexpr (std::is_same_v<P, AnyProfile>) {
        if (const auto* a = std::get_if<AnalyticProfile>(&h.get()))
            return profile_provenance(*a, spec);
    }
    return Provenance::exact();
}

}  // namespace detail

/// Compares the right-tail beta-mass ratio beyond g_alpha(h) with its sharp bound.
template <OneDimProfile P>
TheoremReport verify_functional(const P& h, double alpha, double beta, const QuadratureSpec& spec = {}) {
    if constexpr (!std::is_same_v<P, ConcaveProfile>) {
        const auto c = p_concavity_check(h, 1.0);
        if (!c.concave) throw ValidationError("profile is not concave; functional bound does not apply");
    }
    const double g = alpha_centroid(h, alpha, spec);
    const double ratio = tail_mass_ratio(h, alpha, beta, spec);
    return make_report("functional_grunbaum", ratio, functional_bound(alpha, beta),
                       detail::profile_provenance(h, spec),
                       {{"alpha", alpha}, {"beta", beta}, {"g_alpha", g}, {"a", h.lo()}, {"b", h.hi()}});
}

/// g(t) = c (delta - t) on [gamma, delta], extended by zero.
struct ComparisonAffine {
    double gamma;
    double delta;
    double c;
    double g_alpha;  // anchor: the alpha-centroid of the profile it was built from

    double value(double t) const { return (t < gamma || t > delta) ? 0.0 : c * (delta - t); }

    /// int_{max(s, gamma)}^delta g^beta.
    double tail_mass(double beta, double s) const {
        const double from = std::max(s, gamma);
        if (from >= delta) return 0.0;
        return std::pow(c, beta) * std::pow(delta - from, beta + 1.0) / (beta + 1.0);
    }

    double total_mass(double beta) const { return tail_mass(beta, gamma); }

    /// Alpha-centroid of g in closed form.
    double centroid(double alpha) const { return delta - (alpha + 1.0) * (delta - gamma) / (alpha + 2.0); }

    /// gamma + (delta - gamma)(alpha - beta + 1)/(alpha + 2): the centroid of
    /// L_g under the weight (x - gamma)^{alpha - beta} d mu_beta.
    double g0(double alpha, double beta) const {
        return gamma + (delta - gamma) * (alpha - beta + 1.0) / (alpha + 2.0);
    }
};

/// Same quantity as ComparisonAffine::g0, evaluated as a ratio of Beta integrals
/// int_0^1 s^{alpha-beta+1}(1-s)^beta / int_0^1 s^{alpha-beta}(1-s)^beta. Requires alpha > beta - 1.
inline double g0_via_beta(const ComparisonAffine& g, double alpha, double beta) {
    const double k = alpha - beta;
    if (!(k > -1.0)) throw ParameterError("g0_via_beta: needs alpha - beta > -1");
    return g.gamma + (g.delta - g.gamma) * beta_function(k + 2.0, beta + 1.0) / beta_function(k + 1.0, beta + 1.0);
}

template <OneDimProfile P>
ComparisonAffine build_comparison_affine(const P& h, double alpha, double beta, const QuadratureSpec& spec = {}) {
    detail::check_exponent(beta);
    const double ga = alpha_centroid(h, alpha, spec);
    const double hg = h.value(ga);
    if (!(hg > 0.0)) throw DegenerateError("profile vanishes at its alpha-centroid; no comparison function");
    const double tail = powered_integral(h, beta, ga, h.hi(), spec);
    const double total = powered_integral(h, beta, spec);
    const double delta = (beta + 1.0) / std::pow(hg, beta) * tail + ga;
    const double c = hg / (delta - ga);
    const double gamma = delta - std::pow((beta + 1.0) / std::pow(c, beta) * total, 1.0 / (beta + 1.0));
    return {gamma, delta, c, ga};
}

struct ComparisonValidation {
    // Matching conditions, each relative (to h(g_alpha) or to the total mass).
    double value_match_error = 0.0;
    double total_mass_error = 0.0;
    double tail_mass_error = 0.0;
    bool ordering_ok = false;            // a <= gamma <= g_alpha <= b <= delta
    double tail_domination_excess = 0.0; // max_s (T_h(s) - T_g(s)) / total, should be <= tol
    double worst_s = 0.0;
    int crossings_left = 0;
    int crossings_right = 0;
    bool pass = false;
};

template <OneDimProfile P>
ComparisonValidation validate_comparison(const P& h, const ComparisonAffine& g, double alpha, double beta,
                                         int s_grid_size = 128, const QuadratureSpec& spec = {},
                                         double tolerance = 1e-8) {
    ComparisonValidation v;
    const double a = h.lo();
    const double b = h.hi();
    const double ga = alpha_centroid(h, alpha, spec);
    const double hg = h.value(ga);
    const double total = powered_integral(h, beta, spec);
    const double tail = powered_integral(h, beta, ga, b, spec);

    v.value_match_error = std::fabs(g.value(ga) - hg) / hg;
    v.total_mass_error = std::fabs(g.total_mass(beta) - total) / total;
    v.tail_mass_error = std::fabs(g.tail_mass(beta, ga) - tail) / total;

    const double slack = tolerance * (g.delta - std::min(a, g.gamma));
    v.ordering_ok = a <= g.gamma + slack && g.gamma <= ga + slack && ga <= b + slack && b <= g.delta + slack;

    const int n = std::max(s_grid_size, 2);
    const double s0 = std::min(a, g.gamma);
    v.tail_domination_excess = -1.0;
    for (int k = 0; k < n; ++k) {
        const double s = s0 + (g.delta - s0) * k / (n - 1);
        const double th = s >= b ? 0.0 : powered_integral(h, beta, std::max(s, a), b, spec);
        const double excess = (th - g.tail_mass(beta, s)) / total;
        if (excess > v.tail_domination_excess) {
            v.tail_domination_excess = excess;
            v.worst_s = s;
        }
    }

    // Sign changes of h - g (both extended by zero) on each side of the anchor.
    const double vtol = tolerance * std::max(hg, g.value(g.gamma));
    const auto h_ext = [&](double t) { return (t < a || t > b) ? 0.0 : h.value(t); };
    const auto count_changes = [&](double from, double to) {
        const int m = 4 * n;
        int changes = 0;
        int last = 0;
        for (int k = 0; k <= m; ++k) {
            const double t = from + (to - from) * k / m;
            const double d = h_ext(t) - g.value(t);
            const int sgn = d > vtol ? 1 : (d < -vtol ? -1 : 0);
            if (sgn == 0) continue;
            if (last != 0 && sgn != last) ++changes;
            last = sgn;
        }
        return changes;
    };
    v.crossings_left = count_changes(std::min(a, g.gamma), ga);
    v.crossings_right = count_changes(ga, std::max(b, g.delta));

    v.pass = v.value_match_error <= tolerance && v.total_mass_error <= tolerance &&
             v.tail_mass_error <= tolerance && v.ordering_ok && v.tail_domination_excess <= tolerance &&
             v.crossings_left <= 1 && v.crossings_right <= 1;
    return v;
}

struct CentroidDomination {
    Regime regime;
    double g_alpha_h;
    double reference;  // g0 when beta <= alpha, g_alpha(g) otherwise
    bool holds;
};

/// g_alpha(h) <= g0 (beta <= alpha) or g_alpha(h) <= g_alpha(g) (alpha <= beta),
/// with the comparison function rebuilt from h.
template <OneDimProfile P>
CentroidDomination centroid_domination_check(const P& h, double alpha, double beta, const QuadratureSpec& spec = {},
                                             double tolerance = 1e-9) {
    const auto g = build_comparison_affine(h, alpha, beta, spec);
    const bool low_beta = beta <= alpha;
    const double ref = low_beta ? g.g0(alpha, beta) : g.centroid(alpha);
    const double ga = g.g_alpha;
    return {low_beta ? Regime::beta_le_alpha : Regime::alpha_le_beta, ga, ref,
            ga <= ref + tolerance * (g.delta - g.gamma)};
}

}  // namespace grunlab
