#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "grunlab/profile.hpp"

namespace grunlab {

struct ConcavityWitness {
    double left;
    double mid;
    double right;
};

struct ConcavityResult {
    bool concave = true;
    /// Largest amount by which f^p at the middle point falls under the chord
    /// of its neighbours, relative to max f^p.
    double max_violation = 0.0;
    std::optional<ConcavityWitness> witness;

    explicit operator bool() const { return concave; }
};

/// Checks concavity of t -> f(t)^p on an explicit ordered grid.
template <class F>
ConcavityResult p_concavity_check_on(const F& f, const std::vector<double>& grid, double p, double tolerance = 1e-9) {
    ConcavityResult res;
    if (grid.size() < 3) return res;
    std::vector<double> v(grid.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        v[i] = std::pow(std::max(0.0, f(grid[i])), p);
        scale = std::max(scale, v[i]);
    }
    if (scale <= 0.0) return res;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double w = (grid[i] - grid[i - 1]) / (grid[i + 1] - grid[i - 1]);
        const double chord = (1.0 - w) * v[i - 1] + w * v[i + 1];
        const double gap = (chord - v[i]) / scale;
        if (gap > res.max_violation) {
            res.max_violation = gap;
            if (gap > tolerance) {
                res.concave = false;
                res.witness = ConcavityWitness{grid[i - 1], grid[i], grid[i + 1]};
            }
        }
    }
    return res;
}

/// p-concavity of a raw piecewise-linear sample: breakpoints and segment midpoints.
inline ConcavityResult p_concavity_check(const PiecewiseLinear& f, double p, double tolerance = 1e-9) {
    return p_concavity_check_on([&](double t) { return f.value(t); }, f.sample_grid(), p, tolerance);
}

/// p-concavity of any profile on a uniform grid of `points` abscissas.
template <OneDimProfile P>
ConcavityResult p_concavity_check(const P& f, double p, double tolerance = 1e-9, int points = 257) {
    std::vector<double> grid(static_cast<std::size_t>(std::max(points, 3)));
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = f.lo() + (f.hi() - f.lo()) * static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    return p_concavity_check_on([&](double t) { return f.value(t); }, grid, p, tolerance);
}

inline ConcavityResult p_concavity_check(const AnyProfile& f, double p, double tolerance = 1e-9) {
    if (const auto* pl = std::get_if<PiecewiseLinear>(&f.get())) return p_concavity_check(*pl, p, tolerance);
    return p_concavity_check<AnyProfile>(f, p, tolerance);
}

/// W(s) = mu_beta{(x, y) : 0 <= y <= h(x), y >= s} with d mu_beta = y^{beta-1} dx dy,
/// i.e. (1/beta) int (h^beta - s^beta)_+ dt, exact per affine segment.
inline double superlevel_measure(const ConcaveProfile& h, double beta, double s) {
    detail::check_exponent(beta);
    const auto pts = h.breakpoints();
    const double sb = std::pow(std::max(s, 0.0), beta);
    double acc = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double t0 = pts[i - 1].t, t1 = pts[i].t;
        double A = pts[i - 1].h, B = pts[i].h;
        if (std::max(A, B) <= s) continue;
        // Clip the segment to {h >= s}.
        if (A < s) {
            t0 = t0 + (t1 - t0) * (s - A) / (B - A);
            A = s;
        } else if (B < s) {
            t1 = t0 + (t1 - t0) * (A - s) / (A - B);
            B = s;
        }
        if (t1 <= t0) continue;
        acc += detail::affine_segment(t0, t1, A, B, beta).mass - sb * (t1 - t0);
    }
    return std::max(0.0, acc / beta);
}

struct SuperlevelCheck {
    bool concave = true;
    double max_violation = 0.0;
    double worst_s = 0.0;
};

/// Concavity of s -> W(s)^{1/(beta+1)} on a uniform s-grid over [0, max h],
/// normalised by W(0)^{1/(beta+1)} so the tolerance is scale free.
inline SuperlevelCheck superlevel_measure_concavity_check(const ConcaveProfile& h, double beta, int grid_size = 512,
                                                          double tolerance = 1e-7) {
    SuperlevelCheck res;
    const int n = std::max(grid_size, 3);
    const double top = h.max_value();
    const double e = 1.0 / (beta + 1.0);
    const double w0 = superlevel_measure(h, beta, 0.0);
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double s = top * k / (n - 1);
        g[static_cast<std::size_t>(k)] = std::pow(superlevel_measure(h, beta, s) / w0, e);
    }
    for (int k = 1; k + 1 < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double second = g[i - 1] - 2.0 * g[i] + g[i + 1];
        if (second > res.max_violation) {
            res.max_violation = second;
            res.worst_s = top * k / (n - 1);
        }
    }
    res.concave = res.max_violation <= tolerance;
    return res;
}

}  // namespace grunlab
