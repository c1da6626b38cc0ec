#pragma once

// One-dimensional nonnegative profiles: raw piecewise-linear samples, validated
// concave profiles, and closed-form families with exact powered integrals.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grunlab/errors.hpp"
#include "grunlab/quadrature.hpp"

namespace grunlab {

inline constexpr double kConcaveSlopeTol = 1e-9;

/// Volume of the Euclidean unit ball in R^k.
inline double unit_ball_volume(int k) {
    return std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

struct Breakpoint {
    double t;
    double h;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Anything with a compact support interval, pointwise values and exact (or
/// quadrature-backed) integrals of h^beta and t*h^beta over subintervals.
template <class P>
concept OneDimProfile = requires(const P& p, double x, const QuadratureSpec& q) {
    { p.lo() } -> std::convertible_to<double>;
    { p.hi() } -> std::convertible_to<double>;
    { p.value(x) } -> std::convertible_to<double>;
    { p.powered_integral(x, x, x, q) } -> std::convertible_to<double>;
    { p.moment_integral(x, x, x, q) } -> std::convertible_to<double>;
};

namespace detail {

inline void check_exponent(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        std::ostringstream os;
        os << "powered integral exponent must be finite and > 0 (got " << beta << ")";
        throw ParameterError(os.str());
    }
}

inline void check_subinterval(double s, double e, double lo, double hi) {
    if (!(s <= e) || s < lo || e > hi) {
        std::ostringstream os;
        os << "integration interval [" << s << ", " << e << "] not inside domain [" << lo << ", " << hi << "]";
        throw DomainError(os.str());
    }
}

struct SegmentIntegrals {
    double mass;    // int h^beta dt
    double moment;  // int t h^beta dt
};

// h affine on [t0, t1] with end values A, B >= 0.
inline SegmentIntegrals affine_segment(double t0, double t1, double A, double B, double beta) {
    const double len = t1 - t0;
    const double top = std::max(A, B);
    if (len <= 0.0 || top <= 0.0) return {0.0, 0.0};
    double unit_mass;   // int_0^1 u(s)^beta ds
    double unit_first;  // int_0^1 s u(s)^beta ds
    if (std::min(A, B) < 0.5 * top) {
        const double d = B - A;
        const double b1 = std::pow(B, beta + 1.0) - std::pow(A, beta + 1.0);
        const double b2 = std::pow(B, beta + 2.0) - std::pow(A, beta + 2.0);
        unit_mass = b1 / ((beta + 1.0) * d);
        unit_first = (b2 / (beta + 2.0) - A * b1 / (beta + 1.0)) / (d * d);
    } else {
        const auto u = [&](double s) { return A + (B - A) * s; };
        unit_mass = gauss_legendre20([&](double s) { return std::pow(u(s), beta); }, 0.0, 1.0);
        unit_first = gauss_legendre20([&](double s) { return s * std::pow(u(s), beta); }, 0.0, 1.0);
    }
    const double mass = len * unit_mass;
    return {mass, t0 * mass + len * len * unit_first};
}

}  // namespace detail

/// Piecewise-linear nonnegative function with no shape constraint. Used for raw
/// samples (p-concavity checks, binned Monte Carlo profiles) and as the storage
/// behind ConcaveProfile.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;

    explicit PiecewiseLinear(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {
        if (pts_.size() < 2) throw ValidationError("profile needs at least 2 breakpoints");
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const auto& p = pts_[i];
            if (!std::isfinite(p.t) || !std::isfinite(p.h))
                throw ValidationError("profile breakpoint " + std::to_string(i) + " is not finite");
            if (p.h < 0.0) throw ValidationError("profile ordinate " + std::to_string(i) + " is negative");
            if (i > 0 && !(pts_[i - 1].t < p.t))
                throw ValidationError("profile abscissas must be strictly increasing (index " +
                                      std::to_string(i) + ")");
        }
    }

    double lo() const { return pts_.front().t; }
    double hi() const { return pts_.back().t; }
    std::span<const Breakpoint> breakpoints() const { return pts_; }
    std::size_t size() const { return pts_.size(); }

    double value(double t) const {
        if (!(t >= lo() && t <= hi())) {
            std::ostringstream os;
            os << "t = " << t << " outside profile domain [" << lo() << ", " << hi() << "]";
            throw DomainError(os.str());
        }
        const auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                                         [](double x, const Breakpoint& b) { return x < b.t; });
        if (it == pts_.end()) return pts_.back().h;
        const auto& right = *it;
        const auto& left = *(it - 1);
        const double w = (t - left.t) / (right.t - left.t);
        return std::max(0.0, left.h + w * (right.h - left.h));
    }

    double max_value() const {
        return std::max_element(pts_.begin(), pts_.end(), [](auto& x, auto& y) { return x.h < y.h; })->h;
    }

    double powered_integral(double beta, double s, double e, const QuadratureSpec& = {}) const {
        return integrate(beta, s, e).mass;
    }

    double moment_integral(double beta, double s, double e, const QuadratureSpec& = {}) const {
        return integrate(beta, s, e).moment;
    }

    /// Breakpoints plus segment midpoints: the grid on which shape checks run.
    std::vector<double> sample_grid() const {
        std::vector<double> grid;
        grid.reserve(2 * pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (i > 0) grid.push_back(0.5 * (pts_[i - 1].t + pts_[i].t));
            grid.push_back(pts_[i].t);
        }
        return grid;
    }

    PiecewiseLinear scaled(double factor) const {
        auto pts = pts_;
        for (auto& p : pts) p.h *= factor;
        return PiecewiseLinear(std::move(pts));
    }

    PiecewiseLinear translated(double shift) const {
        auto pts = pts_;
        for (auto& p : pts) p.t += shift;
        return PiecewiseLinear(std::move(pts));
    }

    /// t -> h(-t).
    PiecewiseLinear reflected() const {
        std::vector<Breakpoint> pts(pts_.rbegin(), pts_.rend());
        for (auto& p : pts) p.t = -p.t;
        return PiecewiseLinear(std::move(pts));
    }

private:
    detail::SegmentIntegrals integrate(double beta, double s, double e) const {
        detail::check_exponent(beta);
        detail::check_subinterval(s, e, lo(), hi());
        detail::SegmentIntegrals acc{0.0, 0.0};
        for (std::size_t i = 1; i < pts_.size(); ++i) {
            const double t0 = std::max(pts_[i - 1].t, s);
            const double t1 = std::min(pts_[i].t, e);
            if (t1 <= t0) continue;
            const auto seg = detail::affine_segment(t0, t1, value(t0), value(t1), beta);
            acc.mass += seg.mass;
            acc.moment += seg.moment;
        }
        return acc;
    }

    std::vector<Breakpoint> pts_;
};

/// A piecewise-linear profile certified nonnegative and concave with positive
/// interior and positive integral. Only endpoint ordinates may vanish.
class ConcaveProfile {
public:
    explicit ConcaveProfile(PiecewiseLinear pl) : pl_(std::move(pl)) { validate(); }
    explicit ConcaveProfile(std::vector<Breakpoint> pts) : ConcaveProfile(PiecewiseLinear(std::move(pts))) {}

    double lo() const { return pl_.lo(); }
    double hi() const { return pl_.hi(); }
    double value(double t) const { return pl_.value(t); }
    double max_value() const { return pl_.max_value(); }
    std::span<const Breakpoint> breakpoints() const { return pl_.breakpoints(); }
    const PiecewiseLinear& piecewise() const { return pl_; }

    double powered_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        return pl_.powered_integral(beta, s, e, q);
    }
    double moment_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        return pl_.moment_integral(beta, s, e, q);
    }

    ConcaveProfile scaled(double f) const { return ConcaveProfile(pl_.scaled(f)); }
    ConcaveProfile translated(double s) const { return ConcaveProfile(pl_.translated(s)); }
    ConcaveProfile reflected() const { return ConcaveProfile(pl_.reflected()); }

private:
    void validate() const {
        const auto pts = pl_.breakpoints();
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (!(pts[i].h > 0.0))
                throw ValidationError("concave profile vanishes at interior breakpoint " + std::to_string(i));
            const double left = (pts[i].h - pts[i - 1].h) / (pts[i].t - pts[i - 1].t);
            const double right = (pts[i + 1].h - pts[i].h) / (pts[i + 1].t - pts[i].t);
            const double tol = kConcaveSlopeTol * std::max({1.0, std::fabs(left), std::fabs(right)});
            if (left < right - tol) {
                std::ostringstream os;
                os << "profile is not concave at breakpoint " << i << " (t = " << pts[i].t
                   << "): left slope " << left << " < right slope " << right;
                throw ValidationError(os.str());
            }
        }
        if (!(pl_.powered_integral(1.0, lo(), hi()) > 0.0))
            throw ValidationError("profile has zero integral");
    }

    PiecewiseLinear pl_;
};

/// Closed-form profile families.
///   constant:          c                    on [gamma, delta]
///   decreasing_power:  c (delta - t)^q      on [gamma, delta]
///   increasing_power:  c (t + gamma)^q      on [-gamma, delta]
///   ball_section:      c (R^2 - (t-t0)^2)^{(n-1)/2} on [t0 - R, t0 + R], c defaults to kappa_{n-1}
class AnalyticProfile {
public:
    enum class Kind { constant, increasing_power, decreasing_power, ball_section };

    static AnalyticProfile constant(double c, double lo, double hi) {
        AnalyticProfile p(Kind::constant);
        p.c_ = c;
        p.gamma_ = lo;
        p.delta_ = hi;
        p.validate();
        return p;
    }

    static AnalyticProfile decreasing_power(double c, double gamma, double delta, double q) {
        AnalyticProfile p(Kind::decreasing_power);
        p.c_ = c;
        p.gamma_ = gamma;
        p.delta_ = delta;
        p.q_ = q;
        p.validate();
        return p;
    }

    static AnalyticProfile increasing_power(double c, double gamma, double delta, double q) {
        AnalyticProfile p(Kind::increasing_power);
        p.c_ = c;
        p.gamma_ = gamma;
        p.delta_ = delta;
        p.q_ = q;
        p.validate();
        return p;
    }

    static AnalyticProfile ball_section(double radius, int dim, double center = 0.0, double scale = -1.0) {
        AnalyticProfile p(Kind::ball_section);
        p.radius_ = radius;
        p.dim_ = dim;
        p.center_ = center;
        p.c_ = scale > 0.0 ? scale : (dim >= 2 ? unit_ball_volume(dim - 1) : 1.0);
        p.validate();
        return p;
    }

    Kind kind() const { return kind_; }
    double scale() const { return c_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }
    double exponent() const { return q_; }
    double radius() const { return radius_; }
    int dim() const { return dim_; }
    double center() const { return center_; }

    double lo() const {
        switch (kind_) {
            case Kind::increasing_power: return -gamma_;
            case Kind::ball_section: return center_ - radius_;
            default: return gamma_;
        }
    }
    double hi() const { return kind_ == Kind::ball_section ? center_ + radius_ : delta_; }

    double value(double t) const {
        if (!(t >= lo() && t <= hi())) {
            std::ostringstream os;
            os << "t = " << t << " outside profile domain [" << lo() << ", " << hi() << "]";
            throw DomainError(os.str());
        }
        switch (kind_) {
            case Kind::constant: return c_;
            case Kind::decreasing_power: return c_ * std::pow(delta_ - t, q_);
            case Kind::increasing_power: return c_ * std::pow(t + gamma_, q_);
            case Kind::ball_section: {
                const double x = t - center_;
                return c_ * std::pow(std::max(0.0, radius_ * radius_ - x * x), 0.5 * (dim_ - 1));
            }
        }
        return 0.0;
    }

    double max_value() const {
        switch (kind_) {
            case Kind::constant: return c_;
            case Kind::decreasing_power: return value(lo());
            case Kind::increasing_power: return value(hi());
            case Kind::ball_section: return value(center_);
        }
        return 0.0;
    }

    double powered_integral(double beta, double s, double e, const QuadratureSpec& spec = {}) const {
        detail::check_exponent(beta);
        detail::check_subinterval(s, e, lo(), hi());
        const double cb = std::pow(c_, beta);
        const double k = q_ * beta;
        switch (kind_) {
            case Kind::constant: return cb * (e - s);
            case Kind::decreasing_power:
                return cb * (std::pow(delta_ - s, k + 1.0) - std::pow(delta_ - e, k + 1.0)) / (k + 1.0);
            case Kind::increasing_power:
                return cb * (std::pow(e + gamma_, k + 1.0) - std::pow(s + gamma_, k + 1.0)) / (k + 1.0);
            case Kind::ball_section:
                return ball_integral(beta, s, e, spec, false);
        }
        return 0.0;
    }

    double moment_integral(double beta, double s, double e, const QuadratureSpec& spec = {}) const {
        detail::check_exponent(beta);
        detail::check_subinterval(s, e, lo(), hi());
        const double cb = std::pow(c_, beta);
        const double k = q_ * beta;
        switch (kind_) {
            case Kind::constant: return cb * 0.5 * (e * e - s * s);
            case Kind::decreasing_power: {
                const double us = delta_ - s;
                const double ue = delta_ - e;
                const double m0 = (std::pow(us, k + 1.0) - std::pow(ue, k + 1.0)) / (k + 1.0);
                const double m1 = (std::pow(us, k + 2.0) - std::pow(ue, k + 2.0)) / (k + 2.0);
                return cb * (delta_ * m0 - m1);
            }
            case Kind::increasing_power: {
                const double vs = s + gamma_;
                const double ve = e + gamma_;
                const double m0 = (std::pow(ve, k + 1.0) - std::pow(vs, k + 1.0)) / (k + 1.0);
                const double m1 = (std::pow(ve, k + 2.0) - std::pow(vs, k + 2.0)) / (k + 2.0);
                return cb * (m1 - gamma_ * m0);
            }
            case Kind::ball_section:
                return ball_integral(beta, s, e, spec, true);
        }
        return 0.0;
    }

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::constant: return "constant";
            case Kind::increasing_power: return "increasing_power";
            case Kind::decreasing_power: return "decreasing_power";
            case Kind::ball_section: return "ball_section";
        }
        return "?";
    }

private:
    explicit AnalyticProfile(Kind k) : kind_(k) {}

    void validate() const {
        const auto bad = [](const std::string& m) { throw ValidationError("analytic profile: " + m); };
        if (kind_ == Kind::ball_section) {
            if (!(radius_ > 0.0)) bad("ball-section radius must be > 0");
            if (dim_ < 2) bad("ball-section dimension must be >= 2");
            if (!(c_ > 0.0)) bad("scale must be > 0");
            return;
        }
        if (!(c_ > 0.0) || !std::isfinite(c_)) bad("scale c must be > 0");
        if (!(lo() < hi())) bad("empty domain");
        if (kind_ != Kind::constant && !(q_ > 0.0)) bad("exponent q must be > 0");
    }

    // Substituting t = t0 - R cos(theta) turns (R^2 - (t-t0)^2)^{k} dt into the
    // smooth (R sin theta)^{2k} R sin theta dtheta.
    double ball_integral(double beta, double s, double e, const QuadratureSpec& spec, bool first_moment) const {
        const auto angle = [&](double t) { return std::acos(std::clamp((center_ - t) / radius_, -1.0, 1.0)); };
        const double cb = std::pow(c_, beta);
        const double k = 0.5 * (dim_ - 1) * beta;
        const auto f = [&](double th) {
            const double sn = std::sin(th);
            const double w = cb * std::pow(radius_ * sn, 2.0 * k) * radius_ * sn;
            return first_moment ? w * (center_ - radius_ * std::cos(th)) : w;
        };
        return adaptive_simpson(f, angle(s), angle(e), spec);
    }

    Kind kind_;
    double c_ = 1.0;
    double gamma_ = 0.0;
    double delta_ = 1.0;
    double q_ = 1.0;
    double radius_ = 1.0;
    int dim_ = 2;
    double center_ = 0.0;
};

/// View of base^exponent. Powered integrals delegate with exponent folded into beta,
/// so PowerOf(f, 1/(n-1)) raised to beta = n-1 integrates f itself exactly.
template <OneDimProfile Base>
class PowerOf {
public:
    PowerOf(Base base, double exponent) : base_(std::move(base)), exponent_(exponent) {
        if (!(exponent > 0.0)) throw ParameterError("PowerOf exponent must be > 0");
    }

    double lo() const { return base_.lo(); }
    double hi() const { return base_.hi(); }
    double value(double t) const { return std::pow(base_.value(t), exponent_); }
    double powered_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        detail::check_exponent(beta);
        return base_.powered_integral(beta * exponent_, s, e, q);
    }
    double moment_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        detail::check_exponent(beta);
        return base_.moment_integral(beta * exponent_, s, e, q);
    }
    const Base& base() const { return base_; }
    double exponent() const { return exponent_; }

private:
    Base base_;
    double exponent_;
};

/// A profile as read from disk: raw samples or a closed-form family.
using Profile = std::variant<PiecewiseLinear, AnalyticProfile>;

/// Profile alternatives forward to the held type.
class AnyProfile {
public:
    AnyProfile(Profile p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

    double lo() const { return std::visit([](auto& x) { return x.lo(); }, p_); }
    double hi() const { return std::visit([](auto& x) { return x.hi(); }, p_); }
    double value(double t) const { return std::visit([t](auto& x) { return x.value(t); }, p_); }
    double max_value() const { return std::visit([](auto& x) { return x.max_value(); }, p_); }
    double powered_integral(double b, double s, double e, const QuadratureSpec& q = {}) const {
        return std::visit([&](auto& x) { return x.powered_integral(b, s, e, q); }, p_);
    }
    double moment_integral(double b, double s, double e, const QuadratureSpec& q = {}) const {
        return std::visit([&](auto& x) { return x.moment_integral(b, s, e, q); }, p_);
    }
    const Profile& get() const { return p_; }

private:
    Profile p_;
};

}  // namespace grunlab
