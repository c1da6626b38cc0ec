#pragma once

// Sectional volume profiles t -> vol_{n-1}(K ∩ (t u + u^⊥)) and the quantities
// built from them: powered centroids, halfspace fractions, and the geometric
// theorem verdicts.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grunlab/body.hpp"
#include "grunlab/bounds.hpp"
#include "grunlab/concavity.hpp"
#include "grunlab/integrals.hpp"
#include "grunlab/montecarlo.hpp"
#include "grunlab/report.hpp"

namespace grunlab {

inline constexpr double kSectionQuadTol = 1e-12;

namespace detail {

inline void check_direction(const ConvexBody& K, const Vec& u) {
    if (u.size() != dimension(K)) throw ParameterError("direction dimension does not match the body");
    if (!(std::fabs(u.norm() - 1.0) <= 1e-9)) throw ParameterError("direction u must be a unit vector");
}

/// Maximiser of a unimodal function on [lo, hi] by golden-section search.
template <class F>
double golden_max(const F& f, double lo, double hi, int iters = 120) {
    constexpr double phi = 0.6180339887498949;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && hi - lo > 1e-15 * (1.0 + std::fabs(lo) + std::fabs(hi)); ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

inline double axis_alignment(const Revolution& r, const Vec& u) { return r.axis.dot(u); }

inline bool revolution_on_axis(const Revolution& r, const Vec& u) {
    return std::fabs(std::fabs(axis_alignment(r, u)) - 1.0) <= 1e-12;
}

/// For a simplex with n vertices on a common level of <., u> and one apex,
/// returns (apex height, facet height, facet (n-1)-volume).
inline std::optional<std::array<double, 3>> simplex_facet_axis(const Simplex& s, const Vec& u) {
    const auto n = static_cast<int>(s.vertices.front().size());
    std::vector<double> h;
    for (const auto& v : s.vertices) h.push_back(v.dot(u));
    double scale = 0.0;
    for (const auto& v : s.vertices) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    const double eps = 1e-12 * std::max(1.0, scale);
    for (int apex = 0; apex <= n; ++apex) {
        const int ref = apex == 0 ? 1 : 0;
        bool level = true;
        for (int i = 0; i <= n && level; ++i)
            if (i != apex && std::fabs(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(ref)]) > eps)
                level = false;
        if (!level) continue;
        // (n-1)-volume of the facet from its Gram determinant.
        Eigen::MatrixXd E(n, n - 1);
        int col = 0;
        for (int i = 0; i <= n; ++i)
            if (i != apex && i != ref)
                E.col(col++) = s.vertices[static_cast<std::size_t>(i)] - s.vertices[static_cast<std::size_t>(ref)];
        const double gram = (E.transpose() * E).determinant();
        const double facet = std::sqrt(std::max(0.0, gram)) / factorial(n - 1);
        return std::array<double, 3>{h[static_cast<std::size_t>(apex)], h[static_cast<std::size_t>(ref)], facet};
    }
    return std::nullopt;
}

}  // namespace detail

/// [a, b] = range of <x, u> over K.
inline std::pair<double, double> support_interval(const ConvexBody& K, const Vec& u) {
    detail::check_direction(K, u);
    if (const auto* b = std::get_if<Ball>(&K)) {
        const double c = b->center.dot(u);
        return {c - b->radius, c + b->radius};
    }
    if (const auto* b = std::get_if<Box>(&K)) {
        double lo = 0.0, hi = 0.0;
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            lo += std::min(b->lo[i] * u[i], b->hi[i] * u[i]);
            hi += std::max(b->lo[i] * u[i], b->hi[i] * u[i]);
        }
        return {lo, hi};
    }
    if (const auto* r = std::get_if<Revolution>(&K)) {
        const double base = r->origin.dot(u);
        const double along = detail::axis_alignment(*r, u);
        const double across = std::sqrt(std::max(0.0, 1.0 - along * along));
        const double s0 = r->profile.lo(), s1 = r->profile.hi();
        const auto reach = [&](double sign) {
            const auto f = [&](double s) { return sign * along * s + across * r->radius_at(s); };
            const double best = across == 0.0 ? (sign * along > 0 ? s1 : s0) : detail::golden_max(f, s0, s1);
            return std::max({f(best), f(s0), f(s1)});
        };
        return {base - reach(-1.0), base + reach(1.0)};
    }
    const auto verts = vertex_list(K);
    double lo = verts.front().dot(u), hi = lo;
    for (const auto& v : verts) {
        lo = std::min(lo, v.dot(u));
        hi = std::max(hi, v.dot(u));
    }
    return {lo, hi};
}

/// True when section_volume can be evaluated in closed form / exact geometry.
inline bool has_exact_sections(const ConvexBody& K, const Vec& u) {
    const int n = dimension(K);
    if (std::holds_alternative<Ball>(K) || std::holds_alternative<Polygon>(K) || std::holds_alternative<Polytope3D>(K))
        return true;
    if (const auto* r = std::get_if<Revolution>(&K)) return detail::revolution_on_axis(*r, u);
    if (n <= 3) return true;
    if (const auto* s = std::get_if<Simplex>(&K)) return detail::simplex_facet_axis(*s, u).has_value();
    if (std::holds_alternative<Box>(K)) return (u.cwiseAbs().array() > 0.0).count() == 1;
    return false;
}

namespace detail {

inline double polygon_chord(const Polygon& p, const Vec2& u, double t) {
    const Vec2 perp(-u.y(), u.x());
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    const std::size_t n = p.vertices.size();
    double scale = std::fabs(t);
    for (const auto& v : p.vertices) scale = std::max(scale, std::fabs(v.dot(u)));
    const double eps = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = p.vertices[i];
        const Vec2& b = p.vertices[(i + 1) % n];
        const double da = a.dot(u) - t, db = b.dot(u) - t;
        const auto take = [&](const Vec2& x) {
            lo = std::min(lo, x.dot(perp));
            hi = std::max(hi, x.dot(perp));
        };
        if (std::fabs(da) <= eps) take(a);
        if (std::fabs(db) <= eps) take(b);
        if ((da < -eps && db > eps) || (da > eps && db < -eps)) take(a + (b - a) * (da / (da - db)));
    }
    return hi > lo ? hi - lo : 0.0;
}

inline double polytope_section_area(const Polytope3D& P, const Vec3& u, double t) {
    const auto [e1, e2] = geom::orthonormal_complement(u);
    // Vertices within a few ulps of the plane count as on it; otherwise a cut
    // through a lone extreme vertex leaves a sliver of rounding-sized area.
    double scale = std::fabs(t);
    for (const auto& v : P.vertices) scale = std::max(scale, std::fabs(v.dot(u)));
    const double eps = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    std::vector<Vec2> pts;
    const auto take = [&](const Vec3& x) { pts.emplace_back(x.dot(e1), x.dot(e2)); };
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        if (std::fabs(P.vertices[i].dot(u) - t) <= eps) take(P.vertices[i]);
    for (const auto& [i, j] : P.edges) {
        const Vec3& a = P.vertices[static_cast<std::size_t>(i)];
        const Vec3& b = P.vertices[static_cast<std::size_t>(j)];
        const double da = a.dot(u) - t, db = b.dot(u) - t;
        if ((da < -eps && db > eps) || (da > eps && db < -eps)) take(a + (b - a) * (da / (da - db)));
    }
    if (pts.size() < 3) return 0.0;
    return std::fabs(geom::shoelace(geom::convex_hull_2d(std::move(pts))));
}

}  // namespace detail

/// vol_{n-1}(K ∩ {<x, u> = t}) for bodies with exact sections; throws
/// ParameterError when only a Monte Carlo profile is available.
inline double section_volume(const ConvexBody& K, const Vec& u, double t) {
    const auto [a, b] = support_interval(K, u);
    if (!(t >= a && t <= b)) {
        std::ostringstream os;
        os << "section level t = " << t << " outside support [" << a << ", " << b << "]";
        throw DomainError(os.str());
    }
    if (!has_exact_sections(K, u))
        throw ParameterError("no exact sections for this body/direction; use a Monte Carlo section profile");
    const int n = dimension(K);
    if (const auto* ball = std::get_if<Ball>(&K)) {
        const double x = t - ball->center.dot(u);
        return unit_ball_volume(n - 1) * std::pow(std::max(0.0, ball->radius * ball->radius - x * x), 0.5 * (n - 1));
    }
    if (const auto* r = std::get_if<Revolution>(&K)) {
        const double base = r->origin.dot(u);
        const double s = detail::axis_alignment(*r, u) > 0 ? t - base : base - t;
        const double rho = r->radius_at(std::clamp(s, r->profile.lo(), r->profile.hi()));
        return unit_ball_volume(n - 1) * std::pow(rho, n - 1);
    }
    if (n > 3) {
        if (const auto* s = std::get_if<Simplex>(&K)) {
            const auto [apex, level, facet] = *detail::simplex_facet_axis(*s, u);
            return facet * std::pow((apex - t) / (apex - level), n - 1);
        }
        const auto& box = std::get<Box>(K);
        double prod = 1.0;
        for (Eigen::Index i = 0; i < u.size(); ++i)
            if (u[i] == 0.0) prod *= box.hi[i] - box.lo[i];
        return prod;
    }
    const ConvexBody P = as_low_dim_polytope(K);
    if (const auto* poly = std::get_if<Polygon>(&P)) return detail::polygon_chord(*poly, Vec2(u[0], u[1]), t);
    return detail::polytope_section_area(std::get<Polytope3D>(P), Vec3(u[0], u[1], u[2]), t);
}

/// Section profile of K along u: exact (closed form / exact geometry, integrated
/// by double-exponential quadrature between knots) or binned Monte Carlo.
class SectionProfile {
public:
    enum class Kind { exact, mc };

    struct Bin {
        double t;
        double f;
        double sigma;
    };

    static SectionProfile exact(const ConvexBody& K, const Vec& u) {
        SectionProfile sp;
        sp.kind_ = Kind::exact;
        sp.u_ = u;
        sp.dim_ = dimension(K);
        std::tie(sp.a_, sp.b_) = support_interval(K, u);
        if (!has_exact_sections(K, u))
            throw ParameterError("no exact sections for this body/direction; pass Monte Carlo settings");
        const ConvexBody body = as_low_dim_polytope(K);
        // The polytope view can disagree with K's support in the last ulp.
        const auto [lo, hi] = support_interval(body, u);
        sp.eval_ = [body, u, lo, hi](double t) { return section_volume(body, u, std::clamp(t, lo, hi)); };
        std::vector<double> knots{sp.a_, sp.b_};
        for (const auto& v : vertex_list(body)) knots.push_back(v.dot(u));
        if (const auto* r = std::get_if<Revolution>(&body)) {
            const double base = r->origin.dot(u);
            const bool fwd = detail::axis_alignment(*r, u) > 0;
            if (const auto* pl = std::get_if<PiecewiseLinear>(&r->profile.get()))
                for (const auto& bp : pl->breakpoints()) knots.push_back(fwd ? base + bp.t : base - bp.t);
        }
        if (const auto* ball = std::get_if<Ball>(&body)) knots.push_back(ball->center.dot(u));
        std::sort(knots.begin(), knots.end());
        for (double k : knots)
            if (k >= sp.a_ && k <= sp.b_ && (sp.knots_.empty() || k > sp.knots_.back())) sp.knots_.push_back(k);
        sp.knots_.back() = sp.b_;
        return sp;
    }

    static SectionProfile monte_carlo(const ConvexBody& K, const Vec& u, const McSpec& mc) {
        SectionProfile sp;
        sp.kind_ = Kind::mc;
        sp.u_ = u;
        sp.dim_ = dimension(K);
        std::tie(sp.a_, sp.b_) = support_interval(K, u);
        const auto tally = mc_tally(K, u, sp.a_, sp.b_, sp.a_, mc);
        const double N = static_cast<double>(tally.drawn);
        const double w = (sp.b_ - sp.a_) / mc.bins;
        for (int j = 0; j < mc.bins; ++j) {
            const double p = static_cast<double>(tally.bins[static_cast<std::size_t>(j)]) / N;
            // An empty bin still carries the spread of a single count.
            const double ps = std::max(p, 1.0 / N);
            sp.bins_.push_back({sp.a_ + (j + 0.5) * w, tally.box_volume * p / w,
                                tally.box_volume * std::sqrt(ps * (1.0 - ps) / N) / w});
        }
        std::vector<Breakpoint> pts;
        const auto edge = [](const Bin& inner, const Bin& next) { return std::max(0.0, inner.f + 0.5 * (inner.f - next.f)); };
        pts.push_back({sp.a_, edge(sp.bins_[0], sp.bins_[1])});
        for (const auto& bin : sp.bins_) pts.push_back({bin.t, bin.f});
        pts.push_back({sp.b_, edge(sp.bins_[sp.bins_.size() - 1], sp.bins_[sp.bins_.size() - 2])});
        sp.binned_ = PiecewiseLinear(std::move(pts));
        sp.record_ = McRecord{mc.seed, mc.samples, mc.bins, 0.0};
        return sp;
    }

    /// Exact when available, Monte Carlo otherwise (requires settings).
    static SectionProfile of(const ConvexBody& K, const Vec& u, const std::optional<McSpec>& mc = std::nullopt) {
        if (has_exact_sections(K, u)) return exact(K, u);
        if (!mc) throw ParameterError("body/direction needs a Monte Carlo section profile; supply samples, bins and seed");
        return monte_carlo(K, u, *mc);
    }

    Kind kind() const { return kind_; }
    const Vec& direction() const { return u_; }
    int body_dimension() const { return dim_; }
    double lo() const { return a_; }
    double hi() const { return b_; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<Bin>& bins() const { return bins_; }
    const std::optional<McRecord>& mc_record() const { return record_; }

    double value(double t) const {
        if (kind_ == Kind::mc) return binned_.value(t);
        if (!(t >= a_ && t <= b_)) throw DomainError("section level outside support");
        return eval_(t);
    }

    double powered_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        return integrate(beta, s, e, q, false);
    }
    double moment_integral(double beta, double s, double e, const QuadratureSpec& q = {}) const {
        return integrate(beta, s, e, q, true);
    }

    double max_value() const {
        if (kind_ == Kind::mc) return binned_.max_value();
        double best = 0.0;
        for (double k : knots_) best = std::max(best, eval_(k));
        // f^{1/(n-1)} is concave for convex K, hence f is unimodal.
        best = std::max(best, eval_(detail::golden_max(eval_, a_, b_)));
        return best;
    }

    /// Abscissas used for shape checks: knots plus a uniform grid.
    std::vector<double> check_grid(int points = 257) const {
        std::vector<double> g;
        if (kind_ == Kind::mc) {
            for (const auto& bp : binned_.breakpoints()) g.push_back(bp.t);
            return g;
        }
        for (int i = 0; i < points; ++i) g.push_back(std::min(b_, a_ + (b_ - a_) * i / (points - 1)));
        g.insert(g.end(), knots_.begin(), knots_.end());
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        return g;
    }

    Provenance provenance() const {
        if (kind_ == Kind::mc) return Provenance::monte_carlo(*record_);
        return Provenance::quadrature(kSectionQuadTol);
    }

private:
    double integrate(double beta, double s, double e, const QuadratureSpec& q, bool moment) const {
        if (kind_ == Kind::mc)
            return moment ? binned_.moment_integral(beta, s, e, q) : binned_.powered_integral(beta, s, e, q);
        detail::check_exponent(beta);
        detail::check_subinterval(s, e, a_, b_);
        double acc = 0.0;
        for (std::size_t i = 1; i < knots_.size(); ++i) {
            const double lo = std::max(knots_[i - 1], s), hi = std::min(knots_[i], e);
            if (hi <= lo) continue;
            acc += tanh_sinh(
                [&](double t) {
                    const double w = std::pow(std::max(0.0, eval_(std::clamp(t, a_, b_))), beta);
                    return moment ? t * w : w;
                },
                lo, hi);
        }
        return acc;
    }

    Kind kind_ = Kind::exact;
    Vec u_;
    int dim_ = 0;
    double a_ = 0.0, b_ = 0.0;
    std::function<double(double)> eval_;
    std::vector<double> knots_;
    std::vector<Bin> bins_;
    PiecewiseLinear binned_;
    std::optional<McRecord> record_;
};

/// lambda_r = int t f^r / int f^r along u; r = 0 is the midpoint of the support.
inline double r_centroid_point(const ConvexBody& K, const Vec& u, double r, const QuadratureSpec& spec = {},
                               const std::optional<McSpec>& mc = std::nullopt) {
    return alpha_centroid(SectionProfile::of(K, u, mc), r, spec);
}

/// vol(K ∩ {<x,u> <= c}) / vol(K) by integrating the exact section profile.
inline double halfspace_fraction(const ConvexBody& K, const Vec& u, double c, const QuadratureSpec& spec = {}) {
    const auto f = SectionProfile::exact(K, u);
    if (!(c >= f.lo() && c <= f.hi())) throw DomainError("cut outside the support interval");
    return f.powered_integral(1.0, f.lo(), c, spec) / f.powered_integral(1.0, f.lo(), f.hi(), spec);
}

struct McEstimate {
    double value;
    double sigma;
    McRecord record;
};

/// Direct point-counting estimate of the same fraction.
inline McEstimate halfspace_fraction_mc(const ConvexBody& K, const Vec& u, double c, const McSpec& mc) {
    const auto [a, b] = support_interval(K, u);
    if (!(c >= a && c <= b)) throw DomainError("cut outside the support interval");
    const auto t = mc_tally(K, u, a, b, c, mc);
    if (t.accepted == 0) throw DegenerateError("no Monte Carlo sample landed in the body");
    const double p = static_cast<double>(t.below_cut) / static_cast<double>(t.accepted);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(t.accepted));
    return {p, sigma, McRecord{mc.seed, mc.samples, mc.bins, sigma}};
}

/// f^p concavity of a section profile on its check grid. For Monte Carlo
/// profiles each bin triple may miss the chord by up to the 3-sigma spread of
/// its three powered values.
inline ConcavityResult section_p_concavity(const SectionProfile& f, double p, double tolerance = 1e-9) {
    if (f.kind() == SectionProfile::Kind::exact)
        return p_concavity_check_on([&](double t) { return f.value(t); }, f.check_grid(), p, tolerance);
    if (!(p > 0.0)) throw ParameterError("p must be > 0");
    const auto& bins = f.bins();
    double top = 0.0;
    for (const auto& bin : bins) top = std::max(top, std::pow(bin.f, p));
    ConcavityResult res;
    if (!(top > 0.0)) return res;
    const auto spread = [p](const SectionProfile::Bin& b) { return std::pow(b.f + 3.0 * b.sigma, p) - std::pow(b.f, p); };
    for (std::size_t i = 1; i + 1 < bins.size(); ++i) {
        const double chord = 0.5 * (std::pow(bins[i - 1].f, p) + std::pow(bins[i + 1].f, p));
        const double excess = chord - std::pow(bins[i].f, p) - (spread(bins[i - 1]) + spread(bins[i]) + spread(bins[i + 1]));
        const double rel = excess / top;
        if (rel > res.max_violation) {
            res.max_violation = rel;
            res.witness = ConcavityWitness{bins[i - 1].t, bins[i].t, bins[i + 1].t};
        }
    }
    res.concave = res.max_violation <= tolerance;
    if (res.concave) res.witness.reset();
    return res;
}

namespace detail {

inline nlohmann::json witness_json(const ConcavityResult& c) {
    if (!c.witness) return nullptr;
    return {c.witness->left, c.witness->mid, c.witness->right};
}

inline std::string witness_text(const ConcavityResult& c) {
    std::ostringstream os;
    if (c.witness) os << " (violating triple t = " << c.witness->left << ", " << c.witness->mid << ", " << c.witness->right << ")";
    return os.str();
}

}  // namespace detail

/// Both halfspace fractions at the cut through lambda_r, against the bound for
/// p-concave section profiles. The reported ratio is the smaller side.
inline TheoremReport verify_grunbaum_r(const ConvexBody& K, const Vec& u, double p, double r,
                                      const QuadratureSpec& spec = {}, const std::optional<McSpec>& mc = std::nullopt) {
    const auto f = SectionProfile::of(K, u, mc);
    const auto conc = section_p_concavity(f, p);
    if (!conc.concave)
        throw PreconditionError("section profile is not " + std::to_string(p) + "-concave" + detail::witness_text(conc));
    const double lam = alpha_centroid(f, r, spec);
    const double total = f.powered_integral(1.0, f.lo(), f.hi(), spec);
    const double lower = f.powered_integral(1.0, f.lo(), lam, spec) / total;
    const double upper = f.powered_integral(1.0, lam, f.hi(), spec) / total;
    auto prov = f.provenance();
    if (prov.mc) {
        // Binomial spread of the smaller side at the cut.
        const double m = std::min(lower, upper);
        prov.mc->sigma = std::sqrt(m * (1.0 - m) / static_cast<double>(prov.mc->samples));
    }
    return make_report(r == 0.0 ? "midpoint" : "grunbaum_r", std::min(lower, upper), grunbaum_r_bound(p, r), prov,
                       {{"variant", variant_name(K)},
                        {"dimension", dimension(K)},
                        {"lambda_r", lam},
                        {"lower_fraction", lower},
                        {"upper_fraction", upper},
                        {"a", f.lo()},
                        {"b", f.hi()},
                        {"p", p},
                        {"r", r}});
}

/// min(g - a, b - g) / (b - a) with g the centroid coordinate along u.
inline TheoremReport verify_minkowski_radon(const ConvexBody& K, const Vec& u, const QuadratureSpec& spec = {}) {
    const auto [a, b] = support_interval(K, u);
    const auto mp = mass_properties(K, spec);
    const double g = mp.centroid.dot(u);
    const double ratio = std::min(g - a, b - g) / (b - a);
    const int n = dimension(K);
    return make_report("minkowski_radon", ratio, classic_bounds(n).minkowski_radon, Provenance::exact(),
                       {{"variant", variant_name(K)}, {"dimension", n}, {"centroid", g}, {"a", a}, {"b", b}});
}

/// f(g) / max f for the section profile along u, with g the centroid coordinate.
inline TheoremReport verify_makai_fradelizi(const ConvexBody& K, const Vec& u, const QuadratureSpec& spec = {},
                                           const std::optional<McSpec>& mc = std::nullopt) {
    const auto f = SectionProfile::of(K, u, mc);
    const auto mp = mass_properties(K, spec);
    const double g = mp.centroid.dot(u);
    const double top = f.max_value();
    const double ratio = f.value(g) / top;
    const int n = dimension(K);
    Provenance prov = f.kind() == SectionProfile::Kind::exact ? Provenance::exact() : f.provenance();
    if (prov.mc) {
        double sig = 0.0;
        for (const auto& bin : f.bins()) sig = std::max(sig, bin.sigma);
        prov.mc->sigma = 2.0 * sig / top;
    }
    return make_report("makai_fradelizi", ratio, classic_bounds(n).makai_fradelizi, prov,
                       {{"variant", variant_name(K)}, {"dimension", n}, {"centroid", g}, {"section_at_centroid", f.value(g)},
                        {"max_section", top}});
}

struct RevolveResult {
    Revolution body;
    /// Section volume divided by the input profile (1 with radius (f/kappa)^{1/(n-1)}).
    double section_scale = 1.0;
    /// Same ratio under radius (1/kappa) f^{1/(n-1)}: kappa^{2-n}.
    double alternative_radius_scale = 1.0;
};

/// Body of revolution in R^n whose sections along e_1 are exactly f.
inline RevolveResult revolve(const AnyProfile& f, int n, double tolerance = 1e-9) {
    if (n < 2) throw ParameterError("revolve: n must be >= 2");
    const auto conc = p_concavity_check(f, 1.0 / (n - 1), tolerance);
    if (!conc.concave)
        throw PreconditionError("profile is not 1/(n-1)-concave, revolved body would not be convex" +
                                detail::witness_text(conc));
    return {make_revolution(f, n), 1.0, std::pow(unit_ball_volume(n - 1), 2.0 - n)};
}

struct RoundTrip {
    double functional_ratio;
    double geometric_ratio;
    double discrepancy;
    double alpha;
    double beta;
    double r;
    int n;
};

/// The same tail mass computed twice: functionally on h = f^{1/(n-1)} with
/// beta = n-1, alpha = r beta, and geometrically as the upper halfspace
/// fraction of the revolved body through its r-powered centroid.
inline RoundTrip revolve_roundtrip(const AnyProfile& f, int n, double r = 1.0, const QuadratureSpec& spec = {}) {
    const auto rev = revolve(f, n);
    const double beta = n - 1.0;
    const double alpha = r * beta;
    const PowerOf<AnyProfile> h(f, 1.0 / beta);
    const double functional = tail_mass_ratio(h, alpha, beta, spec);
    const ConvexBody K = rev.body;
    const Vec u = rev.body.axis;
    const double lam = r_centroid_point(K, u, r, spec);
    const double geometric = 1.0 - halfspace_fraction(K, u, lam, spec);
    return {functional, geometric, std::fabs(functional - geometric), alpha, beta, r, n};
}

}  // namespace grunlab
