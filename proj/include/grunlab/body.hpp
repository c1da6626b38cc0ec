#pragma once

// Convex bodies: simplices, balls, boxes, planar polygons, 3-D polytopes and
// bodies of revolution about an axis.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "grunlab/errors.hpp"
#include "grunlab/profile.hpp"

namespace grunlab {

using Vec = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

namespace geom {

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Andrew's monotone chain; returns the hull counter-clockwise without repeats.
inline std::vector<Vec2> convex_hull_2d(std::vector<Vec2> pts, double eps = 0.0) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return a == b; }), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= eps) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross2(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= eps) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

/// Signed shoelace area (positive for counter-clockwise order).
inline double shoelace(const std::vector<Vec2>& poly) {
    double acc = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) acc += cross2(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * acc;
}

/// Two unit vectors completing u (3-D, unit) to an orthonormal frame.
inline std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& u) {
    const Vec3 seed = std::fabs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    Vec3 e1 = (seed - seed.dot(u) * u).normalized();
    Vec3 e2 = u.cross(e1);
    return {e1, e2};
}

struct Plane {
    Vec3 normal;  // outward unit normal
    double offset;  // normal . x <= offset inside
};

struct Hull3D {
    std::vector<std::vector<int>> faces;  // counter-clockwise seen from outside
    std::vector<Plane> planes;
};

/// Facets of conv(pts) by exhaustive plane enumeration over vertex triples.
/// Cubic-times-linear in the vertex count; meant for small fixtures.
inline Hull3D convex_hull_3d(const std::vector<Vec3>& pts) {
    const int n = static_cast<int>(pts.size());
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double eps = 1e-9 * std::max(scale, 1.0);
    Hull3D hull;
    const auto known = [&](const Vec3& nrm, double off) {
        for (const auto& pl : hull.planes)
            if ((pl.normal - nrm).norm() < 1e-7 && std::fabs(pl.offset - off) < eps) return true;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec3 nrm = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
                const double len = nrm.norm();
                if (len < eps * std::max(scale, 1.0)) continue;
                nrm /= len;
                const double off = nrm.dot(pts[i]);
                bool below = true, above = true;
                for (int m = 0; m < n && (below || above); ++m) {
                    const double d = nrm.dot(pts[m]) - off;
                    if (d > eps) below = false;
                    if (d < -eps) above = false;
                }
                if (!below && !above) continue;
                if (!below) {
                    nrm = -nrm;
                }
                const double o = nrm.dot(pts[i]);
                if (known(nrm, o)) continue;
                std::vector<int> face;
                Vec3 centre = Vec3::Zero();
                for (int m = 0; m < n; ++m)
                    if (std::fabs(nrm.dot(pts[m]) - o) <= eps) {
                        face.push_back(m);
                        centre += pts[m];
                    }
                centre /= static_cast<double>(face.size());
                const auto [e1, e2] = orthonormal_complement(nrm);
                std::vector<std::pair<double, int>> ang;
                for (int m : face) {
                    const Vec3 d = pts[m] - centre;
                    ang.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), m);
                }
                std::sort(ang.begin(), ang.end());
                std::vector<int> ordered;
                for (auto& [_, m] : ang) ordered.push_back(m);
                hull.faces.push_back(std::move(ordered));
                hull.planes.push_back({nrm, o});
            }
    return hull;
}

}  // namespace geom

struct Simplex {
    std::vector<Vec> vertices;  // n + 1 points in R^n
    Eigen::MatrixXd inverse_edges;  // inverse of [v1 - v0, ..., vn - v0]
};

struct Ball {
    Vec center;
    double radius;
};

struct Box {
    Vec lo;
    Vec hi;
};

struct Polygon {
    std::vector<Vec2> vertices;  // counter-clockwise, strictly convex
};

struct Polytope3D {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;  // outward counter-clockwise
    std::vector<geom::Plane> planes;
    std::vector<std::pair<int, int>> edges;
};

/// Rotation body whose section orthogonal to `axis` at axial coordinate s
/// (measured from `origin`) is an (n-1)-ball of volume profile(s).
struct Revolution {
    AnyProfile profile;
    int dim;
    Vec origin;
    Vec axis;

    double radius_at(double s) const {
        return std::pow(profile.value(s) / unit_ball_volume(dim - 1), 1.0 / (dim - 1));
    }
};

using ConvexBody = std::variant<Simplex, Ball, Box, Polygon, Polytope3D, Revolution>;

inline Simplex make_simplex(std::vector<Vec> vertices) {
    const auto n = vertices.empty() ? 0 : vertices.front().size();
    if (n < 1 || vertices.size() != static_cast<std::size_t>(n + 1))
        throw ValidationError("simplex in R^n needs exactly n + 1 vertices");
    for (const auto& v : vertices)
        if (v.size() != n) throw ValidationError("simplex vertices have inconsistent dimension");
    Eigen::MatrixXd edges(n, n);
    for (Eigen::Index i = 0; i < n; ++i) edges.col(i) = vertices[static_cast<std::size_t>(i + 1)] - vertices[0];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
    if (lu.rank() < n) throw ValidationError("simplex vertices are affinely dependent (empty interior)");
    return {std::move(vertices), lu.inverse()};
}

inline Ball make_ball(Vec center, double radius) {
    if (!(radius > 0.0)) throw ValidationError("ball radius must be > 0");
    if (center.size() < 2) throw ValidationError("ball dimension must be >= 2");
    return {std::move(center), radius};
}

inline Box make_box(Vec lo, Vec hi) {
    if (lo.size() != hi.size() || lo.size() < 2) throw ValidationError("box corners must share a dimension >= 2");
    if (!((hi - lo).minCoeff() > 0.0)) throw ValidationError("box edge lengths must be > 0");
    return {std::move(lo), std::move(hi)};
}

inline Polygon make_polygon(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw ValidationError("polygon needs at least 3 vertices");
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = vertices[i];
        const Vec2& q = vertices[(i + 1) % n];
        const Vec2& r = vertices[(i + 2) % n];
        if (!(geom::cross2(q - p, r - q) > 0.0))
            throw ValidationError("polygon vertices must be counter-clockwise and strictly convex");
    }
    if (!(geom::shoelace(vertices) > 0.0)) throw ValidationError("polygon has zero area");
    return {std::move(vertices)};
}

/// Faces may be omitted; they are then recovered from the vertex set.
inline Polytope3D make_polytope3d(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces = {}) {
    if (vertices.size() < 4) throw ValidationError("3-D polytope needs at least 4 vertices");
    Polytope3D P;
    P.vertices = std::move(vertices);
    Vec3 mean = Vec3::Zero();
    for (const auto& v : P.vertices) mean += v;
    mean /= static_cast<double>(P.vertices.size());
    if (faces.empty()) {
        auto hull = geom::convex_hull_3d(P.vertices);
        P.faces = std::move(hull.faces);
        P.planes = std::move(hull.planes);
    } else {
        for (auto& f : faces) {
            if (f.size() < 3) throw ValidationError("polytope face needs at least 3 vertices");
            for (int idx : f)
                if (idx < 0 || idx >= static_cast<int>(P.vertices.size()))
                    throw ValidationError("polytope face references missing vertex " + std::to_string(idx));
            Vec3 nrm = Vec3::Zero();  // Newell normal
            for (std::size_t i = 0; i < f.size(); ++i) {
                const Vec3& a = P.vertices[static_cast<std::size_t>(f[i])];
                const Vec3& b = P.vertices[static_cast<std::size_t>(f[(i + 1) % f.size()])];
                nrm += Vec3((a.y() - b.y()) * (a.z() + b.z()), (a.z() - b.z()) * (a.x() + b.x()),
                            (a.x() - b.x()) * (a.y() + b.y()));
            }
            if (nrm.norm() == 0.0) throw ValidationError("degenerate polytope face");
            nrm.normalize();
            const Vec3& a0 = P.vertices[static_cast<std::size_t>(f[0])];
            if (nrm.dot(a0 - mean) < 0.0) {
                nrm = -nrm;
                std::reverse(f.begin(), f.end());
            }
            P.planes.push_back({nrm, nrm.dot(a0)});
        }
        P.faces = std::move(faces);
    }
    if (P.faces.size() < 4) throw ValidationError("3-D polytope has empty interior");
    for (const auto& f : P.faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            if (a > b) std::swap(a, b);
            P.edges.emplace_back(a, b);
        }
    std::sort(P.edges.begin(), P.edges.end());
    P.edges.erase(std::unique(P.edges.begin(), P.edges.end()), P.edges.end());
    return P;
}

inline Revolution make_revolution(AnyProfile profile, int dim, Vec origin = {}, Vec axis = {}) {
    if (dim < 2) throw ValidationError("body of revolution needs dimension >= 2");
    if (origin.size() == 0) origin = Vec::Zero(dim);
    if (axis.size() == 0) axis = Vec::Unit(dim, 0);
    if (origin.size() != dim || axis.size() != dim) throw ValidationError("revolution origin/axis dimension mismatch");
    if (std::fabs(axis.norm() - 1.0) > 1e-12) throw ValidationError("revolution axis must be a unit vector");
    if (!(profile.max_value() > 0.0)) throw ValidationError("revolution radius function vanishes identically");
    return {std::move(profile), dim, std::move(origin), std::move(axis)};
}

inline int dimension(const ConvexBody& K) {
    struct V {
        int operator()(const Simplex& s) const { return static_cast<int>(s.vertices.front().size()); }
        int operator()(const Ball& b) const { return static_cast<int>(b.center.size()); }
        int operator()(const Box& b) const { return static_cast<int>(b.lo.size()); }
        int operator()(const Polygon&) const { return 2; }
        int operator()(const Polytope3D&) const { return 3; }
        int operator()(const Revolution& r) const { return r.dim; }
    };
    return std::visit(V{}, K);
}

inline const char* variant_name(const ConvexBody& K) {
    static constexpr const char* names[] = {"simplex", "ball", "box", "polytope2d", "polytope3d", "revolution"};
    return names[K.index()];
}

/// Box corner list (2^n points).
inline std::vector<Vec> box_corners(const Box& b) {
    const auto n = b.lo.size();
    std::vector<Vec> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Vec c(n);
        for (Eigen::Index i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? b.hi[i] : b.lo[i];
        out.push_back(std::move(c));
    }
    return out;
}

/// Vertex list for the polytopal variants (empty for balls and revolutions).
inline std::vector<Vec> vertex_list(const ConvexBody& K) {
    struct V {
        std::vector<Vec> operator()(const Simplex& s) const { return s.vertices; }
        std::vector<Vec> operator()(const Ball&) const { return {}; }
        std::vector<Vec> operator()(const Box& b) const { return box_corners(b); }
        std::vector<Vec> operator()(const Polygon& p) const {
            std::vector<Vec> out;
            for (const auto& v : p.vertices) out.emplace_back(v);
            return out;
        }
        std::vector<Vec> operator()(const Polytope3D& p) const {
            std::vector<Vec> out;
            for (const auto& v : p.vertices) out.emplace_back(v);
            return out;
        }
        std::vector<Vec> operator()(const Revolution&) const { return {}; }
    };
    return std::visit(V{}, K);
}

/// Simplices of dimension 2 and 3 and low-dimensional boxes are re-expressed as
/// polygons / 3-D polytopes so that exact sectioning applies to them.
inline ConvexBody as_low_dim_polytope(const ConvexBody& K) {
    const int n = dimension(K);
    if (!(std::holds_alternative<Simplex>(K) || std::holds_alternative<Box>(K)) || n > 3) return K;
    const auto verts = vertex_list(K);
    if (n == 2) {
        std::vector<Vec2> pts;
        for (const auto& v : verts) pts.emplace_back(v[0], v[1]);
        return make_polygon(geom::convex_hull_2d(pts));
    }
    std::vector<Vec3> pts;
    for (const auto& v : verts) pts.emplace_back(v[0], v[1], v[2]);
    return make_polytope3d(pts);
}

/// Exact volume and centroid. Polygons use a triangle fan, 3-D polytopes a
/// cone-over-faces tetrahedral decomposition from the vertex mean.
struct MassProperties {
    double volume;
    Vec centroid;
};

MassProperties mass_properties(const ConvexBody& K, const QuadratureSpec& spec = {});

namespace detail {

inline double factorial(int k) { return std::tgamma(k + 1.0); }

inline MassProperties polygon_mass(const std::vector<Vec2>& v) {
    double area = 0.0;
    Vec2 acc = Vec2::Zero();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double a = 0.5 * geom::cross2(v[i] - v[0], v[i + 1] - v[0]);
        area += a;
        acc += a * (v[0] + v[i] + v[i + 1]) / 3.0;
    }
    return {area, Vec(acc / area)};
}

inline MassProperties polytope_mass(const Polytope3D& P) {
    Vec3 o = Vec3::Zero();
    for (const auto& v : P.vertices) o += v;
    o /= static_cast<double>(P.vertices.size());
    double vol = 0.0;
    Vec3 acc = Vec3::Zero();
    for (const auto& f : P.faces) {
        const Vec3& p0 = P.vertices[static_cast<std::size_t>(f[0])];
        for (std::size_t i = 1; i + 1 < f.size(); ++i) {
            const Vec3& p1 = P.vertices[static_cast<std::size_t>(f[i])];
            const Vec3& p2 = P.vertices[static_cast<std::size_t>(f[i + 1])];
            const double v = (p0 - o).dot((p1 - o).cross(p2 - o)) / 6.0;
            vol += v;
            acc += v * (o + p0 + p1 + p2) / 4.0;
        }
    }
    return {vol, Vec(acc / vol)};
}

}  // namespace detail

inline MassProperties mass_properties(const ConvexBody& K, const QuadratureSpec& spec) {
    struct V {
        const QuadratureSpec& spec;
        MassProperties operator()(const Simplex& s) const {
            const auto n = static_cast<int>(s.vertices.front().size());
            Vec c = Vec::Zero(n);
            for (const auto& v : s.vertices) c += v;
            c /= static_cast<double>(s.vertices.size());
            Eigen::MatrixXd edges(n, n);
            for (int i = 0; i < n; ++i) edges.col(i) = s.vertices[static_cast<std::size_t>(i + 1)] - s.vertices[0];
            return {std::fabs(edges.determinant()) / detail::factorial(n), c};
        }
        MassProperties operator()(const Ball& b) const {
            const auto n = static_cast<int>(b.center.size());
            return {unit_ball_volume(n) * std::pow(b.radius, n), b.center};
        }
        MassProperties operator()(const Box& b) const { return {(b.hi - b.lo).prod(), Vec(0.5 * (b.lo + b.hi))}; }
        MassProperties operator()(const Polygon& p) const { return detail::polygon_mass(p.vertices); }
        MassProperties operator()(const Polytope3D& p) const { return detail::polytope_mass(p); }
        MassProperties operator()(const Revolution& r) const {
            const double vol = r.profile.powered_integral(1.0, r.profile.lo(), r.profile.hi(), spec);
            const double s = r.profile.moment_integral(1.0, r.profile.lo(), r.profile.hi(), spec) / vol;
            return {vol, r.origin + s * r.axis};
        }
    };
    return std::visit(V{spec}, K);
}

/// Membership test (closed body), used by the Monte Carlo estimators.
inline bool contains(const ConvexBody& K, const Vec& x) {
    struct V {
        const Vec& x;
        bool operator()(const Simplex& s) const {
            const Vec lam = s.inverse_edges * (x - s.vertices[0]);
            return lam.minCoeff() >= 0.0 && lam.sum() <= 1.0;
        }
        bool operator()(const Ball& b) const { return (x - b.center).squaredNorm() <= b.radius * b.radius; }
        bool operator()(const Box& b) const {
            return (x - b.lo).minCoeff() >= 0.0 && (b.hi - x).minCoeff() >= 0.0;
        }
        bool operator()(const Polygon& p) const {
            const Vec2 q(x[0], x[1]);
            const std::size_t n = p.vertices.size();
            for (std::size_t i = 0; i < n; ++i)
                if (geom::cross2(p.vertices[(i + 1) % n] - p.vertices[i], q - p.vertices[i]) < 0.0) return false;
            return true;
        }
        bool operator()(const Polytope3D& p) const {
            const Vec3 q(x[0], x[1], x[2]);
            for (const auto& pl : p.planes)
                if (pl.normal.dot(q) > pl.offset) return false;
            return true;
        }
        bool operator()(const Revolution& r) const {
            const Vec d = x - r.origin;
            const double s = d.dot(r.axis);
            if (s < r.profile.lo() || s > r.profile.hi()) return false;
            const double rho = r.radius_at(s);
            return (d - s * r.axis).squaredNorm() <= rho * rho;
        }
    };
    return std::visit(V{x}, K);
}

/// Axis-aligned bounding box.
inline std::pair<Vec, Vec> bounding_box(const ConvexBody& K) {
    if (const auto* b = std::get_if<Ball>(&K)) {
        const Vec r = Vec::Constant(b->center.size(), b->radius);
        return {b->center - r, b->center + r};
    }
    if (const auto* b = std::get_if<Box>(&K)) return {b->lo, b->hi};
    if (const auto* r = std::get_if<Revolution>(&K)) {
        const double lo = r->profile.lo(), hi = r->profile.hi();
        const double rho = std::pow(r->profile.max_value() / unit_ball_volume(r->dim - 1), 1.0 / (r->dim - 1));
        Vec a(r->dim), b(r->dim);
        for (int i = 0; i < r->dim; ++i) {
            const double w = r->axis[i];
            const double spread = rho * std::sqrt(std::max(0.0, 1.0 - w * w));
            a[i] = r->origin[i] + std::min(lo * w, hi * w) - spread;
            b[i] = r->origin[i] + std::max(lo * w, hi * w) + spread;
        }
        return {a, b};
    }
    const auto verts = vertex_list(K);
    Vec a = verts.front(), b = verts.front();
    for (const auto& v : verts) {
        a = a.cwiseMin(v);
        b = b.cwiseMax(v);
    }
    return {a, b};
}

/// x -> Q x + shift for an orthogonal Q. Boxes become general polytopes (n <= 3).
inline ConvexBody transformed(const ConvexBody& K, const Eigen::MatrixXd& Q, const Vec& shift) {
    const auto map = [&](const Vec& v) -> Vec { return Q * v + shift; };
    if (const auto* s = std::get_if<Simplex>(&K)) {
        std::vector<Vec> vs;
        for (const auto& v : s->vertices) vs.push_back(map(v));
        return make_simplex(std::move(vs));
    }
    if (const auto* b = std::get_if<Ball>(&K)) return make_ball(map(b->center), b->radius);
    if (const auto* r = std::get_if<Revolution>(&K))
        return make_revolution(r->profile, r->dim, map(r->origin), Vec(Q * r->axis));
    const ConvexBody P = as_low_dim_polytope(K);
    if (const auto* p = std::get_if<Polygon>(&P)) {
        std::vector<Vec2> vs;
        for (const auto& v : p->vertices) {
            const Vec w = map(Vec(v));
            vs.emplace_back(w[0], w[1]);
        }
        if (Q.determinant() < 0) std::reverse(vs.begin(), vs.end());
        return make_polygon(std::move(vs));
    }
    if (const auto* p = std::get_if<Polytope3D>(&P)) {
        std::vector<Vec3> vs;
        for (const auto& v : p->vertices) {
            const Vec w = map(Vec(v));
            vs.emplace_back(w[0], w[1], w[2]);
        }
        return make_polytope3d(std::move(vs), p->faces);
    }
    throw ParameterError("transformed: boxes above dimension 3 are not supported");
}

}  // namespace grunlab
