#pragma once

// JSON load/save for profiles and convex bodies.
//
//   profile: {"breakpoints": [[t, h], ...]}
//            {"kind": "decreasing_power", "params": {"c": 1, "gamma": 0, "delta": 1, "q": 2}}
//   body:    {"variant": "ball", "center": [0, 0, 0], "radius": 1}

#include <algorithm>
#include <fstream>
#include <type_traits>
#include <string>
#include <vector>

#include "json.hpp"

#include "grunlab/body.hpp"
#include "grunlab/errors.hpp"
#include "grunlab/profile.hpp"

namespace grunlab {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

inline double number(const json& j, const char* key, const char* what) {
    const auto& v = field(j, key, what);
    if (!v.is_number()) throw ValidationError(std::string(what) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

inline double number_or(const json& j, const char* key, double fallback, const char* what) {
    return j.contains(key) ? number(j, key, what) : fallback;
}

inline Vec vector_of(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + ": expected a non-empty numeric array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ValidationError(std::string(what) + ": non-numeric coordinate");
        v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    }
    return v;
}

inline std::vector<Vec> points_of(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + ": expected an array of points");
    std::vector<Vec> out;
    for (const auto& p : j) out.push_back(vector_of(p, what));
    return out;
}

inline json vec_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

}  // namespace detail

inline AnyProfile profile_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("profile: expected a JSON object");
    if (j.contains("breakpoints")) {
        const auto& arr = j.at("breakpoints");
        if (!arr.is_array()) throw ValidationError("profile: 'breakpoints' must be an array");
        std::vector<Breakpoint> pts;
        for (const auto& bp : arr) {
            if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number() || !bp[1].is_number())
                throw ValidationError("profile: each breakpoint must be [t, h]");
            pts.push_back({bp[0].get<double>(), bp[1].get<double>()});
        }
        return Profile{PiecewiseLinear(std::move(pts))};
    }
    const auto& kind_field = detail::field(j, "kind", "profile");
    if (!kind_field.is_string()) throw ValidationError("profile: 'kind' must be a string");
    auto kind = kind_field.get<std::string>();
    std::replace(kind.begin(), kind.end(), '-', '_');
    const json params = j.value("params", json::object());
    constexpr const char* w = "profile params";
    if (kind == "constant")
        return Profile{AnalyticProfile::constant(detail::number(params, "c", w), detail::number(params, "gamma", w),
                                                 detail::number(params, "delta", w))};
    if (kind == "decreasing_power" || kind == "increasing_power") {
        const double c = detail::number(params, "c", w);
        const double g = detail::number(params, "gamma", w);
        const double d = detail::number(params, "delta", w);
        const double q = detail::number(params, "q", w);
        return Profile{kind == "decreasing_power" ? AnalyticProfile::decreasing_power(c, g, d, q)
                                                  : AnalyticProfile::increasing_power(c, g, d, q)};
    }
    if (kind == "ball_section") {
        const double n = detail::number(params, "n", w);
        if (n != static_cast<int>(n)) throw ValidationError("profile: ball_section 'n' must be an integer");
        return Profile{AnalyticProfile::ball_section(detail::number(params, "radius", w), static_cast<int>(n),
                                                     detail::number_or(params, "center", 0.0, w),
                                                     detail::number_or(params, "c", -1.0, w))};
    }
    throw ValidationError("profile: unknown kind '" + kind + "'");
}

inline json to_json(const PiecewiseLinear& p) {
    json arr = json::array();
    for (const auto& bp : p.breakpoints()) arr.push_back({bp.t, bp.h});
    return {{"breakpoints", arr}};
}

inline json to_json(const ConcaveProfile& p) { return to_json(p.piecewise()); }

inline json to_json(const AnalyticProfile& p) {
    json params;
    switch (p.kind()) {
        case AnalyticProfile::Kind::constant:
            params = {{"c", p.scale()}, {"gamma", p.gamma()}, {"delta", p.delta()}};
            break;
        case AnalyticProfile::Kind::increasing_power:
        case AnalyticProfile::Kind::decreasing_power:
            params = {{"c", p.scale()}, {"gamma", p.gamma()}, {"delta", p.delta()}, {"q", p.exponent()}};
            break;
        case AnalyticProfile::Kind::ball_section:
            params = {{"radius", p.radius()}, {"n", p.dim()}, {"center", p.center()}, {"c", p.scale()}};
            break;
    }
    return {{"kind", AnalyticProfile::kind_name(p.kind())}, {"params", params}};
}

inline json to_json(const AnyProfile& p) {
    return std::visit([](const auto& x) { return to_json(x); }, p.get());
}

inline ConvexBody body_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("body: expected a JSON object");
    const auto& vf = detail::field(j, "variant", "body");
    if (!vf.is_string()) throw ValidationError("body: 'variant' must be a string");
    const auto variant = vf.get<std::string>();
    if (variant == "simplex") return make_simplex(detail::points_of(detail::field(j, "vertices", "simplex"), "simplex"));
    if (variant == "ball")
        return make_ball(detail::vector_of(detail::field(j, "center", "ball"), "ball center"),
                         detail::number(j, "radius", "ball"));
    if (variant == "box")
        return make_box(detail::vector_of(detail::field(j, "lo", "box"), "box lo"),
                        detail::vector_of(detail::field(j, "hi", "box"), "box hi"));
    if (variant == "polytope2d") {
        std::vector<Vec2> pts;
        for (const auto& v : detail::points_of(detail::field(j, "vertices", "polytope2d"), "polytope2d")) {
            if (v.size() != 2) throw ValidationError("polytope2d: vertices must be 2-D");
            pts.emplace_back(v[0], v[1]);
        }
        return make_polygon(std::move(pts));
    }
    if (variant == "polytope3d") {
        std::vector<Vec3> pts;
        for (const auto& v : detail::points_of(detail::field(j, "vertices", "polytope3d"), "polytope3d")) {
            if (v.size() != 3) throw ValidationError("polytope3d: vertices must be 3-D");
            pts.emplace_back(v[0], v[1], v[2]);
        }
        std::vector<std::vector<int>> faces;
        if (j.contains("faces")) {
            try {
                faces = j.at("faces").get<std::vector<std::vector<int>>>();
            } catch (const nlohmann::json::exception&) {
                throw ValidationError("polytope3d: 'faces' must be arrays of vertex indices");
            }
        }
        return make_polytope3d(std::move(pts), std::move(faces));
    }
    if (variant == "revolution") {
        const double n = detail::number(j, "dim", "revolution");
        if (n != static_cast<int>(n)) throw ValidationError("revolution: 'dim' must be an integer");
        Vec origin, axis;
        if (j.contains("origin")) origin = detail::vector_of(j.at("origin"), "revolution origin");
        if (j.contains("axis")) axis = detail::vector_of(j.at("axis"), "revolution axis");
        return make_revolution(profile_from_json(detail::field(j, "profile", "revolution")), static_cast<int>(n),
                               std::move(origin), std::move(axis));
    }
    throw ValidationError("body: unknown variant '" + variant + "'");
}

inline json to_json(const ConvexBody& K) {
    json j;
    j["variant"] = variant_name(K);
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Simplex>) {
                for (const auto& v : b.vertices) j["vertices"].push_back(detail::vec_json(v));
            } else if constexpr (std::is_same_v<T, Ball>) {
                j["center"] = detail::vec_json(b.center);
                j["radius"] = b.radius;
            } else if constexpr (std::is_same_v<T, Box>) {
                j["lo"] = detail::vec_json(b.lo);
                j["hi"] = detail::vec_json(b.hi);
            } else if constexpr (std::is_same_v<T, Polygon>) {
                for (const auto& v : b.vertices) j["vertices"].push_back({v.x(), v.y()});
            } else if constexpr (std::is_same_v<T, Polytope3D>) {
                for (const auto& v : b.vertices) j["vertices"].push_back({v.x(), v.y(), v.z()});
                j["faces"] = b.faces;
            } else {
                j["profile"] = to_json(b.profile);
                j["dim"] = b.dim;
                j["origin"] = detail::vec_json(b.origin);
                j["axis"] = detail::vec_json(b.axis);
            }
        },
        K);
    return j;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

inline AnyProfile load_profile(const std::string& path) { return profile_from_json(read_json_file(path)); }
inline ConvexBody load_body(const std::string& path) { return body_from_json(read_json_file(path)); }

}  // namespace grunlab
