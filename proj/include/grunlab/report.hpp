#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "grunlab/bounds.hpp"

namespace grunlab {

inline constexpr double kExactTol = 1e-9;
/// One-sided 99% normal quantile.
inline constexpr double kZ99 = 2.3263478740408408;

struct McRecord {
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    int bins = 0;
    double sigma = 0.0;
};

struct Provenance {
    enum class Kind { exact, quadrature, monte_carlo };
    Kind kind = Kind::exact;
    double quadrature_tol = 0.0;
    std::optional<McRecord> mc;

    static Provenance exact() { return {}; }
    static Provenance quadrature(double tol) { return {Kind::quadrature, tol, std::nullopt}; }
    static Provenance monte_carlo(McRecord r) { return {Kind::monte_carlo, 0.0, r}; }

    /// Slack below which a comparison against a bound counts as a failure.
    double tolerance() const {
        switch (kind) {
            case Kind::exact: return kExactTol;
            case Kind::quadrature: return std::max(kExactTol, 3.0 * quadrature_tol);
            case Kind::monte_carlo: return kZ99 * (mc ? mc->sigma : 0.0);
        }
        return kExactTol;
    }
};

inline const char* provenance_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::exact: return "exact";
        case Provenance::Kind::quadrature: return "quadrature";
        case Provenance::Kind::monte_carlo: return "monte_carlo";
    }
    return "?";
}

struct TheoremReport {
    std::string theorem;
    double ratio = 0.0;
    SharpBound bound{};
    double slack = 0.0;
    bool pass = false;
    double tolerance = kExactTol;
    Provenance provenance;
    nlohmann::json details = nlohmann::json::object();
};

inline TheoremReport make_report(std::string theorem, double ratio, SharpBound bound, Provenance prov,
                                 nlohmann::json details = nlohmann::json::object()) {
    TheoremReport r;
    r.theorem = std::move(theorem);
    r.ratio = ratio;
    r.bound = std::move(bound);
    r.slack = ratio - r.bound.value;
    r.provenance = prov;
    r.tolerance = prov.tolerance();
    r.pass = r.slack >= -r.tolerance;
    r.details = std::move(details);
    return r;
}

inline nlohmann::json to_json(const Provenance& p) {
    nlohmann::json j{{"kind", provenance_name(p.kind)}};
    if (p.kind == Provenance::Kind::quadrature) j["abs_tol"] = p.quadrature_tol;
    if (p.mc) j["mc"] = {{"seed", p.mc->seed}, {"samples", p.mc->samples}, {"bins", p.mc->bins}, {"sigma", p.mc->sigma}};
    return j;
}

inline nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.bound.params) params[k] = v;
    return {
        {"theorem", r.theorem},
        {"ratio", r.ratio},
        {"bound", r.bound.value},
        {"regime", regime_name(r.bound.regime)},
        {"params", params},
        {"slack", r.slack},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"provenance", to_json(r.provenance)},
        {"details", r.details},
    };
}

}  // namespace grunlab
