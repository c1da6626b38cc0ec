// grunlab: bound tables, theorem checks on profiles and bodies, extremal search.
//
// Exit status: 0 all checks pass, 2 a bound was violated, 1 usage or input error.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grunlab/grunlab.hpp"

using namespace grunlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, json, csv };

struct Options {
    std::string format = "auto";
    std::optional<double> alpha, beta, p, r, tol;
    std::optional<int> n;
    std::vector<double> u;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> samples;
    int bins = 256;
    std::string input;
    std::string theorem;
    std::string grid;
    int trials = 200;
    int breakpoints = 16;
    int budget = 10'000;
    int restarts = 8;
};

Format resolve_format(const Options& o, Format piped) {
    if (o.format == "table") return Format::table;
    if (o.format == "json") return Format::json;
    if (o.format == "csv") return Format::csv;
    return isatty(STDOUT_FILENO) ? Format::table : piped;
}

std::uint64_t require_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("GRUNLAB_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("GRUNLAB_SEED is not an unsigned integer");
    }
    throw UsageError("a seed is required (--seed or GRUNLAB_SEED)");
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Flat objects print as aligned key/value pairs (table) or a header plus one row (csv).
void emit_object(const json& j, Format f) {
    if (f == Format::json) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (f == Format::csv) {
        std::string head, row;
        for (const auto& [k, v] : j.items()) {
            head += (head.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + csv_escape(cell(v));
        }
        std::cout << head << '\n' << row << '\n';
        return;
    }
    std::size_t w = 0;
    for (const auto& [k, v] : j.items()) w = std::max(w, k.size());
    for (const auto& [k, v] : j.items()) std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k << cell(v) << '\n';
}

void emit_rows(const json& rows, const std::vector<std::string>& cols, Format f) {
    if (f == Format::json) {
        std::cout << rows.dump(2) << '\n';
        return;
    }
    if (f == Format::csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << cols[i];
        std::cout << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << csv_escape(cell(row[cols[i]]));
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> w(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        w[i] = cols[i].size();
        for (const auto& row : rows) w[i] = std::max(w[i], cell(row[cols[i]]).size());
    }
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << std::left << std::setw(static_cast<int>(w[i]) + 2) << cols[i];
    std::cout << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            std::cout << std::left << std::setw(static_cast<int>(w[i]) + 2) << cell(row[cols[i]]);
        std::cout << '\n';
    }
}

json flatten_report(const TheoremReport& r) {
    json j{{"theorem", r.theorem},
           {"ratio", r.ratio},
           {"bound", r.bound.value},
           {"slack", r.slack},
           {"tolerance", r.tolerance},
           {"pass", r.pass},
           {"regime", regime_name(r.bound.regime)},
           {"provenance", provenance_name(r.provenance.kind)}};
    for (const auto& [k, v] : r.bound.params) j[k] = v;
    if (r.provenance.mc) {
        j["seed"] = r.provenance.mc->seed;
        j["samples"] = r.provenance.mc->samples;
        j["bins"] = r.provenance.mc->bins;
        j["sigma"] = r.provenance.mc->sigma;
    }
    for (const auto& [k, v] : r.details.items())
        if (!j.contains(k)) j[k] = v;
    return j;
}

/// Applies a --tol override and prints the report; returns the exit status.
int finish_report(TheoremReport r, const Options& o, json run) {
    if (o.tol) {
        r.tolerance = *o.tol;
        r.pass = r.slack >= -r.tolerance;
    }
    const auto f = resolve_format(o, Format::json);
    if (f == Format::json) {
        auto j = to_json(r);
        j["run"] = std::move(run);
        std::cout << j.dump(2) << '\n';
    } else {
        auto j = flatten_report(r);
        for (const auto& [k, v] : run.items())
            if (!j.contains(k)) j[k] = v;
        emit_object(j, f);
    }
    return r.pass ? kExitOk : kExitViolation;
}

int cmd_bound(const Options& o) {
    json rows = json::array();
    const auto add = [&](const std::string& name, const SharpBound& b) {
        std::string params;
        for (const auto& [k, v] : b.params) params += (params.empty() ? "" : " ") + k + "=" + fmt(v);
        rows.push_back({{"bound", name}, {"value", b.value}, {"regime", regime_name(b.regime)}, {"params", params}});
    };
    if (o.n) {
        const auto c = classic_bounds(*o.n);
        add("grunbaum", c.grunbaum);
        add("minkowski_radon", c.minkowski_radon);
        add("makai_fradelizi", c.makai_fradelizi);
    }
    if (o.alpha || o.beta) {
        if (!o.alpha || !o.beta) throw UsageError("bound: --alpha and --beta go together");
        add("functional", functional_bound(*o.alpha, *o.beta));
    }
    if (o.p || o.r) {
        if (!o.p || !o.r) throw UsageError("bound: --p and --r go together");
        add("grunbaum_r", grunbaum_r_bound(*o.p, *o.r));
        if (*o.r > 0.0) add("jensen_bbl", jensen_bbl_bound(*o.p, *o.r));
    }
    if (rows.empty()) throw UsageError("bound: give --n, --alpha/--beta, or --p/--r");
    emit_rows(rows, {"bound", "value", "regime", "params"}, resolve_format(o, Format::json));
    return kExitOk;
}

int cmd_verify_fn(const Options& o) {
    const auto h = load_profile(o.input);
    const double a = o.alpha.value_or(1.0);
    const double b = o.beta.value_or(1.0);
    return finish_report(verify_functional(h, a, b), o, {{"subcommand", "verify-fn"}, {"input", o.input}});
}

Vec direction(const Options& o, int n) {
    if (o.u.empty()) {
        Vec e = Vec::Zero(n);
        e[0] = 1.0;
        return e;
    }
    if (static_cast<int>(o.u.size()) != n)
        throw UsageError("--u has " + std::to_string(o.u.size()) + " components, body is " + std::to_string(n) + "-dimensional");
    Vec u = Eigen::Map<const Vec>(o.u.data(), n);
    if (!(u.norm() > 0.0)) throw UsageError("--u must be nonzero");
    return u.normalized();
}

int cmd_verify_body(const Options& o) {
    const auto K = load_body(o.input);
    const int n = dimension(K);
    const Vec u = direction(o, n);
    std::optional<McSpec> mc;
    if (o.samples) {
        mc = McSpec{};
        mc->samples = *o.samples;
        mc->bins = o.bins;
        mc->seed = require_seed(o);
        mc->validate();
    }
    json run{{"subcommand", "verify-body"}, {"input", o.input}, {"u", std::vector<double>(u.data(), u.data() + n)}};
    if (mc) run["seed"] = mc->seed;

    std::string theorem = o.theorem;
    std::replace(theorem.begin(), theorem.end(), '_', '-');
    if (theorem == "grunbaum-r") {
        const double p = o.p.value_or(1.0 / (n - 1));
        const double r = o.r.value_or(1.0);
        return finish_report(verify_grunbaum_r(K, u, p, r, {}, mc), o, run);
    }
    if (theorem == "minkowski-radon") return finish_report(verify_minkowski_radon(K, u), o, run);
    if (theorem == "makai-fradelizi") return finish_report(verify_makai_fradelizi(K, u, {}, mc), o, run);
    throw UsageError("verify-body: --theorem must be grunbaum-r, minkowski-radon or makai-fradelizi");
}

int cmd_search(const Options& o) {
    SearchConfig c;
    c.seed = require_seed(o);
    c.alpha = o.alpha.value_or(1.0);
    c.beta = o.beta.value_or(1.0);
    c.breakpoints = o.breakpoints;
    c.budget = o.budget;
    c.restarts = o.restarts;
    const auto r = minimize_tail_ratio(c);
    const bool ok = r.gap >= -kExactTol;
    const auto f = resolve_format(o, Format::json);
    json j{{"alpha", c.alpha},
           {"beta", c.beta},
           {"seed", c.seed},
           {"breakpoints", c.breakpoints},
           {"budget", c.budget},
           {"restarts", c.restarts},
           {"best_ratio", r.best_ratio},
           {"bound", r.bound.value},
           {"regime", regime_name(r.bound.regime)},
           {"gap", r.gap},
           {"best_restart", r.best_restart},
           {"evaluations", r.evaluations},
           {"accepted_moves", r.trace.size()},
           {"profile_hash", profile_hash(r.best)},
           {"pass", ok}};
    if (f == Format::json) {
        j["best_profile"] = to_json(r.best);
        std::cout << j.dump(2) << '\n';
    } else {
        emit_object(j, f);
    }
    return ok ? kExitOk : kExitViolation;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad number '" + tok + "' in --grid");
        }
    }
    return out;
}

int cmd_sweep(const Options& o) {
    std::vector<double> alphas, betas;
    if (o.grid.empty() || o.grid == "default") {
        alphas = betas = {0.5, 1.0, 2.0, 3.0, 5.0};
    } else {
        // "a1,a2,...:b1,b2,..."; either side may be empty.
        const auto colon = o.grid.find(':');
        if (colon == std::string::npos) throw UsageError("--grid is 'default' or 'alphas:betas'");
        alphas = parse_list(o.grid.substr(0, colon));
        betas = parse_list(o.grid.substr(colon + 1));
    }
    if (o.trials < 1) throw UsageError("--trials must be >= 1");
    const auto seed = require_seed(o);
    const auto s = sweep(alphas, betas, o.trials, seed);
    const auto f = o.format == "auto" ? Format::csv : resolve_format(o, Format::csv);
    if (f == Format::csv) {
        std::cout << sweep_csv(s);
    } else {
        json rows = json::array();
        for (const auto& r : s.rows)
            rows.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"trials", r.trials}, {"min_slack", r.min_slack},
                            {"argmin_profile_hash", r.argmin_profile_hash}, {"seed", r.seed}});
        if (f == Format::json)
            std::cout << json{{"seed", seed}, {"violations", s.violations}, {"rows", rows}}.dump(2) << '\n';
        else
            emit_rows(rows, {"alpha", "beta", "trials", "min_slack", "argmin_profile_hash", "seed"}, f);
    }
    if (s.violations > 0) {
        std::cerr << "sweep: " << s.violations << " violation(s)\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_revolve_roundtrip(const Options& o) {
    if (!o.n) throw UsageError("revolve-roundtrip: --n is required");
    const auto f = load_profile(o.input);
    const double r = o.r.value_or(1.0);
    const double tol = o.tol.value_or(1e-8);
    const auto rt = revolve_roundtrip(f, *o.n, r);
    const bool ok = rt.discrepancy < tol;
    emit_object({{"input", o.input},
                 {"n", rt.n},
                 {"r", rt.r},
                 {"alpha", rt.alpha},
                 {"beta", rt.beta},
                 {"functional_ratio", rt.functional_ratio},
                 {"geometric_ratio", rt.geometric_ratio},
                 {"discrepancy", rt.discrepancy},
                 {"tolerance", tol},
                 {"pass", ok}},
                resolve_format(o, Format::json));
    return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centroid halfspace bounds for concave functions and convex bodies"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "table, json or csv (default: table on a terminal, json otherwise)")
        ->check(CLI::IsMember({"auto", "table", "json", "csv"}));

    const auto seed_opt = [&](CLI::App* sc) { sc->add_option("--seed", o.seed, "RNG seed (falls back to GRUNLAB_SEED)"); };
    const auto tol_opt = [&](CLI::App* sc) { sc->add_option("--tol", o.tol, "slack tolerance override"); };

    auto* bound = app.add_subcommand("bound", "sharp constants");
    bound->add_option("--alpha", o.alpha);
    bound->add_option("--beta", o.beta);
    bound->add_option("--p", o.p);
    bound->add_option("--r", o.r);
    bound->add_option("--n", o.n);

    auto* vfn = app.add_subcommand("verify-fn", "tail-mass bound on a concave profile");
    vfn->add_option("profile", o.input, "profile JSON")->required();
    vfn->add_option("--alpha", o.alpha, "centroid weight exponent (default 1)");
    vfn->add_option("--beta", o.beta, "mass exponent (default 1)");
    tol_opt(vfn);

    auto* vbody = app.add_subcommand("verify-body", "halfspace and section theorems on a body");
    vbody->add_option("body", o.input, "body JSON")->required();
    vbody->add_option("--theorem", o.theorem, "grunbaum-r, minkowski-radon or makai-fradelizi")->required();
    vbody->add_option("--u", o.u, "direction, comma separated (default e1)")->delimiter(',');
    vbody->add_option("--p", o.p, "section concavity exponent (default 1/(n-1))");
    vbody->add_option("--r", o.r, "centroid power (default 1)");
    vbody->add_option("--samples", o.samples, "use Monte Carlo sections with this many samples");
    vbody->add_option("--bins", o.bins, "Monte Carlo histogram bins");
    seed_opt(vbody);
    tol_opt(vbody);

    auto* search = app.add_subcommand("search", "minimise the tail-mass ratio over concave profiles");
    search->add_option("--alpha", o.alpha);
    search->add_option("--beta", o.beta);
    search->add_option("--breakpoints", o.breakpoints);
    search->add_option("--budget", o.budget, "objective evaluations per restart");
    search->add_option("--restarts", o.restarts);
    seed_opt(search);

    auto* sw = app.add_subcommand("sweep", "random profiles over an (alpha, beta) grid, CSV output");
    sw->add_option("--grid", o.grid, "'default' or 'a1,a2,...:b1,b2,...'");
    sw->add_option("--trials", o.trials, "profiles per cell");
    seed_opt(sw);

    auto* rt = app.add_subcommand("revolve-roundtrip", "tail ratio of a profile vs. its body of revolution");
    rt->add_option("profile", o.input, "profile JSON")->required();
    rt->add_option("--n", o.n, "ambient dimension");
    rt->add_option("--r", o.r, "centroid power (default 1)");
    tol_opt(rt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bound) return cmd_bound(o);
        if (*vfn) return cmd_verify_fn(o);
        if (*vbody) return cmd_verify_body(o);
        if (*search) return cmd_search(o);
        if (*sw) return cmd_sweep(o);
        if (*rt) return cmd_revolve_roundtrip(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const grunlab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}
