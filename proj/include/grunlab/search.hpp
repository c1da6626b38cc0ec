#pragma once

// Random concave profiles for falsification runs, and a seeded coordinate
// descent that pushes the right-tail mass ratio toward its lower bound.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grunlab/bounds.hpp"
#include "grunlab/integrals.hpp"
#include "grunlab/montecarlo.hpp"
#include "grunlab/profile.hpp"
#include "grunlab/report.hpp"

namespace grunlab {

namespace detail {

/// Concave ordinates over the given abscissas: sorted-decreasing random slopes,
/// lifted so the lower endpoint sits at a random nonnegative height (zero with
/// probability 0.3), then scaled to max 1.
inline std::vector<double> random_concave_ordinates(std::mt19937_64& rng, const std::vector<double>& t) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double spread = 0.2 + 3.0 * unit(rng);
    std::normal_distribution<double> slope_dist(0.0, spread);
    std::vector<double> slopes(t.size() - 1);
    for (auto& s : slopes) s = slope_dist(rng);
    std::sort(slopes.begin(), slopes.end(), std::greater<>());
    std::vector<double> y(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) y[i] = y[i - 1] + slopes[i - 1] * (t[i] - t[i - 1]);
    const double lowest = std::min(y.front(), y.back());
    const double range = *std::max_element(y.begin(), y.end()) - lowest;
    const double lift = unit(rng) < 0.3 ? 0.0 : unit(rng) * (range > 0.0 ? range : 1.0);
    for (auto& v : y) v = v - lowest + lift;
    const double top = *std::max_element(y.begin(), y.end());
    for (auto& v : y) v = top > 0.0 ? v / top : 1.0;
    return y;
}

inline std::vector<Breakpoint> zip(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<Breakpoint> pts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) pts[i] = {t[i], y[i]};
    return pts;
}

}  // namespace detail

/// Random concave profile with m breakpoints on [lo, hi]. Interior abscissas are
/// jittered around a uniform grid; identical seeds give identical profiles.
inline ConcaveProfile random_concave(std::uint64_t seed, int m, double lo = 0.0, double hi = 1.0) {
    if (m < 3) throw ParameterError("random_concave: m must be >= 3");
    if (!(lo < hi)) throw ParameterError("random_concave: empty domain");
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(substream_seed(seed, attempt));
        std::uniform_real_distribution<double> jitter(-0.4, 0.4);
        std::vector<double> t(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const double x = (i == 0 || i == m - 1) ? i : i + jitter(rng);
            t[static_cast<std::size_t>(i)] = lo + (hi - lo) * x / (m - 1);
        }
        t.back() = hi;
        try {
            return ConcaveProfile(detail::zip(t, detail::random_concave_ordinates(rng, t)));
        } catch (const ValidationError&) {
            // Vanishing interior from rounding; redraw.
        }
    }
}

/// FNV-1a over the bit patterns of the breakpoints, as 16 hex digits.
inline std::string profile_hash(const ConcaveProfile& h) {
    std::uint64_t x = 0xcbf29ce484222325ULL;
    const auto mix = [&](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            x ^= (bits >> (8 * i)) & 0xffU;
            x *= 0x100000001b3ULL;
        }
    };
    for (const auto& bp : h.breakpoints()) {
        mix(bp.t);
        mix(bp.h);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

struct SearchConfig {
    int breakpoints = 16;
    int budget = 10'000;      // objective evaluations per restart
    double initial_step = 0.25;
    double step_shrink = 0.5;
    double min_step = 1e-9;
    std::uint64_t seed = 0;
    double alpha = 1.0;
    double beta = 1.0;
    int restarts = 8;
    unsigned workers = 0;

    void validate() const {
        if (breakpoints < 3) throw ParameterError("search: breakpoint count must be >= 3");
        if (budget < 1) throw ParameterError("search: budget must be >= 1");
        if (restarts < 1) throw ParameterError("search: restarts must be >= 1");
        if (!(initial_step > 0.0) || !(step_shrink > 0.0 && step_shrink < 1.0))
            throw ParameterError("search: invalid step schedule");
        functional_bound(alpha, beta);
    }
};

struct SearchMove {
    int restart;
    int iteration;
    double ratio;
};

struct SearchResult {
    ConcaveProfile best;
    double best_ratio;
    SharpBound bound;
    double gap;
    int best_restart;
    std::int64_t evaluations;
    std::vector<SearchMove> trace;
};

namespace detail {

// Re-sorting slopes restores concavity; lifting and rescaling keep the
// profile nonnegative with max 1. Returns nullopt for a degenerate result.
inline std::optional<std::vector<double>> project_concave(const std::vector<double>& t, std::vector<double> y) {
    std::vector<double> slopes(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i) slopes[i - 1] = (y[i] - y[i - 1]) / (t[i] - t[i - 1]);
    std::sort(slopes.begin(), slopes.end(), std::greater<>());
    for (std::size_t i = 1; i < t.size(); ++i) y[i] = y[i - 1] + slopes[i - 1] * (t[i] - t[i - 1]);
    const double lowest = std::min(y.front(), y.back());
    if (lowest < 0.0)
        for (auto& v : y) v -= lowest;
    y.front() = std::max(0.0, y.front());
    y.back() = std::max(0.0, y.back());
    const double top = *std::max_element(y.begin(), y.end());
    if (!(top > 0.0)) return std::nullopt;
    for (auto& v : y) v /= top;
    return y;
}

struct RestartOutcome {
    std::vector<double> y;
    double ratio;
    std::int64_t evaluations;
    std::vector<SearchMove> trace;
};

inline RestartOutcome run_restart(const SearchConfig& cfg, int restart, const std::vector<double>& t) {
    std::mt19937_64 rng(substream_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    const auto objective = [&](const std::vector<double>& y) -> std::optional<double> {
        try {
            return tail_mass_ratio(ConcaveProfile(zip(t, y)), cfg.alpha, cfg.beta);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    RestartOutcome out;
    out.y = random_concave_ordinates(rng, t);
    auto start = objective(out.y);
    while (!start) {
        out.y = random_concave_ordinates(rng, t);
        start = objective(out.y);
    }
    out.ratio = *start;
    out.evaluations = 1;
    out.trace.push_back({restart, 0, out.ratio});
    double step = cfg.initial_step;
    const int m = static_cast<int>(t.size());
    while (out.evaluations < cfg.budget && step >= cfg.min_step) {
        bool improved = false;
        // Coordinate m is a common vertical shift; the max-1 normalisation turns it
        // into the only move that can lower both ends of a nearly affine profile at once.
        for (int i = 0; i <= m && out.evaluations < cfg.budget; ++i)
            for (double dir : {1.0, -1.0}) {
                if (out.evaluations >= cfg.budget) break;
                auto cand = out.y;
                if (i == m) {
                    for (auto& v : cand) v += dir * step;
                } else {
                    cand[static_cast<std::size_t>(i)] += dir * step;
                }
                const auto proj = project_concave(t, std::move(cand));
                if (!proj) continue;
                const auto val = objective(*proj);
                ++out.evaluations;
                if (val && *val < out.ratio) {
                    out.y = *proj;
                    out.ratio = *val;
                    improved = true;
                    out.trace.push_back({restart, static_cast<int>(out.evaluations), out.ratio});
                    break;
                }
            }
        if (!improved) step *= cfg.step_shrink;
    }
    return out;
}

}  // namespace detail

/// Multi-restart coordinate descent on the ordinates of a profile over a
/// uniform grid of [0, 1]. Deterministic for a fixed config, whatever the
/// worker count.
inline SearchResult minimize_tail_ratio(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<double> t(static_cast<std::size_t>(cfg.breakpoints));
    for (int i = 0; i < cfg.breakpoints; ++i) t[static_cast<std::size_t>(i)] = static_cast<double>(i) / (cfg.breakpoints - 1);

    std::vector<std::optional<detail::RestartOutcome>> outcomes(static_cast<std::size_t>(cfg.restarts));
    std::atomic<int> next{0};
    const auto worker = [&] {
        for (int r = next++; r < cfg.restarts; r = next++) outcomes[static_cast<std::size_t>(r)] = detail::run_restart(cfg, r, t);
    };
    const unsigned nw = std::max(1u, std::min<unsigned>(cfg.workers ? cfg.workers : std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(cfg.restarts)));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nw; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int best = 0;
    std::int64_t evals = 0;
    std::vector<SearchMove> trace;
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& o = *outcomes[static_cast<std::size_t>(r)];
        evals += o.evaluations;
        trace.insert(trace.end(), o.trace.begin(), o.trace.end());
        if (o.ratio < outcomes[static_cast<std::size_t>(best)]->ratio) best = r;
    }
    const auto& win = *outcomes[static_cast<std::size_t>(best)];
    const auto bound = functional_bound(cfg.alpha, cfg.beta);
    return {ConcaveProfile(detail::zip(t, win.y)), win.ratio, bound, win.ratio - bound.value, best, evals,
            std::move(trace)};
}

struct SweepRow {
    double alpha;
    double beta;
    int trials;
    double min_slack;
    std::string argmin_profile_hash;
    std::uint64_t seed;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int violations = 0;  // cells whose min slack fell below -1e-9
};

/// Minimum slack of verify_functional over `trials` random profiles per (alpha, beta) cell.
inline SweepResult sweep(const std::vector<double>& alphas, const std::vector<double>& betas, int trials,
                         std::uint64_t seed, unsigned workers = 0) {
    if (trials < 1) throw ParameterError("sweep: trials must be >= 1");
    for (double b : betas)
        if (!(b > 0.0)) throw ParameterError("sweep: beta values must be > 0");
    for (double a : alphas)
        if (!(a >= 0.0)) throw ParameterError("sweep: alpha values must be >= 0");
    const std::size_t cells = alphas.size() * betas.size();
    SweepResult out;
    out.rows.resize(cells);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t c = next++; c < cells; c = next++) {
            const double alpha = alphas[c / betas.size()];
            const double beta = betas[c % betas.size()];
            const double bound = functional_bound(alpha, beta).value;
            SweepRow row{alpha, beta, trials, std::numeric_limits<double>::infinity(), "", seed};
            for (int k = 0; k < trials; ++k) {
                // Trial profiles depend on (seed, k) only, so every cell sees the same draws.
                const std::uint64_t s = substream_seed(seed, static_cast<std::uint64_t>(k));
                const int m = 3 + static_cast<int>(splitmix64(s) % 30);
                const auto h = random_concave(s, m);
                const double slack = tail_mass_ratio(h, alpha, beta) - bound;
                if (slack < row.min_slack) {
                    row.min_slack = slack;
                    row.argmin_profile_hash = profile_hash(h);
                }
            }
            out.rows[c] = row;
        }
    };
    const unsigned nw = cells == 0 ? 1 : std::max(1u, std::min<unsigned>(workers ? workers : std::thread::hardware_concurrency(),
                                                                         static_cast<unsigned>(cells)));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nw; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : out.rows)
        if (r.min_slack < -kExactTol) ++out.violations;
    return out;
}

inline std::string sweep_csv(const SweepResult& s) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha,beta,trials,min_slack,argmin_profile_hash,seed\n";
    for (const auto& r : s.rows)
        os << r.alpha << ',' << r.beta << ',' << r.trials << ',' << r.min_slack << ',' << r.argmin_profile_hash << ','
           << r.seed << '\n';
    return os.str();
}

}  // namespace grunlab
