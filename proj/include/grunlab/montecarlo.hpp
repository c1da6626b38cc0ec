#pragma once

// Rejection sampling in the bounding box. The sample budget is cut into fixed
// chunks; chunk k draws from a generator seeded by a counter-based mix of
// (seed, k), so results do not depend on how chunks are spread over threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "grunlab/body.hpp"

namespace grunlab {

struct McSpec {
    std::int64_t samples = 1'000'000;
    int bins = 256;
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0: hardware concurrency

    void validate() const {
        if (samples < 10'000) throw ParameterError("McSpec: samples must be >= 1e4");
        if (bins < 16) throw ParameterError("McSpec: bins must be >= 16");
    }
};

inline constexpr std::int64_t kMcChunk = 1 << 15;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Counts of accepted samples, binned by <x, u> over [lo, hi], plus the count
/// with <x, u> <= cut.
struct McTally {
    std::int64_t drawn = 0;
    std::int64_t accepted = 0;
    std::int64_t below_cut = 0;
    std::vector<std::int64_t> bins;
    double box_volume = 0.0;
};

inline McTally mc_tally(const ConvexBody& K, const Vec& u, double lo, double hi, double cut, const McSpec& mc) {
    mc.validate();
    const auto [blo, bhi] = bounding_box(K);
    const auto n = blo.size();
    const std::int64_t chunks = (mc.samples + kMcChunk - 1) / kMcChunk;
    const unsigned workers = std::max(1u, std::min<unsigned>(mc.workers ? mc.workers : std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(chunks)));
    const int nb = mc.bins;
    const double width = (hi - lo) / nb;

    std::vector<McTally> partial(workers);
    const auto run = [&](unsigned w) {
        auto& t = partial[w];
        t.bins.assign(static_cast<std::size_t>(nb), 0);
        Vec x(n);
        for (std::int64_t c = w; c < chunks; c += workers) {
            std::mt19937_64 rng(substream_seed(mc.seed, static_cast<std::uint64_t>(c)));
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const std::int64_t count = std::min(kMcChunk, mc.samples - c * kMcChunk);
            for (std::int64_t i = 0; i < count; ++i) {
                for (Eigen::Index d = 0; d < n; ++d) x[d] = blo[d] + (bhi[d] - blo[d]) * unit(rng);
                ++t.drawn;
                if (!contains(K, x)) continue;
                ++t.accepted;
                const double s = x.dot(u);
                if (s <= cut) ++t.below_cut;
                const int b = std::clamp(static_cast<int>((s - lo) / width), 0, nb - 1);
                ++t.bins[static_cast<std::size_t>(b)];
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    McTally total;
    total.bins.assign(static_cast<std::size_t>(nb), 0);
    total.box_volume = (bhi - blo).prod();
    for (const auto& t : partial) {
        total.drawn += t.drawn;
        total.accepted += t.accepted;
        total.below_cut += t.below_cut;
        for (std::size_t b = 0; b < total.bins.size(); ++b) total.bins[b] += t.bins[b];
    }
    return total;
}

}  // namespace grunlab
