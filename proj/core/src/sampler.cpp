#include "pib/sampler.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>
#include <vector>

namespace pib {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream seed for a trial: two splitmix64 rounds over (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

// Occupancy of box 1 for one uniform configuration. Only the first gap of the
// stars-and-bars arrangement is needed: the smallest of N-1 distinct bar
// positions drawn from the N+P-1 slots.
std::int64_t sample_first_occupancy(std::int64_t n, std::int64_t p, std::uint64_t stream) {
    if (n == 1) return p;
    if (p == 0) return 0;
    std::mt19937_64 rng(stream);
    const std::int64_t slots = n + p - 1;
    // Floyd's algorithm: n-1 distinct values in [0, slots).
    std::unordered_set<std::int64_t> bars;
    bars.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = slots - (n - 1); j < slots; ++j) {
        std::uniform_int_distribution<std::int64_t> pick(0, j);
        const std::int64_t t = pick(rng);
        if (!bars.insert(t).second) bars.insert(j);
    }
    std::int64_t min_bar = slots;
    for (std::int64_t b : bars) min_bar = std::min(min_bar, b);
    return min_bar;
}

}  // namespace

Configuration sample_configuration(const BoxEnsemble& ensemble, std::uint64_t seed) {
    const std::int64_t n = ensemble.n_boxes;
    const std::int64_t p = ensemble.n_particles.value_or(0);
    Configuration occ(static_cast<std::size_t>(n), 0);
    if (n == 1) {
        occ[0] = p;
        return occ;
    }
    if (p == 0) return occ;

    std::mt19937_64 rng(trial_seed(seed, 0));
    const std::int64_t slots = n + p - 1;
    std::unordered_set<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(n));
    std::vector<std::int64_t> bars;
    bars.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t j = slots - (n - 1); j < slots; ++j) {
        std::uniform_int_distribution<std::int64_t> pick(0, j);
        const std::int64_t t = pick(rng);
        if (seen.insert(t).second) {
            bars.push_back(t);
        } else {
            seen.insert(j);
            bars.push_back(j);
        }
    }
    std::sort(bars.begin(), bars.end());
    occ[0] = bars[0];
    for (std::size_t i = 1; i < bars.size(); ++i) {
        occ[i] = bars[i] - bars[i - 1] - 1;
    }
    occ.back() = (slots - 1) - bars.back();
    return occ;
}

Histogram occupancy_histogram(const BoxEnsemble& ensemble, std::int64_t trials,
                              std::uint64_t seed, int workers) {
    if (trials < 1) {
        throw std::invalid_argument("occupancy_histogram: trials must be >= 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("occupancy_histogram: workers must be >= 1");
    }
    const std::int64_t n = ensemble.n_boxes;
    const std::int64_t p = ensemble.n_particles.value_or(0);

    auto run_range = [&](std::int64_t lo, std::int64_t hi, Histogram& local) {
        for (std::int64_t t = lo; t < hi; ++t) {
            const std::int64_t k = sample_first_occupancy(n, p, trial_seed(seed, static_cast<std::uint64_t>(t)));
            ++local.bins[k];
            ++local.total_observations;
        }
    };

    if (workers == 1) {
        Histogram hist;
        run_range(0, trials, hist);
        return hist;
    }

    std::vector<Histogram> partials(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::int64_t chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = std::min<std::int64_t>(trials, w * chunk);
        const std::int64_t hi = std::min<std::int64_t>(trials, lo + chunk);
        pool.emplace_back(run_range, lo, hi, std::ref(partials[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();

    Histogram merged;
    for (const Histogram& part : partials) {
        for (const auto& [k, c] : part.bins) merged.bins[k] += c;
        merged.total_observations += part.total_observations;
    }
    return merged;
}

}  // namespace pib
