#pragma once

#include <cstdint>
#include <map>

#include "pib/oracle.hpp"

namespace pib {

/// Counts of box-1 occupancies over repeated draws.
struct Histogram {
    std::map<std::int64_t, std::int64_t> bins;
    std::int64_t total_observations = 0;
};

// One configuration drawn uniformly over all C(N+P-1, P) microstates,
// via stars-and-bars: N-1 bar positions chosen without replacement from the
// N+P-1 symbol slots; occupancies are the gap lengths. Deterministic in seed.
//
// RNG contract: the per-draw stream is mt19937_64 seeded by a splitmix64
// finalizer over (seed, trial index), so draws are independent substreams and
// parallel merges are order-independent.
Configuration sample_configuration(const BoxEnsemble& ensemble, std::uint64_t seed);

// Occupancy of box 1 pooled over `trials` independent configurations.
// Identical result for any worker count at the same seed.
Histogram occupancy_histogram(const BoxEnsemble& ensemble, std::int64_t trials,
                              std::uint64_t seed, int workers = 1);

}  // namespace pib
