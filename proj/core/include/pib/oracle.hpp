#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pib/distribution.hpp"

namespace pib {

/// One microstate: occupancies of the N boxes, summing to P.
using Configuration = std::vector<std::int64_t>;

/// Exact distribution of a single box's occupancy under uniform weighting of
/// all C(N+P-1, P) configurations. prob[k] for k = 0..P.
struct OccupancyDistribution {
    std::int64_t n_boxes;
    std::int64_t n_particles;
    std::vector<double> prob;
};

struct DeviationRow {
    std::int64_t n;
    double exact_conditional;
    double eq2_renormalized;
};

/// Side-by-side comparison of the exact occupied-box marginal and the
/// log-share law on the common support n = 1..min(P, N).
struct DeviationReport {
    std::vector<DeviationRow> rows;
    double total_variation;
};

// Visits every occupancy vector of length N summing to P exactly once, in
// lexicographic order. Throws if multiplicity(N, P) exceeds `cap`.
void enumerate_configurations(const BoxEnsemble& ensemble,
                              const std::function<void(const Configuration&)>& visit,
                              std::int64_t cap = 10'000'000);

// Convenience: collect the full enumeration into memory.
std::vector<Configuration> all_configurations(const BoxEnsemble& ensemble,
                                              std::int64_t cap = 10'000'000);

// Closed-form single-box marginal: prob[k] = C(N+P-k-2, P-k) / C(N+P-1, P)
// for N >= 2; point mass at P for N = 1.
OccupancyDistribution exact_marginal(const BoxEnsemble& ensemble);

// Conditional exact marginal P(k = n | k >= 1) vs the log-share table, both
// renormalized to n = 1..min(P, N), with the total-variation distance.
DeviationReport deviation_report(const BoxEnsemble& ensemble);

}  // namespace pib
