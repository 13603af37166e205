#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pib {

/// Quantile-share summary: shares rank-ordered richest first, the Lorenz
/// curve (ascending wealth order), and the Gini coefficient.
struct WealthReport {
    std::int64_t n_groups;
    std::vector<double> shares;
    std::vector<std::pair<double, double>> lorenz;  // (population frac, wealth frac)
    double gini;
};

// Share of the n-th richest of q equal population groups under the log-share
// law rebinned to N = q: ρ(n; q) for n = 1..q, richest first.
std::vector<double> quantile_shares(std::int64_t n_groups);

// Normalizes the shares, builds the Lorenz curve, and computes the Gini
// coefficient by the exact pairwise formula (sorted prefix-sum form).
WealthReport lorenz_gini(const std::vector<double>& shares);

}  // namespace pib
