#include "pib/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pib/distribution.hpp"

namespace pib {

std::vector<double> quantile_shares(std::int64_t n_groups) {
    // Rebin the population into q equal groups and apply the share law with
    // N = q; rank 1 (richest) first, already descending.
    return rho_table(n_groups).probabilities;
}

WealthReport lorenz_gini(const std::vector<double>& shares) {
    if (shares.empty()) {
        throw std::invalid_argument("lorenz_gini: shares must be nonempty");
    }
    double total = 0.0;
    for (double s : shares) {
        if (!(s > 0.0)) {
            throw std::domain_error("lorenz_gini: every share must be > 0");
        }
        total += s;
    }

    const std::size_t q = shares.size();
    std::vector<double> ascending(shares);
    std::sort(ascending.begin(), ascending.end());

    WealthReport report;
    report.n_groups = static_cast<std::int64_t>(q);
    report.shares.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
        report.shares[i] = ascending[q - 1 - i] / total;  // richest first
    }

    report.lorenz.reserve(q + 1);
    report.lorenz.emplace_back(0.0, 0.0);
    double cum = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        cum += ascending[i] / total;
        report.lorenz.emplace_back(static_cast<double>(i + 1) / static_cast<double>(q),
                                   std::min(cum, 1.0));
    }
    report.lorenz.back().second = 1.0;

    // Pairwise Gini Σ|s_i - s_j| / (2 q Σs) via the sorted prefix-sum form:
    // G = Σ_i (2i - q + 1) x_(i) / (q Σx), ascending order, i from 0.
    double g = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        g += (2.0 * static_cast<double>(i) - static_cast<double>(q) + 1.0) * ascending[i];
    }
    report.gini = g / (static_cast<double>(q) * total);
    return report;
}

}  // namespace pib
