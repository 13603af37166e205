#include "pib/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pib {

void enumerate_configurations(const BoxEnsemble& ensemble,
                              const std::function<void(const Configuration&)>& visit,
                              std::int64_t cap) {
    const BigInt count = multiplicity(ensemble);
    if (count > cap) {
        throw std::runtime_error("enumerate_configurations: " + count.str() +
                                 " configurations exceed cap " + std::to_string(cap));
    }
    const std::int64_t n = ensemble.n_boxes;
    const std::int64_t p = *ensemble.n_particles;
    Configuration occ(static_cast<std::size_t>(n), 0);

    // Lexicographic recursion: box i takes 0..remaining, the last box the rest.
    auto recurse = [&](auto&& self, std::size_t box, std::int64_t remaining) -> void {
        if (box + 1 == occ.size()) {
            occ[box] = remaining;
            visit(occ);
            return;
        }
        for (std::int64_t k = 0; k <= remaining; ++k) {
            occ[box] = k;
            self(self, box + 1, remaining - k);
        }
    };
    recurse(recurse, 0, p);
}

std::vector<Configuration> all_configurations(const BoxEnsemble& ensemble, std::int64_t cap) {
    std::vector<Configuration> out;
    enumerate_configurations(ensemble, [&](const Configuration& c) { out.push_back(c); }, cap);
    return out;
}

OccupancyDistribution exact_marginal(const BoxEnsemble& ensemble) {
    if (!ensemble.n_particles) {
        throw std::invalid_argument("exact_marginal: n_particles is required");
    }
    const std::int64_t n = ensemble.n_boxes;
    const std::int64_t p = *ensemble.n_particles;
    OccupancyDistribution dist;
    dist.n_boxes = n;
    dist.n_particles = p;
    dist.prob.assign(static_cast<std::size_t>(p) + 1, 0.0);
    if (n == 1) {
        dist.prob.back() = 1.0;
        return dist;
    }
    // prob[k] = C(N+P-k-2, P-k) / C(N+P-1, P); recurrence
    // prob[k+1]/prob[k] = (P-k)/(N+P-k-2), with prob[0] = (N-1)/(N+P-1).
    double pk = static_cast<double>(n - 1) / static_cast<double>(n + p - 1);
    for (std::int64_t k = 0; k <= p; ++k) {
        dist.prob[static_cast<std::size_t>(k)] = pk;
        if (k < p) {
            pk *= static_cast<double>(p - k) / static_cast<double>(n + p - k - 2);
        }
    }
    return dist;
}

DeviationReport deviation_report(const BoxEnsemble& ensemble) {
    if (!ensemble.n_particles) {
        throw std::invalid_argument("deviation_report: n_particles is required");
    }
    const std::int64_t n_boxes = ensemble.n_boxes;
    const std::int64_t p = *ensemble.n_particles;
    if (n_boxes < 2 || p < 1) {
        throw std::invalid_argument("deviation_report: requires N >= 2 and P >= 1");
    }
    const std::int64_t support = std::min(p, n_boxes);

    const OccupancyDistribution marginal = exact_marginal(ensemble);
    const ShareDistribution eq2 = rho_table(n_boxes);

    double exact_norm = 0.0, eq2_norm = 0.0;
    for (std::int64_t n = 1; n <= support; ++n) {
        exact_norm += marginal.prob[static_cast<std::size_t>(n)];
        eq2_norm += eq2.probabilities[static_cast<std::size_t>(n - 1)];
    }

    DeviationReport report;
    report.total_variation = 0.0;
    for (std::int64_t n = 1; n <= support; ++n) {
        DeviationRow row;
        row.n = n;
        row.exact_conditional = marginal.prob[static_cast<std::size_t>(n)] / exact_norm;
        row.eq2_renormalized = eq2.probabilities[static_cast<std::size_t>(n - 1)] / eq2_norm;
        report.total_variation += std::abs(row.exact_conditional - row.eq2_renormalized);
        report.rows.push_back(row);
    }
    report.total_variation *= 0.5;
    return report;
}

}  // namespace pib
