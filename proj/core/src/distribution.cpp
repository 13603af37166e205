#include "pib/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pib {

BoxEnsemble::BoxEnsemble(std::int64_t boxes, std::optional<std::int64_t> particles)
    : n_boxes(boxes), n_particles(particles) {
    if (n_boxes < 1) {
        throw std::invalid_argument("BoxEnsemble: n_boxes must be >= 1, got " +
                                    std::to_string(n_boxes));
    }
    if (n_particles && *n_particles < 0) {
        throw std::invalid_argument("BoxEnsemble: n_particles must be >= 0, got " +
                                    std::to_string(*n_particles));
    }
}

Temperature::Temperature(double t) : theta(t) {
    if (!(theta > 0.0)) {
        throw std::domain_error("Temperature: theta must be > 0");
    }
}

BigInt multiplicity(const BoxEnsemble& ensemble) {
    if (!ensemble.n_particles) {
        throw std::invalid_argument("multiplicity: n_particles is required");
    }
    const std::int64_t n = ensemble.n_boxes;
    const std::int64_t p = *ensemble.n_particles;
    // C(n+p-1, p) by the multiplicative recurrence over the smaller index.
    const std::int64_t k = std::min(p, n - 1);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n + p - k + i - 1);
        result /= i;
    }
    return result;
}

double log_multiplicity(const BoxEnsemble& ensemble) {
    if (!ensemble.n_particles) {
        throw std::invalid_argument("log_multiplicity: n_particles is required");
    }
    const double n = static_cast<double>(ensemble.n_boxes);
    const double p = static_cast<double>(*ensemble.n_particles);
    return std::lgamma(n + p) - std::lgamma(n) - std::lgamma(p + 1.0);
}

double shannon_info(std::int64_t n_boxes, double mean_occupancy) {
    if (n_boxes < 1) {
        throw std::invalid_argument("shannon_info: n_boxes must be >= 1");
    }
    if (!(mean_occupancy > 0.0)) {
        throw std::domain_error("shannon_info: mean_occupancy must be > 0");
    }
    const double n = mean_occupancy;
    return static_cast<double>(n_boxes) * ((1.0 + n) * std::log1p(n) - n * std::log(n));
}

double phi(double n, const Temperature& theta) {
    if (!(n > 0.0)) {
        throw std::domain_error("phi: n must be > 0");
    }
    return theta.theta * std::log1p(1.0 / n);
}

double occupancy_from_potential(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("occupancy_from_potential: x must be > 0");
    }
    return 1.0 / std::expm1(x);
}

ShareDistribution rho_table(std::int64_t n_boxes, double alpha) {
    if (n_boxes < 1) {
        throw std::invalid_argument("rho_table: n_boxes must be >= 1");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("rho_table: alpha must be finite");
    }
    ShareDistribution dist;
    dist.n_boxes = n_boxes;
    dist.alpha = alpha;
    dist.probabilities.resize(static_cast<std::size_t>(n_boxes));
    if (alpha == 1.0) {
        dist.kind = ShareKind::plain;
        const double norm = std::log1p(static_cast<double>(n_boxes));
        for (std::int64_t n = 1; n <= n_boxes; ++n) {
            dist.probabilities[static_cast<std::size_t>(n - 1)] =
                std::log1p(1.0 / static_cast<double>(n)) / norm;
        }
        return dist;
    }
    dist.kind = ShareKind::alpha_law;
    // Z(α, N) by compensated summation; no closed form for α != 1.
    double sum = 0.0, comp = 0.0;
    for (std::int64_t n = 1; n <= n_boxes; ++n) {
        const double w = std::pow(std::log1p(1.0 / static_cast<double>(n)), alpha);
        dist.probabilities[static_cast<std::size_t>(n - 1)] = w;
        const double y = w - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    for (double& p : dist.probabilities) p /= sum;
    return dist;
}

double cumulative_share(std::int64_t k, std::int64_t n_boxes) {
    if (n_boxes < 1) {
        throw std::invalid_argument("cumulative_share: n_boxes must be >= 1");
    }
    if (k < 1 || k > n_boxes) {
        throw std::invalid_argument("cumulative_share: k must be in [1, n_boxes]");
    }
    return std::log1p(static_cast<double>(k)) / std::log1p(static_cast<double>(n_boxes));
}

double lagrange_phi(double n, std::int64_t n_boxes, double beta) {
    if (!(n > 0.0)) {
        throw std::domain_error("lagrange_phi: n must be > 0");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("lagrange_phi: beta must be > 0");
    }
    if (n_boxes < 1) {
        throw std::invalid_argument("lagrange_phi: n_boxes must be >= 1");
    }
    return (static_cast<double>(n_boxes) / beta) * std::log1p(1.0 / n);
}

ShareDistribution lagrange_table(std::int64_t n_boxes, double beta) {
    ShareDistribution dist;
    dist.n_boxes = n_boxes;
    dist.alpha = 1.0;
    dist.kind = ShareKind::plain;
    dist.probabilities.resize(static_cast<std::size_t>(n_boxes));
    double sum = 0.0;
    for (std::int64_t n = 1; n <= n_boxes; ++n) {
        const double v = lagrange_phi(static_cast<double>(n), n_boxes, beta);
        dist.probabilities[static_cast<std::size_t>(n - 1)] = v;
        sum += v;
    }
    // The multiplier cancels here, recovering the plain table.
    for (double& p : dist.probabilities) p /= sum;
    return dist;
}

}  // namespace pib
