#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pib {

using BigInt = boost::multiprecision::cpp_int;

/// Model parameters: N distinguishable boxes, optionally P indistinguishable
/// particles. P may be absent for the asymptotic operations that only need N.
struct BoxEnsemble {
    std::int64_t n_boxes = 1;
    std::optional<std::int64_t> n_particles;

    BoxEnsemble(std::int64_t boxes, std::optional<std::int64_t> particles = std::nullopt);
};

/// Dimensionless temperature Θ, strictly positive.
struct Temperature {
    double theta;
    explicit Temperature(double t);
};

enum class ShareKind { plain, alpha_law };

/// Normalized probability table ρ(1..N). `kind` records whether the table was
/// built from the plain log-share law or its α power-law generalization.
struct ShareDistribution {
    std::int64_t n_boxes;
    std::vector<double> probabilities;  // indexed n-1 for n = 1..N
    double alpha;
    ShareKind kind;
};

// Number of ways to place P indistinguishable particles in N boxes,
// C(N+P-1, P), computed exactly in arbitrary precision.
BigInt multiplicity(const BoxEnsemble& ensemble);

// ln of the multiplicity via log-gamma; usable far beyond the exact path.
double log_multiplicity(const BoxEnsemble& ensemble);

// Stirling entropy I = N{(1+n)ln(1+n) - n ln n} for mean occupancy n = P/N.
double shannon_info(std::int64_t n_boxes, double mean_occupancy);

// Potential of a box holding n particles: φ(n) = Θ ln((n+1)/n).
double phi(double n, const Temperature& theta);

// Occupancy from the potential-to-temperature ratio x = φ/Θ: n = 1/(e^x - 1).
// Inverse of phi at Θ = 1.
double occupancy_from_potential(double x);

// The normalized log-share table. For alpha = 1 this is
// ρ(n) = ln(1 + 1/n) / ln(N+1); the denominator telescopes so normalization
// is exact. General alpha weights each rank by (ln(1 + 1/n))^α with the
// normalizer accumulated by compensated summation.
ShareDistribution rho_table(std::int64_t n_boxes, double alpha = 1.0);

// Closed-form top-k cumulative of the plain table: ln(k+1)/ln(N+1).
double cumulative_share(std::int64_t k, std::int64_t n_boxes);

// Lagrange-multiplier route to the potential: (N/β) ln((n+1)/n). The induced
// normalized table is independent of β and equals rho_table(N).
double lagrange_phi(double n, std::int64_t n_boxes, double beta);

// Normalized table induced by lagrange_phi over n = 1..N.
ShareDistribution lagrange_table(std::int64_t n_boxes, double beta);

}  // namespace pib
