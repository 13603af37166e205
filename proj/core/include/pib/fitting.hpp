#pragma once

#include <cstdint>
#include <vector>

namespace pib {

struct GoodnessOfFit {
    double chi_square = 0.0;
    std::int64_t dof = 1;
    double p_value = 1.0;
    double g_statistic = 0.0;
    double mad = 0.0;
};

struct AlphaFit {
    double alpha_hat;
    double log_likelihood;
    double std_error;
    int iterations;
};

// Regularized upper incomplete gamma Q(a, x). Series for x < a + 1,
// continued fraction otherwise; the only special function in the library.
double gamma_q(double a, double x);

// Pearson chi-square with dof = categories - 1, p-value Q(dof/2, χ²/2),
// G-statistic 2 Σ o ln(o/e) with 0 ln 0 = 0, and MAD of the proportions.
GoodnessOfFit chi_square_test(const std::vector<double>& observed,
                              const std::vector<double>& expected);

// Mean absolute deviation between two proportion vectors (each sums to 1).
double mad(const std::vector<double>& observed_prop,
           const std::vector<double>& expected_prop);

// Maximum-likelihood α for p_α(n) ∝ (ln(1 + 1/n))^α on support 1..N, given
// counts[n-1] per rank. The log-likelihood is strictly concave in α, so the
// stationary equation has a unique root, found by bracketed bisection.
AlphaFit fit_alpha(const std::vector<double>& counts, std::int64_t n_boxes);

}  // namespace pib
