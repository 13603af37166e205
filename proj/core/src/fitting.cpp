#include "pib/fitting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pib {
namespace {

constexpr double kGammaEps = 1e-14;
constexpr int kGammaMaxIter = 500;

// Regularized lower incomplete gamma P(a, x) by power series.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kGammaMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kGammaEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz continued fraction.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kGammaEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kGammaEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::domain_error("gamma_q: requires a > 0 and x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

GoodnessOfFit chi_square_test(const std::vector<double>& observed,
                              const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("chi_square_test: category mismatch");
    }
    double obs_total = 0.0, exp_total = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0)) {
            throw std::invalid_argument("chi_square_test: expected counts must be > 0");
        }
        if (observed[i] < 0.0) {
            throw std::invalid_argument("chi_square_test: observed counts must be >= 0");
        }
        obs_total += observed[i];
        exp_total += expected[i];
    }
    if (!(obs_total >= 1.0)) {
        throw std::invalid_argument("chi_square_test: total observed must be >= 1");
    }

    GoodnessOfFit gof;
    gof.dof = static_cast<std::int64_t>(observed.size()) - 1;
    if (gof.dof < 1) gof.dof = 1;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double diff = observed[i] - expected[i];
        gof.chi_square += diff * diff / expected[i];
        if (observed[i] > 0.0) {
            gof.g_statistic += 2.0 * observed[i] * std::log(observed[i] / expected[i]);
        }
        gof.mad += std::abs(observed[i] / obs_total - expected[i] / exp_total);
    }
    gof.mad /= static_cast<double>(observed.size());
    gof.p_value = gamma_q(static_cast<double>(gof.dof) / 2.0, gof.chi_square / 2.0);
    return gof;
}

double mad(const std::vector<double>& observed_prop, const std::vector<double>& expected_prop) {
    if (observed_prop.size() != expected_prop.size() || observed_prop.empty()) {
        throw std::invalid_argument("mad: length mismatch");
    }
    double obs_sum = 0.0, exp_sum = 0.0;
    for (std::size_t i = 0; i < observed_prop.size(); ++i) {
        obs_sum += observed_prop[i];
        exp_sum += expected_prop[i];
    }
    if (std::abs(obs_sum - 1.0) > 1e-9 || std::abs(exp_sum - 1.0) > 1e-9) {
        throw std::invalid_argument("mad: proportions must each sum to 1");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < observed_prop.size(); ++i) {
        total += std::abs(observed_prop[i] - expected_prop[i]);
    }
    return total / static_cast<double>(observed_prop.size());
}

AlphaFit fit_alpha(const std::vector<double>& counts, std::int64_t n_boxes) {
    if (n_boxes < 1 || counts.size() != static_cast<std::size_t>(n_boxes)) {
        throw std::invalid_argument("fit_alpha: counts length must equal n_boxes");
    }
    double total = 0.0;
    int support = 0;
    for (double c : counts) {
        if (c < 0.0) throw std::invalid_argument("fit_alpha: negative count");
        if (c > 0.0) ++support;
        total += c;
    }
    if (total < 2.0 || support < 2) {
        throw std::runtime_error("fit_alpha: degenerate histogram (need >= 2 ranks with mass)");
    }

    std::vector<double> logw(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        logw[i] = std::log(std::log1p(1.0 / static_cast<double>(i + 1)));
    }
    double target = 0.0;  // (1/C) Σ c_n ln w_n
    for (std::size_t i = 0; i < counts.size(); ++i) target += counts[i] * logw[i];
    target /= total;

    // E_α[ln w] and Var_α[ln w] with weights w^α = exp(α ln w).
    auto moments = [&](double alpha) {
        double zmax = -std::numeric_limits<double>::infinity();
        for (double lw : logw) zmax = std::max(zmax, alpha * lw);
        double z = 0.0, m1 = 0.0, m2 = 0.0;
        for (double lw : logw) {
            const double w = std::exp(alpha * lw - zmax);
            z += w;
            m1 += w * lw;
            m2 += w * lw * lw;
        }
        const double mean = m1 / z;
        return std::pair<double, double>(mean, m2 / z - mean * mean);
    };

    // E_α[ln w] is strictly increasing in α; bisect E_α[ln w] = target.
    double lo = -20.0, hi = 20.0;
    while (moments(lo).first > target) lo *= 2.0;
    while (moments(hi).first < target) hi *= 2.0;
    int iterations = 0;
    while (hi - lo > 1e-8 && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (moments(mid).first < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }

    AlphaFit fit;
    fit.alpha_hat = 0.5 * (lo + hi);
    fit.iterations = iterations;
    fit.std_error = 1.0 / std::sqrt(total * moments(fit.alpha_hat).second);

    double log_z = 0.0;
    {
        double zmax = -std::numeric_limits<double>::infinity();
        for (double lw : logw) zmax = std::max(zmax, fit.alpha_hat * lw);
        double z = 0.0;
        for (double lw : logw) z += std::exp(fit.alpha_hat * lw - zmax);
        log_z = zmax + std::log(z);
    }
    fit.log_likelihood = fit.alpha_hat * target * total - total * log_z;
    return fit;
}

}  // namespace pib
