// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line each. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pib/benford.hpp"
#include "pib/distribution.hpp"
#include "pib/fitting.hpp"
#include "pib/inequality.hpp"
#include "pib/io.hpp"
#include "pib/oracle.hpp"
#include "pib/sampler.hpp"

using namespace pib;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion1_benford() {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const int status = cli_dispatch({"dist", "--boxes", "9", "--out", "csv"}, out, err);
    const ShareDistribution d = rho_table(9);
    const double ratio = d.probabilities[0] / d.probabilities[8];
    const bool ok = status == 0 && std::abs(d.probabilities[0] - 0.301030) <= 1e-6 &&
                    std::abs(d.probabilities[8] - 0.045757) <= 1e-6 &&
                    std::abs(ratio - 6.579) <= 1e-3 && elapsed_s(start) < 1.0;
    std::ostringstream detail;
    detail << "rho1=" << d.probabilities[0] << " rho9=" << d.probabilities[8]
           << " ratio=" << ratio;
    report(1, "Benford reproduction via dist --boxes 9", ok, detail.str());
}

void criterion2_theoretical_column() {
    const ShareDistribution d = rho_table(3);
    const int a = round_half_up(d.probabilities[0] * 100.0);
    const int b = round_half_up(d.probabilities[1] * 100.0);
    const int c = round_half_up(d.probabilities[2] * 100.0);
    std::ostringstream detail;
    detail << a << "% " << b << "% " << c << "%";
    report(2, "rho_table(3) rounds to (50, 29, 21)", a == 50 && b == 29 && c == 21, detail.str());
}

void criterion3_poll_averages() {
    const PollTable table = builtin_poll_table();
    const bool rounds_ok = round_half_up(table.average[0]) == 52 &&
                           round_half_up(table.average[1]) == 30 &&
                           round_half_up(table.average[2]) == 18;
    const PollReport rep = poll_report(table);
    const double avg_mad = rep.comparisons.back().gof.mad;
    std::ostringstream detail;
    detail << "averages " << table.average[0] << "/" << table.average[1] << "/"
           << table.average[2] << ", MAD vs theoretical = " << avg_mad << " (reported)";
    report(3, "poll fixture averages round to (52, 30, 18)", rounds_ok, detail.str());
}

void criterion4_wealth_numbers() {
    const double one_of_million = cumulative_share(1, 1000000);
    const double top_decile = cumulative_share(1, 10);
    const double top_half = cumulative_share(1, 2);
    const double bottom_decile = quantile_shares(10).back();
    const bool ok = std::abs(one_of_million - 0.0502) <= 1e-4 &&
                    std::abs(top_decile - 0.2891) <= 1e-4 &&
                    std::abs(top_half - 0.6309) <= 1e-4 &&
                    std::abs(bottom_decile - 0.0398) <= 1e-4 &&
                    std::abs(bottom_decile - 0.044) > 1e-3;  // documented divergence
    std::ostringstream detail;
    detail << one_of_million << " / " << top_decile << " / " << top_half
           << ", bottom decile " << bottom_decile << " != 0.044";
    report(4, "wealth shares (0.05, 0.29, 0.63) and the 0.0398 bottom decile", ok, detail.str());
}

void criterion5_enumeration() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::int64_t n = 1; n <= 6 && ok; ++n) {
        for (std::int64_t p = 0; p <= 8 && ok; ++p) {
            std::int64_t count = 0;
            enumerate_configurations(BoxEnsemble(n, p), [&](const Configuration&) { ++count; });
            ok = count == multiplicity(BoxEnsemble(n, p)).convert_to<std::int64_t>();
        }
    }
    const double secs = elapsed_s(start);
    ok = ok && secs < 5.0;
    std::ostringstream detail;
    detail << secs << " s";
    report(5, "enumeration count equals the exact multiplicity on N<=6, P<=8", ok, detail.str());
}

void criterion6_sampler() {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t trials = 1000000;
    const OccupancyDistribution marginal = exact_marginal(BoxEnsemble(5, 20));
    bool ok = true;
    double worst_p = 1.0;
    for (std::uint64_t seed : {42ULL, 20260826ULL, 0xdecafbadULL}) {
        const Histogram hist = occupancy_histogram(BoxEnsemble(5, 20), trials, seed, 1);
        std::vector<double> observed(marginal.prob.size(), 0.0);
        for (const auto& [k, c] : hist.bins) observed[static_cast<std::size_t>(k)] += c;
        std::vector<double> obs_pooled, exp_pooled;
        double obs_tail = 0.0, exp_tail = 0.0;
        for (std::size_t k = 0; k < marginal.prob.size(); ++k) {
            const double e = marginal.prob[k] * trials;
            if (e >= 5.0) {
                obs_pooled.push_back(observed[k]);
                exp_pooled.push_back(e);
            } else {
                obs_tail += observed[k];
                exp_tail += e;
            }
        }
        if (exp_tail > 0.0) {
            obs_pooled.push_back(obs_tail);
            exp_pooled.push_back(exp_tail);
        }
        const GoodnessOfFit gof = chi_square_test(obs_pooled, exp_pooled);
        worst_p = std::min(worst_p, gof.p_value);
        ok = ok && gof.p_value > 0.001;
    }
    const double secs = elapsed_s(start);
    ok = ok && secs < 30.0;
    std::ostringstream detail;
    detail << "worst p = " << worst_p << ", " << secs << " s single-threaded";
    report(6, "10^6-trial sampler passes chi-square vs exact_marginal(5, 20)", ok, detail.str());
}

void criterion7_stirling() {
    const double approx = shannon_info(100, 10.0);
    const double lg = log_multiplicity(BoxEnsemble(100, 1000));
    const double exact = std::log(multiplicity(BoxEnsemble(100, 1000)).convert_to<double>());
    const bool ok = std::abs(approx - lg) / lg < 0.01 && std::abs(lg - exact) / exact < 1e-9;
    std::ostringstream detail;
    detail << "stirling rel err " << std::abs(approx - lg) / lg << ", log-gamma rel err "
           << std::abs(lg - exact) / exact;
    if (!ok) {
        // The leading-order Stirling entropy genuinely misses ln of the
        // (N+P-1 choose P) count by 1.69% at this size; the 1% bound only
        // holds against the count without the -1 shifts.
        detail << "; known gap, see tests for the measured values";
    }
    report(7, "Stirling entropy within 1% of ln multiplicity at (100, 1000)", ok, detail.str());
}

void criterion8_alpha_recovery() {
    std::vector<double> exact_counts, uniform_counts(9, 1000.0);
    for (double p : rho_table(9).probabilities) exact_counts.push_back(p * 100000.0);
    const double at_generator = fit_alpha(exact_counts, 9).alpha_hat;
    const double at_uniform = fit_alpha(uniform_counts, 9).alpha_hat;

    // 1e5 seeded samples via inverse CDF on the plain table.
    const ShareDistribution table = rho_table(9);
    std::vector<double> cdf;
    double cum = 0.0;
    for (double p : table.probabilities) {
        cum += p;
        cdf.push_back(cum);
    }
    std::uint64_t state = 20260826;
    auto next_uniform = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    };
    std::vector<double> sampled(9, 0.0);
    for (int i = 0; i < 100000; ++i) {
        const double u = next_uniform();
        std::size_t d = 0;
        while (d + 1 < cdf.size() && u > cdf[d]) ++d;
        sampled[d] += 1.0;
    }
    const double recovered = fit_alpha(sampled, 9).alpha_hat;

    const bool ok = std::abs(at_generator - 1.0) <= 1e-6 && std::abs(at_uniform) <= 1e-6 &&
                    recovered >= 0.95 && recovered <= 1.05;
    std::ostringstream detail;
    detail << "exact " << at_generator << ", uniform " << at_uniform << ", sampled " << recovered;
    report(8, "alpha recovery (1, 0, and [0.95, 1.05] on samples)", ok, detail.str());
}

void criterion9_invariants() {
    bool ok = true;
    std::ostringstream detail;

    for (std::int64_t n : {1LL, 9LL, 1000LL, 1000000LL}) {
        double sum = 0.0, comp = 0.0;
        for (double p : rho_table(n).probabilities) {
            const double y = p - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            ok = false;
            detail << "normalization fails at N=" << n << "; ";
        }
    }

    const ShareDistribution plain = rho_table(9);
    for (double beta : {0.37, 113.0}) {
        const ShareDistribution induced = lagrange_table(9, beta);
        for (std::size_t i = 0; i < 9; ++i) {
            if (std::abs(induced.probabilities[i] - plain.probabilities[i]) > 1e-12) {
                ok = false;
                detail << "beta invariance fails at beta=" << beta << "; ";
                break;
            }
        }
    }

    for (double n : {0.01, 0.5, 1.0, 9.0, 1e6}) {
        if (std::abs(occupancy_from_potential(phi(n, Temperature(1.0))) - n) > 1e-10 * n) {
            ok = false;
            detail << "phi round-trip fails at n=" << n << "; ";
        }
    }

    for (std::int64_t n = 2; n <= 30 && ok; ++n) {
        for (std::int64_t p = 1; p <= 30; ++p) {
            if (multiplicity(BoxEnsemble(n, p)) !=
                multiplicity(BoxEnsemble(n - 1, p)) + multiplicity(BoxEnsemble(n, p - 1))) {
                ok = false;
                detail << "Pascal recurrence fails at (" << n << ", " << p << "); ";
                break;
            }
        }
    }

    {
        const WealthReport rep = lorenz_gini(quantile_shares(10));
        double area = 0.0;
        for (std::size_t i = 1; i < rep.lorenz.size(); ++i) {
            area += (rep.lorenz[i].first - rep.lorenz[i - 1].first) *
                    (rep.lorenz[i].second + rep.lorenz[i - 1].second) / 2.0;
        }
        if (std::abs(rep.gini - (1.0 - 2.0 * area)) > 1e-10) {
            ok = false;
            detail << "Gini pairwise-vs-area disagreement; ";
        }
    }

    {
        const Histogram one = occupancy_histogram(BoxEnsemble(5, 20), 20000, 42, 1);
        const Histogram eight = occupancy_histogram(BoxEnsemble(5, 20), 20000, 42, 8);
        if (one.bins != eight.bins) {
            ok = false;
            detail << "worker-count determinism fails; ";
        }
    }

    report(9, "invariant suite (normalization, beta, round-trip, Pascal, Gini, determinism)",
           ok, detail.str());
}

}  // namespace

int main() {
    criterion1_benford();
    criterion2_theoretical_column();
    criterion3_poll_averages();
    criterion4_wealth_numbers();
    criterion5_enumeration();
    criterion6_sampler();
    criterion7_stirling();
    criterion8_alpha_recovery();
    criterion9_invariants();
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
    } else {
        std::cout << failures << " acceptance criteria failed\n";
    }
    return failures;
}
