#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pib/fitting.hpp"
#include "pib/sampler.hpp"

using namespace pib;

namespace {

// Committed seeds for the reproducible chi-square checks.
constexpr std::uint64_t kSeeds[3] = {42, 20260826, 0xdecafbadULL};

std::vector<double> histogram_counts(const Histogram& hist, std::int64_t p) {
    std::vector<double> counts(static_cast<std::size_t>(p) + 1, 0.0);
    for (const auto& [k, c] : hist.bins) counts[static_cast<std::size_t>(k)] += static_cast<double>(c);
    return counts;
}

}  // namespace

TEST_CASE("degenerate ensembles sample deterministically") {
    CHECK(sample_configuration(BoxEnsemble(1, 5), 1) == Configuration{5});
    CHECK(sample_configuration(BoxEnsemble(1, 5), 999) == Configuration{5});
    CHECK(sample_configuration(BoxEnsemble(3, 0), 7) == Configuration{0, 0, 0});
}

TEST_CASE("sampled configurations are valid and seed-deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Configuration c = sample_configuration(BoxEnsemble(6, 17), seed);
        REQUIRE(c.size() == 6);
        for (std::int64_t occ : c) CHECK(occ >= 0);
        CHECK(std::accumulate(c.begin(), c.end(), std::int64_t{0}) == 17);
        CHECK(sample_configuration(BoxEnsemble(6, 17), seed) == c);
    }
}

TEST_CASE("uniformity over the four (N=2, P=3) configurations") {
    const std::int64_t trials = 400000;
    const Histogram hist = occupancy_histogram(BoxEnsemble(2, 3), trials, kSeeds[0]);
    CHECK(hist.total_observations == trials);
    // Each bin ~1e5; 3 sigma of Binomial(4e5, 1/4) is about 822.
    const double sigma3 = 3.0 * std::sqrt(trials * 0.25 * 0.75);
    for (std::int64_t k = 0; k <= 3; ++k) {
        CHECK(std::abs(static_cast<double>(hist.bins.at(k)) - trials / 4.0) < sigma3);
    }
}

TEST_CASE("worker count does not change the histogram") {
    const Histogram one = occupancy_histogram(BoxEnsemble(2, 3), 1000, 42, 1);
    const Histogram four = occupancy_histogram(BoxEnsemble(2, 3), 1000, 42, 4);
    const Histogram eight = occupancy_histogram(BoxEnsemble(2, 3), 1000, 42, 8);
    CHECK(one.bins == four.bins);
    CHECK(one.bins == eight.bins);
    CHECK(one.total_observations == eight.total_observations);
}

TEST_CASE("histogram mean approaches P/N") {
    const Histogram hist = occupancy_histogram(BoxEnsemble(5, 20), 200000, kSeeds[1]);
    double mean = 0.0;
    for (const auto& [k, c] : hist.bins) mean += static_cast<double>(k * c);
    mean /= static_cast<double>(hist.total_observations);
    CHECK(mean == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("chi-square against the exact marginal at committed seeds") {
    const std::int64_t trials = 1000000;
    for (auto [n, p] : {std::pair<std::int64_t, std::int64_t>{5, 20}, {9, 90}, {3, 7}}) {
        const OccupancyDistribution marginal = exact_marginal(BoxEnsemble(n, p));
        for (std::uint64_t seed : kSeeds) {
            const Histogram hist = occupancy_histogram(BoxEnsemble(n, p), trials, seed, 4);
            std::vector<double> observed = histogram_counts(hist, p);
            std::vector<double> expected;
            for (double prob : marginal.prob) expected.push_back(prob * trials);

            // Pool the sparse tail so every expected cell is populated.
            std::vector<double> obs_pooled, exp_pooled;
            double obs_tail = 0.0, exp_tail = 0.0;
            for (std::size_t k = 0; k < expected.size(); ++k) {
                if (expected[k] >= 5.0) {
                    obs_pooled.push_back(observed[k]);
                    exp_pooled.push_back(expected[k]);
                } else {
                    obs_tail += observed[k];
                    exp_tail += expected[k];
                }
            }
            if (exp_tail > 0.0) {
                obs_pooled.push_back(obs_tail);
                exp_pooled.push_back(exp_tail);
            }
            const GoodnessOfFit gof = chi_square_test(obs_pooled, exp_pooled);
            INFO("N=", n, " P=", p, " seed=", seed, " chi2=", gof.chi_square);
            CHECK(gof.p_value > 0.001);
        }
    }
}
