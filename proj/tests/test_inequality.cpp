#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pib/distribution.hpp"
#include "pib/inequality.hpp"

using namespace pib;

namespace {

// Independent oracle: Gini = 1 - 2 * trapezoid area under the Lorenz curve.
double gini_from_lorenz(const std::vector<std::pair<double, double>>& lorenz) {
    double area = 0.0;
    for (std::size_t i = 1; i < lorenz.size(); ++i) {
        const double dx = lorenz[i].first - lorenz[i - 1].first;
        area += dx * (lorenz[i].second + lorenz[i - 1].second) / 2.0;
    }
    return 1.0 - 2.0 * area;
}

}  // namespace

TEST_CASE("quantile shares reproduce the wealth numbers") {
    const std::vector<double> deciles = quantile_shares(10);
    CHECK(deciles[0] == doctest::Approx(0.289).epsilon(1e-3));
    CHECK(deciles[9] == doctest::Approx(0.0398).epsilon(1e-3));

    CHECK(quantile_shares(2)[0] == doctest::Approx(0.631).epsilon(1e-3));
    CHECK(quantile_shares(1000000)[0] == doctest::Approx(0.0502).epsilon(1e-3));

    // Rank order: richest first.
    for (std::size_t i = 0; i + 1 < deciles.size(); ++i) CHECK(deciles[i] > deciles[i + 1]);
}

TEST_CASE("quantile shares normalize and cumulate in closed form") {
    for (std::int64_t q : {1LL, 10LL, 1000LL, 10000000LL}) {
        const std::vector<double> shares = quantile_shares(q);
        double sum = 0.0, comp = 0.0;
        for (double s : shares) {
            const double y = s - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    const std::vector<double> shares = quantile_shares(25);
    double cum = 0.0;
    for (std::int64_t k = 1; k <= 25; ++k) {
        cum += shares[static_cast<std::size_t>(k - 1)];
        CHECK(std::abs(cum - cumulative_share(k, 25)) <= 1e-12);
    }
}

TEST_CASE("lorenz_gini on equal shares") {
    const WealthReport report = lorenz_gini({2.5, 2.5, 2.5, 2.5});
    CHECK(report.gini == doctest::Approx(0.0).epsilon(1e-14));
    for (const auto& [pop, wealth] : report.lorenz) {
        CHECK(wealth == doctest::Approx(pop).epsilon(1e-12));
    }
}

TEST_CASE("lorenz_gini two-group limit") {
    const double eps = 1e-9;
    const WealthReport report = lorenz_gini({1.0 - eps, eps});
    CHECK(report.gini == doctest::Approx(0.5).epsilon(1e-8));
    CHECK_THROWS_AS(lorenz_gini({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(lorenz_gini({}), std::invalid_argument);
}

TEST_CASE("lorenz curve shape invariants") {
    const WealthReport report = lorenz_gini(quantile_shares(10));
    REQUIRE(report.lorenz.size() == 11);
    CHECK(report.lorenz.front() == std::pair<double, double>{0.0, 0.0});
    CHECK(report.lorenz.back().first == doctest::Approx(1.0));
    CHECK(report.lorenz.back().second == doctest::Approx(1.0));
    for (std::size_t i = 1; i < report.lorenz.size(); ++i) {
        CHECK(report.lorenz[i].first >= report.lorenz[i - 1].first);
        CHECK(report.lorenz[i].second >= report.lorenz[i - 1].second);
        CHECK(report.lorenz[i].second <= report.lorenz[i].first + 1e-12);  // convex, below diagonal
    }
    CHECK(report.gini > 0.0);
    CHECK(report.gini < 1.0);
}

TEST_CASE("pairwise Gini equals the trapezoid oracle") {
    const WealthReport deciles = lorenz_gini(quantile_shares(10));
    CHECK(std::abs(deciles.gini - gini_from_lorenz(deciles.lorenz)) <= 1e-10);

    std::mt19937_64 rng(20260826);
    std::uniform_real_distribution<double> uniform(0.01, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 40);
        std::vector<double> shares(size(rng));
        for (double& s : shares) s = uniform(rng);
        const WealthReport report = lorenz_gini(shares);
        CHECK(std::abs(report.gini - gini_from_lorenz(report.lorenz)) <= 1e-10);

        // Permutation invariance.
        std::shuffle(shares.begin(), shares.end(), rng);
        CHECK(lorenz_gini(shares).gini == doctest::Approx(report.gini).epsilon(1e-12));
    }
}
