#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pib/fitting.hpp"

namespace pib {

/// Leading-digit counts over a token stream. `skipped` tallies tokens with no
/// leading significant digit (zeros, non-numerics).
struct DigitStats {
    std::array<std::int64_t, 9> counts{};  // index d-1 for digits 1..9
    std::int64_t skipped = 0;

    std::int64_t total() const;
    void merge(const DigitStats& other);
};

struct BenfordReport {
    std::array<double, 9> observed_prop;
    std::array<double, 9> expected_prop;
    GoodnessOfFit gof;
    std::string conformity;  // MAD label: close / acceptable / marginal / nonconformity
};

// First nonzero decimal digit of a numeric token, scanning the text directly
// (never through a float) after stripping sign, currency symbols, commas and
// leading zeros. nullopt for zero, empty or non-numeric tokens.
std::optional<int> leading_digit(std::string_view token);

DigitStats digit_histogram(const std::vector<std::string>& tokens);

// Expected count per digit under the log-share law with N = 9:
// expected[d] = total · log10(1 + 1/d).
std::array<double, 9> benford_expected(std::int64_t total);

BenfordReport benford_report(const DigitStats& stats);

}  // namespace pib
