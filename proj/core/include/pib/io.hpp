#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pib/fitting.hpp"

namespace pib {

enum class InputFormat { plain, csv, json };

// Raw textual tokens from a file or stream, without numeric conversion.
// For csv, `column` selects by header name or zero-based index and is
// required when the file has more than one column. Malformed rows flow
// through as tokens and become "skipped" downstream.
std::vector<std::string> ingest_numbers(std::istream& source, InputFormat format,
                                        const std::optional<std::string>& column = std::nullopt);
std::vector<std::string> ingest_numbers(const std::string& path, InputFormat format,
                                        const std::optional<std::string>& column = std::nullopt);

/// The eight-poll three-choice table with per-choice averages and the
/// theoretical column, percentages as published.
struct PollTable {
    std::vector<std::string> choice_labels;
    std::vector<std::vector<double>> columns;  // columns[p][c]: poll p, choice c
    std::vector<double> average;               // per choice
    std::vector<double> theoretical;           // per choice
};

struct PollComparison {
    std::string label;                 // "poll 1".."poll 8" or "average"
    std::vector<double> proportions;   // renormalized
    double rounding_residue;           // column sum - 100 before renormalization
    GoodnessOfFit gof;
};

struct PollReport {
    std::vector<double> theoretical_prop;
    std::vector<PollComparison> comparisons;
};

PollTable builtin_poll_table();

// Per-poll and average-row chi-square/MAD against the exact log-share
// theoretical column, with percentages converted to counts of `voters`.
PollReport poll_report(const PollTable& table, std::int64_t voters = 1500);

// Command-line surface. Returns 0 on success, 1 on parameter error, 2 on
// I/O error; diagnostics go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pib
