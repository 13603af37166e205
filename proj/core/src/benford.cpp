#include "pib/benford.hpp"

#include <cmath>
#include <stdexcept>

namespace pib {
namespace {

// UTF-8 currency prefixes accepted in front of a number.
constexpr std::string_view kCurrency[] = {"$", "€", "£", "¥"};

void strip_prefixes(std::string_view& s) {
    bool stripped = true;
    while (stripped && !s.empty()) {
        stripped = false;
        if (s.front() == '+' || s.front() == '-') {
            s.remove_prefix(1);
            stripped = true;
            continue;
        }
        for (std::string_view cur : kCurrency) {
            if (s.substr(0, cur.size()) == cur) {
                s.remove_prefix(cur.size());
                stripped = true;
                break;
            }
        }
    }
}

}  // namespace

std::optional<int> leading_digit(std::string_view token) {
    // Trim surrounding whitespace.
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
        token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
        token.remove_suffix(1);
    }
    strip_prefixes(token);
    if (token.empty()) return std::nullopt;

    // Scan the text directly: [0-9,]* ('.' [0-9]*)? ([eE] sign? digits)?
    // The first nonzero mantissa digit is the answer; any other character
    // rejects the token.
    int digit = 0;
    bool saw_digit = false;
    bool saw_dot = false;
    std::size_t i = 0;
    for (; i < token.size(); ++i) {
        const char c = token[i];
        if (c >= '0' && c <= '9') {
            saw_digit = true;
            if (digit == 0 && c != '0') digit = c - '0';
        } else if (c == ',' && !saw_dot) {
            continue;
        } else if (c == '.' && !saw_dot) {
            saw_dot = true;
        } else if ((c == 'e' || c == 'E') && saw_digit) {
            break;
        } else {
            return std::nullopt;
        }
    }
    if (i < token.size()) {  // validate the exponent tail
        ++i;
        if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
        if (i == token.size()) return std::nullopt;
        for (; i < token.size(); ++i) {
            if (token[i] < '0' || token[i] > '9') return std::nullopt;
        }
    }
    if (!saw_digit || digit == 0) return std::nullopt;  // non-numeric or zero
    return digit;
}

std::int64_t DigitStats::total() const {
    std::int64_t t = 0;
    for (std::int64_t c : counts) t += c;
    return t;
}

void DigitStats::merge(const DigitStats& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    skipped += other.skipped;
}

DigitStats digit_histogram(const std::vector<std::string>& tokens) {
    DigitStats stats;
    for (const std::string& token : tokens) {
        if (auto d = leading_digit(token)) {
            ++stats.counts[static_cast<std::size_t>(*d - 1)];
        } else {
            ++stats.skipped;
        }
    }
    return stats;
}

std::array<double, 9> benford_expected(std::int64_t total) {
    if (total < 1) {
        throw std::invalid_argument("benford_expected: total must be >= 1");
    }
    std::array<double, 9> expected;
    for (int d = 1; d <= 9; ++d) {
        expected[static_cast<std::size_t>(d - 1)] =
            static_cast<double>(total) * std::log10(1.0 + 1.0 / d);
    }
    return expected;
}

BenfordReport benford_report(const DigitStats& stats) {
    const std::int64_t total = stats.total();
    if (total < 1) {
        throw std::invalid_argument("benford_report: no digits counted");
    }
    const std::array<double, 9> expected = benford_expected(total);

    BenfordReport report;
    std::vector<double> obs(9), exp(9);
    for (std::size_t i = 0; i < 9; ++i) {
        obs[i] = static_cast<double>(stats.counts[i]);
        exp[i] = expected[i];
        report.observed_prop[i] = obs[i] / static_cast<double>(total);
        report.expected_prop[i] = exp[i] / static_cast<double>(total);
    }
    report.gof = chi_square_test(obs, exp);

    // Forensic-accounting MAD cutoffs.
    const double m = report.gof.mad;
    if (m <= 0.006) {
        report.conformity = "close conformity";
    } else if (m <= 0.012) {
        report.conformity = "acceptable conformity";
    } else if (m <= 0.015) {
        report.conformity = "marginal conformity";
    } else {
        report.conformity = "nonconformity";
    }
    return report;
}

}  // namespace pib
