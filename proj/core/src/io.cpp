#include "pib/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pib/benford.hpp"
#include "pib/distribution.hpp"
#include "pib/inequality.hpp"
#include "pib/oracle.hpp"
#include "pib/sampler.hpp"

namespace pib {
namespace {

using nlohmann::json;

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::vector<std::string> ingest_plain(std::istream& in) {
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::vector<std::string> ingest_csv(std::istream& in, const std::optional<std::string>& column) {
    std::string line;
    if (!std::getline(in, line)) return {};
    const std::vector<std::string> header = split_csv_row(line);

    std::size_t index = 0;
    if (header.size() > 1) {
        if (!column) {
            throw std::invalid_argument("csv input with multiple columns requires --column");
        }
        bool found = false;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == *column) {
                index = i;
                found = true;
                break;
            }
        }
        if (!found) {
            try {
                index = static_cast<std::size_t>(std::stoul(*column));
            } catch (const std::exception&) {
                throw std::invalid_argument("csv column not found: " + *column);
            }
            if (index >= header.size()) {
                throw std::invalid_argument("csv column index out of range: " + *column);
            }
        }
    }

    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> row = split_csv_row(line);
        // Short rows yield an empty token that becomes "skipped" downstream.
        tokens.push_back(index < row.size() ? row[index] : std::string());
    }
    return tokens;
}

std::vector<std::string> ingest_json(std::istream& in) {
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json input not parsable: ") + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument("json input must be an array");
    }
    std::vector<std::string> tokens;
    for (const json& item : doc) {
        if (item.is_string()) {
            tokens.push_back(item.get<std::string>());
        } else {
            tokens.push_back(item.dump());
        }
    }
    return tokens;
}

enum class OutMode { table, csv, json_out };

OutMode parse_out(const std::string& s) {
    if (s == "table") return OutMode::table;
    if (s == "csv") return OutMode::csv;
    if (s == "json") return OutMode::json_out;
    throw std::invalid_argument("unknown --out mode: " + s);
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json gof_json(const GoodnessOfFit& gof) {
    return json{{"chi_square", gof.chi_square},
                {"dof", gof.dof},
                {"p_value", gof.p_value},
                {"g_statistic", gof.g_statistic},
                {"mad", gof.mad}};
}

int round_half_up_percent(double fraction) {
    return static_cast<int>(std::floor(fraction * 100.0 + 0.5));
}

void emit_dist(const ShareDistribution& dist, OutMode mode, std::ostream& out) {
    switch (mode) {
        case OutMode::table:
            out << "n  rho(n)\n";
            for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
                out << (i + 1) << "  " << fmt17(dist.probabilities[i]) << "\n";
            }
            break;
        case OutMode::csv:
            out << "n,rho\n";
            for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
                out << (i + 1) << "," << fmt17(dist.probabilities[i]) << "\n";
            }
            break;
        case OutMode::json_out:
            out << json{{"n_boxes", dist.n_boxes},
                        {"alpha", dist.alpha},
                        {"kind", dist.kind == ShareKind::plain ? "plain" : "alpha"},
                        {"probabilities", dist.probabilities}}
                       .dump(2)
                << "\n";
            break;
    }
}

void emit_histogram(const Histogram& hist, OutMode mode, std::ostream& out) {
    if (mode == OutMode::json_out) {
        json bins = json::object();
        for (const auto& [k, c] : hist.bins) bins[std::to_string(k)] = c;
        out << json{{"total", hist.total_observations}, {"bins", bins}}.dump(2) << "\n";
        return;
    }
    out << "k,count\n";
    for (const auto& [k, c] : hist.bins) out << k << "," << c << "\n";
}

int run_dist(std::int64_t boxes, double alpha, OutMode mode, std::ostream& out) {
    emit_dist(rho_table(boxes, alpha), mode, out);
    return 0;
}

int run_benford(const std::vector<std::string>& tokens, OutMode mode, std::ostream& out) {
    const DigitStats stats = digit_histogram(tokens);
    const BenfordReport report = benford_report(stats);
    if (mode == OutMode::json_out) {
        out << json{{"total", stats.total()},
                    {"skipped", stats.skipped},
                    {"observed", report.observed_prop},
                    {"expected", report.expected_prop},
                    {"gof", gof_json(report.gof)},
                    {"conformity", report.conformity}}
                   .dump(2)
            << "\n";
        return 0;
    }
    if (mode == OutMode::csv) {
        out << "digit,observed,expected\n";
        for (int d = 1; d <= 9; ++d) {
            out << d << "," << fmt17(report.observed_prop[d - 1]) << ","
                << fmt17(report.expected_prop[d - 1]) << "\n";
        }
    } else {
        out << "digit  observed  benford\n";
        for (int d = 1; d <= 9; ++d) {
            std::ostringstream row;
            row.precision(5);
            row << std::fixed << d << "      " << report.observed_prop[d - 1] << "   "
                << report.expected_prop[d - 1];
            out << row.str() << "\n";
        }
    }
    out << "analyzed " << stats.total() << ", skipped " << stats.skipped << "\n";
    out << "chi_square " << report.gof.chi_square << " (dof " << report.gof.dof << ", p "
        << report.gof.p_value << "), G " << report.gof.g_statistic << ", MAD " << report.gof.mad
        << " -> " << report.conformity << "\n";
    return 0;
}

int run_wealth(std::int64_t groups, bool rank_cumulative, std::int64_t boxes, OutMode mode,
               std::ostream& out) {
    std::vector<double> shares;
    if (rank_cumulative) {
        // Alternative reading: cumulate ranks of a fixed population of
        // `boxes` boxes, one slice of boxes/groups ranks per group. This
        // does NOT reproduce the rebinned quantile numbers.
        if (boxes < groups) {
            throw std::invalid_argument("wealth: --boxes must be >= --groups");
        }
        double prev = 0.0;
        for (std::int64_t g = 1; g <= groups; ++g) {
            const std::int64_t k = g * boxes / groups;
            const double cum = cumulative_share(k, boxes);
            shares.push_back(cum - prev);
            prev = cum;
        }
    } else {
        shares = quantile_shares(groups);
    }
    const WealthReport report = lorenz_gini(shares);
    if (mode == OutMode::json_out) {
        json lorenz = json::array();
        for (const auto& [pop, wealth] : report.lorenz) lorenz.push_back({pop, wealth});
        out << json{{"n_groups", report.n_groups},
                    {"shares", report.shares},
                    {"lorenz", lorenz},
                    {"gini", report.gini}}
                   .dump(2)
            << "\n";
        return 0;
    }
    if (mode == OutMode::table) {
        out << "rank  share\n";
        for (std::size_t i = 0; i < report.shares.size(); ++i) {
            out << (i + 1) << "  " << fmt17(report.shares[i]) << "\n";
        }
        out << "gini " << fmt17(report.gini) << "\n";
        return 0;
    }
    // Two-column Lorenz CSV, plot-ready.
    out << "population_fraction,wealth_fraction\n";
    for (const auto& [pop, wealth] : report.lorenz) {
        out << fmt17(pop) << "," << fmt17(wealth) << "\n";
    }
    out << "# gini," << fmt17(report.gini) << "\n";
    return 0;
}

int run_poll(const PollTable& table, std::int64_t voters, OutMode mode, std::ostream& out) {
    const PollReport report = poll_report(table, voters);
    if (mode == OutMode::json_out) {
        json comps = json::array();
        for (const PollComparison& c : report.comparisons) {
            comps.push_back({{"label", c.label},
                             {"proportions", c.proportions},
                             {"rounding_residue", c.rounding_residue},
                             {"gof", gof_json(c.gof)}});
        }
        out << json{{"theoretical", report.theoretical_prop}, {"comparisons", comps}}.dump(2)
            << "\n";
        return 0;
    }
    const char sep = (mode == OutMode::csv) ? ',' : ' ';
    if (mode == OutMode::csv) out << "label,chi_square,p_value,mad,rounding_residue\n";
    for (const PollComparison& c : report.comparisons) {
        out << c.label << sep << c.gof.chi_square << sep << c.gof.p_value << sep << c.gof.mad
            << sep << c.rounding_residue;
        if (mode == OutMode::table && std::abs(c.rounding_residue) > 1e-9) {
            out << "  (column sum off by " << c.rounding_residue << "%, renormalized)";
        }
        out << "\n";
    }
    if (mode == OutMode::table) {
        out << "theoretical";
        for (double t : report.theoretical_prop) out << " " << round_half_up_percent(t) << "%";
        out << "\n";
    }
    return 0;
}

PollTable poll_table_from_csv(std::istream& in) {
    // Rows are choices: label,poll1,poll2,...; header row required.
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("poll csv: empty input");
    }
    const std::size_t n_polls = split_csv_row(line).size() - 1;
    PollTable table;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_row(line);
        if (fields.size() != n_polls + 1) {
            throw std::invalid_argument("poll csv: ragged row: " + line);
        }
        table.choice_labels.push_back(fields[0]);
        std::vector<double> row;
        for (std::size_t i = 1; i < fields.size(); ++i) row.push_back(std::stod(fields[i]));
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw std::invalid_argument("poll csv: no choice rows");
    }
    table.columns.assign(n_polls, std::vector<double>(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) {
        for (std::size_t p = 0; p < n_polls; ++p) table.columns[p][c] = rows[c][p];
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
        double sum = 0.0;
        for (double v : rows[c]) sum += v;
        table.average.push_back(sum / static_cast<double>(n_polls));
    }
    const ShareDistribution theo = rho_table(static_cast<std::int64_t>(rows.size()));
    for (double p : theo.probabilities) table.theoretical.push_back(p * 100.0);
    return table;
}

}  // namespace

std::vector<std::string> ingest_numbers(std::istream& source, InputFormat format,
                                        const std::optional<std::string>& column) {
    switch (format) {
        case InputFormat::plain:
            return ingest_plain(source);
        case InputFormat::csv:
            return ingest_csv(source, column);
        case InputFormat::json:
            return ingest_json(source);
    }
    throw std::invalid_argument("ingest_numbers: unknown format");
}

std::vector<std::string> ingest_numbers(const std::string& path, InputFormat format,
                                        const std::optional<std::string>& column) {
    if (path == "-") {
        return ingest_numbers(std::cin, format, column);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open input file: " + path);
    }
    return ingest_numbers(in, format, column);
}

PollTable builtin_poll_table() {
    PollTable table;
    table.choice_labels = {"A", "B", "C"};
    const double a[8] = {55, 39, 47, 64, 46, 56, 65, 47};
    const double b[8] = {32, 38, 31, 20, 37, 30, 19, 33};
    const double c[8] = {13, 23, 22, 17, 17, 15, 16, 19};
    for (int p = 0; p < 8; ++p) table.columns.push_back({a[p], b[p], c[p]});
    double sa = 0, sb = 0, sc = 0;
    for (int p = 0; p < 8; ++p) {
        sa += a[p];
        sb += b[p];
        sc += c[p];
    }
    table.average = {sa / 8.0, sb / 8.0, sc / 8.0};
    table.theoretical = {50, 29, 21};
    return table;
}

PollReport poll_report(const PollTable& table, std::int64_t voters) {
    const std::size_t n_choices = table.choice_labels.size();
    for (const auto& col : table.columns) {
        if (col.size() != n_choices) {
            throw std::invalid_argument("poll_report: column length mismatch");
        }
    }
    // Compare against the exact share law, not the rounded display column.
    const ShareDistribution theo = rho_table(static_cast<std::int64_t>(n_choices));

    PollReport report;
    report.theoretical_prop = theo.probabilities;

    auto compare = [&](const std::string& label, const std::vector<double>& percents) {
        PollComparison comp;
        comp.label = label;
        double sum = 0.0;
        for (double v : percents) sum += v;
        comp.rounding_residue = sum - 100.0;
        std::vector<double> observed_counts, expected_counts;
        for (std::size_t i = 0; i < percents.size(); ++i) {
            const double prop = percents[i] / sum;
            comp.proportions.push_back(prop);
            observed_counts.push_back(prop * static_cast<double>(voters));
            expected_counts.push_back(theo.probabilities[i] * static_cast<double>(voters));
        }
        comp.gof = chi_square_test(observed_counts, expected_counts);
        report.comparisons.push_back(std::move(comp));
    };

    for (std::size_t p = 0; p < table.columns.size(); ++p) {
        compare("poll " + std::to_string(p + 1), table.columns[p]);
    }
    compare("average", table.average);
    return report;
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"particles-in-boxes maximum-entropy toolkit"};
    app.require_subcommand(1);

    std::int64_t boxes = 9, particles = 0, trials = 1, groups = 10, voters = 1500;
    std::int64_t cap = 10'000'000;
    std::int64_t rc_boxes = 1'000'000;
    double alpha = 1.0;
    std::uint64_t seed = 0;
    int workers = 1;
    bool rank_cumulative = false;
    std::string input, format = "plain", out_mode_s = "table", column;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_mode_s, "output mode: table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    CLI::App* dist = app.add_subcommand("dist", "emit the normalized share table");
    dist->add_option("--boxes", boxes, "number of boxes N")->required();
    dist->add_option("--alpha", alpha, "power-law exponent (default 1)");
    add_out(dist);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list every configuration");
    enumerate->add_option("--boxes", boxes)->required();
    enumerate->add_option("--particles", particles)->required();
    enumerate->add_option("--cap", cap, "refuse above this many configurations");
    add_out(enumerate);

    CLI::App* marginal = app.add_subcommand("marginal", "exact single-box occupancy distribution");
    marginal->add_option("--boxes", boxes)->required();
    marginal->add_option("--particles", particles)->required();
    add_out(marginal);

    CLI::App* deviation = app.add_subcommand("deviation", "exact marginal vs the share law");
    deviation->add_option("--boxes", boxes)->required();
    deviation->add_option("--particles", particles)->required();
    add_out(deviation);

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo box-1 occupancy histogram");
    sample->add_option("--boxes", boxes)->required();
    sample->add_option("--particles", particles)->required();
    sample->add_option("--trials", trials)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--workers", workers);
    add_out(sample);

    CLI::App* benford = app.add_subcommand("benford", "leading-digit conformance analysis");
    benford->add_option("--input", input, "file path or - for stdin")->required();
    benford->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));
    benford->add_option("--column", column, "csv column name or index");
    add_out(benford);

    CLI::App* wealth = app.add_subcommand("wealth", "quantile shares, Lorenz curve and Gini");
    wealth->add_option("--groups", groups)->required();
    wealth->add_flag("--rank-cumulative", rank_cumulative,
                     "cumulate ranks within --boxes instead of rebinning");
    wealth->add_option("--boxes", rc_boxes, "population size for --rank-cumulative");
    add_out(wealth);

    CLI::App* fit = app.add_subcommand("fit", "maximum-likelihood power-law exponent");
    fit->add_option("--input", input, "two-column csv: n,count")->required();
    fit->add_option("--boxes", boxes)->required();
    add_out(fit);

    CLI::App* poll = app.add_subcommand("poll", "poll table vs the theoretical column");
    poll->add_option("--input", input, "poll csv (default: builtin table)");
    poll->add_option("--voters", voters, "voters per poll for chi-square");
    add_out(poll);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        const OutMode mode = parse_out(out_mode_s);
        if (dist->parsed()) {
            return run_dist(boxes, alpha, mode, out);
        }
        if (enumerate->parsed()) {
            if (mode == OutMode::json_out) {
                json arr = json::array();
                enumerate_configurations(BoxEnsemble(boxes, particles),
                                         [&](const Configuration& c) { arr.push_back(c); }, cap);
                out << arr.dump() << "\n";
            } else {
                enumerate_configurations(
                    BoxEnsemble(boxes, particles),
                    [&](const Configuration& c) {
                        for (std::size_t i = 0; i < c.size(); ++i) {
                            out << (i ? "," : "") << c[i];
                        }
                        out << "\n";
                    },
                    cap);
            }
            return 0;
        }
        if (marginal->parsed()) {
            const OccupancyDistribution m = exact_marginal(BoxEnsemble(boxes, particles));
            if (mode == OutMode::json_out) {
                out << json{{"n_boxes", m.n_boxes},
                            {"n_particles", m.n_particles},
                            {"prob", m.prob}}
                           .dump(2)
                    << "\n";
            } else {
                out << "k,prob\n";
                for (std::size_t k = 0; k < m.prob.size(); ++k) {
                    out << k << "," << fmt17(m.prob[k]) << "\n";
                }
            }
            return 0;
        }
        if (deviation->parsed()) {
            const DeviationReport rep = deviation_report(BoxEnsemble(boxes, particles));
            if (mode == OutMode::json_out) {
                json rows = json::array();
                for (const DeviationRow& r : rep.rows) {
                    rows.push_back({{"n", r.n},
                                    {"exact_conditional", r.exact_conditional},
                                    {"eq2_renormalized", r.eq2_renormalized}});
                }
                out << json{{"rows", rows}, {"total_variation", rep.total_variation}}.dump(2)
                    << "\n";
            } else {
                out << "n,exact_conditional,eq2_renormalized\n";
                for (const DeviationRow& r : rep.rows) {
                    out << r.n << "," << fmt17(r.exact_conditional) << ","
                        << fmt17(r.eq2_renormalized) << "\n";
                }
                out << "# total_variation," << fmt17(rep.total_variation) << "\n";
            }
            return 0;
        }
        if (sample->parsed()) {
            const Histogram hist =
                occupancy_histogram(BoxEnsemble(boxes, particles), trials, seed, workers);
            emit_histogram(hist, mode, out);
            return 0;
        }
        if (benford->parsed()) {
            InputFormat fmt = format == "csv"    ? InputFormat::csv
                              : format == "json" ? InputFormat::json
                                                 : InputFormat::plain;
            const auto tokens = ingest_numbers(
                input, fmt, column.empty() ? std::nullopt : std::optional<std::string>(column));
            return run_benford(tokens, mode, out);
        }
        if (wealth->parsed()) {
            return run_wealth(groups, rank_cumulative, rc_boxes, mode, out);
        }
        if (fit->parsed()) {
            std::vector<double> counts(static_cast<std::size_t>(boxes), 0.0);
            std::ifstream in(input);
            if (!in) throw std::ios_base::failure("cannot open input file: " + input);
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const auto fields = split_csv_row(line);
                if (fields.size() < 2) {
                    throw std::invalid_argument("fit csv: expected n,count per row");
                }
                const std::int64_t n = std::stoll(fields[0]);
                if (n < 1 || n > boxes) {
                    throw std::invalid_argument("fit csv: n out of range: " + fields[0]);
                }
                counts[static_cast<std::size_t>(n - 1)] += std::stod(fields[1]);
            }
            const AlphaFit result = fit_alpha(counts, boxes);
            if (mode == OutMode::json_out) {
                out << json{{"alpha_hat", result.alpha_hat},
                            {"log_likelihood", result.log_likelihood},
                            {"std_error", result.std_error},
                            {"iterations", result.iterations}}
                           .dump(2)
                    << "\n";
            } else {
                out << "alpha_hat " << fmt17(result.alpha_hat) << "\n"
                    << "std_error " << fmt17(result.std_error) << "\n"
                    << "log_likelihood " << fmt17(result.log_likelihood) << "\n";
            }
            return 0;
        }
        if (poll->parsed()) {
            PollTable table;
            if (input.empty()) {
                table = builtin_poll_table();
            } else {
                std::ifstream in(input);
                if (!in) throw std::ios_base::failure("cannot open input file: " + input);
                table = poll_table_from_csv(in);
            }
            return run_poll(table, voters, mode, out);
        }
    } catch (const std::ios_base::failure& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace pib
