// Command-line front end: exact enumeration and q-series checks for the
// basic-module combinatorics of C_n^(1).
//
// Exit codes: 0 all checks pass, 1 a mathematical mismatch, 2 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "rrcensus/census.hpp"
#include "rrcensus/leading_terms.hpp"
#include "rrcensus/qseries.hpp"
#include "rrcensus/root_system.hpp"
#include "rrcensus/version.hpp"

namespace {

using rrcensus::Int;
using rrcensus::Rank;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

constexpr const char* crlf = "\r\n";

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

struct OutputSink {
    std::string path; // empty = stdout

    int emit(const std::string& payload) const
    {
        if (path.empty()) {
            std::cout << payload;
            return exit_ok;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << path << "' for writing\n";
            return exit_usage;
        }
        out << payload;
        out.close();
        if (!out) {
            std::cerr << "error: failed while writing '" << path << "'\n";
            return exit_usage;
        }
        return exit_ok;
    }
};

// ---------------------------------------------------------------- dims

int run_dims(int n, const std::string& format, const OutputSink& sink)
{
    const Rank rank(n);
    const Int d2 = rrcensus::weyl_dim(rank, rrcensus::weight_2theta(rank));
    const Int d3 = rrcensus::weyl_dim(rank, rrcensus::weight_3theta(rank));
    const Int d3a = rrcensus::weyl_dim(rank, rrcensus::weight_3theta_minus_alpha1(rank));
    const Int total = d2 + d3 + d3a;
    const Int expected = rrcensus::q3_expected(rank);
    const bool match = total == expected;

    std::string payload;
    if (format == "json") {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["n"] = n;
        j["dim_2theta"] = d2.str();
        j["dim_3theta"] = d3.str();
        j["dim_3theta_minus_alpha1"] = d3a.str();
        j["q3_total"] = total.str();
        j["expected"] = expected.str();
        j["match"] = match;
        payload = j.dump(2) + "\n";
    } else if (format == "csv") {
        payload += fmt::format("quantity,value{}", crlf);
        payload += fmt::format("n,{}{}", n, crlf);
        payload += fmt::format("dim_2theta,{}{}", d2.str(), crlf);
        payload += fmt::format("dim_3theta,{}{}", d3.str(), crlf);
        payload += fmt::format("dim_3theta_minus_alpha1,{}{}", d3a.str(), crlf);
        payload += fmt::format("q3_total,{}{}", total.str(), crlf);
        payload += fmt::format("expected,{}{}", expected.str(), crlf);
        payload += fmt::format("match,{}{}", match ? "true" : "false", crlf);
    } else {
        payload += fmt::format("{:<26}{}\n", "n", n);
        payload += fmt::format("{:<26}{}\n", "dim L(2theta)", d2.str());
        payload += fmt::format("{:<26}{}\n", "dim L(3theta)", d3.str());
        payload += fmt::format("{:<26}{}\n", "dim L(3theta - alpha_1)", d3a.str());
        payload += fmt::format("{:<26}{}\n", "dim Q_3", total.str());
        payload += fmt::format("{:<26}{}\n", "2n C(2n+4,5)", expected.str());
        payload += fmt::format("{:<26}{}\n", "match", yes_no(match));
    }
    const int rc = sink.emit(payload);
    if (rc != exit_ok)
        return rc;
    return match ? exit_ok : exit_mismatch;
}

// ------------------------------------------------------- leading-terms

struct PatternRow {
    std::string type;
    rrcensus::Cell first;
    rrcensus::Cell second;
};

int run_leading_terms(int n, const std::string& format, const OutputSink& sink)
{
    const Rank rank(n);
    const auto cells = rrcensus::all_cells(rank);

    std::vector<PatternRow> rows;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i; j < cells.size(); ++j)
            if (rrcensus::same_degree_pattern(cells[i], cells[j]))
                rows.push_back({"same_degree", cells[i], cells[j]});
    for (const auto& lower : cells)
        for (const auto& higher : cells)
            if (rrcensus::adjacent_degree_pattern(lower, higher))
                rows.push_back({"adjacent_degree", lower, higher});

    Int same = 0, adjacent = 0;
    for (const auto& row : rows)
        (row.type == "same_degree" ? same : adjacent) += 1;

    std::string payload;
    if (format == "json") {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["n"] = n;
        j["counts"] = {{"same_degree", same.str()}, {"adjacent_degree", adjacent.str()}};
        nlohmann::json patterns = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json p;
            p["type"] = row.type;
            p["a1"] = row.first.col;
            p["b1"] = row.first.row;
            p["a2"] = row.second.col;
            p["b2"] = row.second.row;
            p["cell1"] = rrcensus::cell_label(rank, row.first);
            p["cell2"] = rrcensus::cell_label(rank, row.second);
            patterns.push_back(std::move(p));
        }
        j["patterns"] = std::move(patterns);
        payload = j.dump(2) + "\n";
    } else if (format == "csv") {
        payload += fmt::format("type,a1,b1,a2,b2,cell1,cell2{}", crlf);
        for (const auto& row : rows)
            payload += fmt::format("{},{},{},{},{},{},{}{}", row.type, row.first.col,
                                   row.first.row, row.second.col, row.second.row,
                                   rrcensus::cell_label(rank, row.first),
                                   rrcensus::cell_label(rank, row.second), crlf);
    } else {
        payload += fmt::format("leading-term patterns for n = {}\n", n);
        for (const auto& row : rows)
            payload += fmt::format("{:<16} {:<12} {}\n", row.type,
                                   rrcensus::cell_label(rank, row.first),
                                   rrcensus::cell_label(rank, row.second));
        payload += fmt::format("same_degree: {}   adjacent_degree: {}\n", same.str(), adjacent.str());
    }
    const int rc = sink.emit(payload);
    if (rc != exit_ok)
        return rc;

    const bool counts_match = same == rrcensus::count_leading_terms(rank, 0) &&
                              adjacent == rrcensus::count_leading_terms(rank, 1);
    return counts_match ? exit_ok : exit_mismatch;
}

// --------------------------------------------------------------- census

std::optional<Int> family_value(const rrcensus::CensusReport& report, const std::string& key)
{
    for (const auto& [name, value] : report.per_family)
        if (name == key)
            return value;
    return std::nullopt;
}

std::optional<Int> subcase_value(const rrcensus::CensusReport& report, const std::string& key)
{
    for (const auto& [name, value] : report.per_subcase)
        if (name == key)
            return value;
    return std::nullopt;
}

std::string census_csv(const std::vector<rrcensus::CensusReport>& reports)
{
    static const std::vector<std::string> families = {"I", "II", "IIIa", "IIIb"};
    static const std::vector<std::string> subcases = {"I1", "I2", "I3", "I4", "I5"};
    std::string payload = "n,m,total,expected,match";
    for (const auto& f : families)
        payload += ",fam_" + f;
    for (const auto& s : subcases)
        payload += ",sub_" + s;
    payload += crlf;
    for (const auto& report : reports) {
        payload += fmt::format("{},{},{},{},{}", report.n, report.m, report.total.str(),
                               report.expected.str(), report.match ? "true" : "false");
        for (const auto& f : families) {
            const auto value = family_value(report, f);
            payload += ",";
            payload += value ? value->str() : "";
        }
        for (const auto& s : subcases) {
            const auto value = subcase_value(report, s);
            payload += ",";
            payload += value ? value->str() : "";
        }
        payload += crlf;
    }
    return payload;
}

int run_census(int n, const std::vector<int>& degrees, unsigned threads,
               const std::string& format, const OutputSink& sink)
{
    const Rank rank(n);
    std::vector<rrcensus::CensusReport> reports;
    reports.reserve(degrees.size());
    for (int m : degrees)
        reports.push_back(rrcensus::census_degree(rank, m, threads));

    bool all_match = true;
    for (const auto& report : reports)
        all_match = all_match && report.match;

    std::string payload;
    if (format == "json") {
        if (reports.size() == 1) {
            payload = rrcensus::census_report_to_json(reports.front(), 2) + "\n";
        } else {
            nlohmann::json j;
            j["schema_version"] = 1;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& report : reports)
                arr.push_back(nlohmann::json::parse(rrcensus::census_report_to_json(report, 0)));
            j["reports"] = std::move(arr);
            j["all_match"] = all_match;
            payload = j.dump(2) + "\n";
        }
    } else if (format == "csv") {
        payload = census_csv(reports);
    } else {
        for (const auto& report : reports) {
            payload += fmt::format("census n={} m={}: total {} expected {} match {}", report.n,
                                   report.m, report.total.str(), report.expected.str(),
                                   yes_no(report.match));
            std::string detail;
            for (const auto& [name, value] : report.per_family)
                detail += fmt::format("{}{}={}", detail.empty() ? "" : " ", name, value.str());
            for (const auto& [name, value] : report.per_subcase)
                detail += fmt::format(" {}={}", name, value.str());
            payload += fmt::format("  ({})\n", detail);
        }
    }
    const int rc = sink.emit(payload);
    if (rc != exit_ok)
        return rc;
    return all_match ? exit_ok : exit_mismatch;
}

// ------------------------------------------------------------ verify-rr

int run_verify_rr(int n, int n_max, unsigned threads, const std::string& format,
                  const OutputSink& sink)
{
    const Rank rank(n);
    const auto report = rrcensus::identity_report(rank, n_max, threads);

    std::string payload;
    if (format == "json") {
        payload = rrcensus::identity_report_to_json(report, 2) + "\n";
    } else if (format == "csv") {
        payload += fmt::format("N,product,congruence,rr,equal{}", crlf);
        for (const auto& row : report.rows)
            payload += fmt::format("{},{},{},{},{}{}", row.N, row.product.str(),
                                   row.congruence.str(), row.rr.str(),
                                   row.equal ? "true" : "false", crlf);
    } else {
        payload += fmt::format("{:>4} {:>14} {:>14} {:>14}  {}\n", "N", "product", "congruence",
                               "rr", "equal");
        for (const auto& row : report.rows)
            payload += fmt::format("{:>4} {:>14} {:>14} {:>14}  {}\n", row.N, row.product.str(),
                                   row.congruence.str(), row.rr.str(), yes_no(row.equal));
        payload += fmt::format("all equal: {} (n={}, N <= {})\n", yes_no(report.all_equal),
                               report.n, report.n_max);
    }
    const int rc = sink.emit(payload);
    if (rc != exit_ok)
        return rc;
    return report.all_equal ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------- main

std::vector<int> parse_degree_range(const std::string& text)
{
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw CLI::ValidationError("--m-range", "expected A..B, got '" + text + "'");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(text.substr(0, sep));
        hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--m-range", "expected integers A..B, got '" + text + "'");
    }
    if (lo > hi)
        throw CLI::ValidationError("--m-range", "range is empty");
    if (hi > -3)
        throw CLI::ValidationError("--m-range", "census degrees must be <= -3");
    std::vector<int> degrees;
    for (int m = lo; m <= hi; ++m)
        degrees.push_back(m);
    return degrees;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact enumeration and q-series checks for the basic module of C_n^(1)"};
    app.set_version_flag("--version", RRCENSUS_VERSION);
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"json", "csv", "text"};

    int n = 2;
    std::string format = "text";
    std::string out_path;
    unsigned threads = 0;
    auto add_common = [&](CLI::App* cmd, bool with_threads) {
        cmd->add_option("--n", n, "rank of C_n (n >= 2)")->required()->check(CLI::Range(2, 1000));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->default_val("text");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        if (with_threads)
            cmd->add_option("--threads", threads, "worker threads (0 = all cores)")
                ->envname("RRCENSUS_THREADS")
                ->default_val(0);
    };

    auto* dims = app.add_subcommand("dims", "Weyl dimensions of Q_3 and the closed form");
    add_common(dims, false);

    auto* lt = app.add_subcommand("leading-terms", "leading-term cell patterns and counts");
    add_common(lt, false);

    auto* census = app.add_subcommand("census", "embedding census at degree m (or a range)");
    add_common(census, true);
    int census_m = 0;
    std::string census_range;
    auto* m_opt = census->add_option("--m", census_m, "degree m <= -3")->check(CLI::Range(-1000000, -3));
    auto* range_opt = census->add_option("--m-range", census_range, "degree range A..B with B <= -3");
    m_opt->excludes(range_opt);
    range_opt->excludes(m_opt);

    auto* verify = app.add_subcommand("verify-rr", "verify the partition identity up to q^max");
    add_common(verify, true);
    int n_max = 40;
    verify->add_option("--max", n_max, "truncation order (>= 1)")
        ->default_val(40)
        ->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const OutputSink sink{out_path};
    try {
        if (app.got_subcommand(dims))
            return run_dims(n, format, sink);
        if (app.got_subcommand(lt))
            return run_leading_terms(n, format, sink);
        if (app.got_subcommand(census)) {
            std::vector<int> degrees;
            if (range_opt->count() > 0)
                degrees = parse_degree_range(census_range);
            else if (m_opt->count() > 0)
                degrees.push_back(census_m);
            else {
                std::cerr << "error: census needs --m or --m-range\n";
                return exit_usage;
            }
            return run_census(n, degrees, threads, format, sink);
        }
        if (app.got_subcommand(verify))
            return run_verify_rr(n, n_max, threads, format, sink);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
