#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef RRCENSUS_CLI_PATH
#error "RRCENSUS_CLI_PATH must point at the built binary"
#endif
#ifndef RRCENSUS_GOLDEN_DIR
#error "RRCENSUS_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "")
{
    const std::string command = env_prefix + RRCENSUS_CLI_PATH " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& name)
{
    std::ifstream in(std::string(RRCENSUS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t count_lines_crlf(const std::string& text)
{
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos; pos += 2)
        ++lines;
    return lines;
}

} // namespace

TEST_CASE("dims")
{
    const auto run = run_cli("dims --n 2");
    CHECK(run.exit_code == 0);
    CHECK(run.output == read_file("dims_n2.txt"));

    const auto json_run = run_cli("dims --n 3 --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.output);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["n"] == 3);
    CHECK(parsed["dim_2theta"] == "126");
    CHECK(parsed["dim_3theta"] == "462");
    CHECK(parsed["dim_3theta_minus_alpha1"] == "924");
    CHECK(parsed["q3_total"] == "1512");
    CHECK(parsed["expected"] == "1512");
    CHECK(parsed["match"] == true);
}

TEST_CASE("dims usage errors")
{
    CHECK(run_cli("dims --n 1").exit_code == 2);
    CHECK(run_cli("dims").exit_code == 2);
    CHECK(run_cli("dims --n nonsense").exit_code == 2);
}

TEST_CASE("leading-terms csv")
{
    const auto run = run_cli("leading-terms --n 2 --format csv");
    CHECK(run.exit_code == 0);
    CHECK(run.output == read_file("leading_terms_n2.csv"));
    // header + 35 same-degree + 35 adjacent-degree rows, CRLF terminated
    CHECK(count_lines_crlf(run.output) == 71);
    CHECK(run.output.rfind("type,a1,b1,a2,b2,cell1,cell2\r\n", 0) == 0);
}

TEST_CASE("leading-terms json round-trips")
{
    const auto run = run_cli("leading-terms --n 2 --format json");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["counts"]["same_degree"] == "35");
    CHECK(parsed["counts"]["adjacent_degree"] == "35");
    CHECK(parsed["patterns"].size() == 70);
    // serialization is stable under parse + dump
    CHECK(parsed.dump(2) + "\n" == run.output);
}

TEST_CASE("census json")
{
    const auto run = run_cli("census --n 2 --m -4 --format json");
    CHECK(run.exit_code == 0);
    CHECK(run.output == read_file("census_n2_m-4.json"));
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["total"] == "224");
    CHECK(parsed["match"] == true);
    CHECK(parsed["per_subcase"]["I4"] == "42");
}

TEST_CASE("census range csv")
{
    const auto run = run_cli("census --n 2 --m-range -8..-3 --format csv");
    CHECK(run.exit_code == 0);
    CHECK(run.output == read_file("census_n2_range.csv"));
    CHECK(count_lines_crlf(run.output) == 7);
}

TEST_CASE("census range json")
{
    const auto run = run_cli("census --n 2 --m-range -12..-3 --format json");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["all_match"] == true);
    REQUIRE(parsed["reports"].size() == 10);
    for (const auto& report : parsed["reports"]) {
        CHECK(report["match"] == true);
        CHECK(report["total"] == "224");
    }
}

TEST_CASE("census usage errors")
{
    CHECK(run_cli("census --n 2 --m -2").exit_code == 2);
    CHECK(run_cli("census --n 2").exit_code == 2);
    CHECK(run_cli("census --n 2 --m -4 --m-range -6..-4").exit_code == 2);
    CHECK(run_cli("census --n 2 --m-range -4..-6").exit_code == 2);
    CHECK(run_cli("census --n 2 --m-range nonsense").exit_code == 2);
}

TEST_CASE("verify-rr csv")
{
    const auto run = run_cli("verify-rr --n 2 --max 10 --format csv");
    CHECK(run.exit_code == 0);
    CHECK(run.output == read_file("verify_rr_n2_max10.csv"));
    CHECK(count_lines_crlf(run.output) == 12); // header + rows N = 0..10
}

TEST_CASE("verify-rr json")
{
    const auto run = run_cli("verify-rr --n 3 --max 12 --format json");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["all_equal"] == true);
    CHECK(parsed["rows"].size() == 13);
}

TEST_CASE("verify-rr usage errors")
{
    CHECK(run_cli("verify-rr --n 2 --max 0").exit_code == 2);
    CHECK(run_cli("verify-rr --n 2 --max -5").exit_code == 2);
    CHECK(run_cli("verify-rr --max 10").exit_code == 2);
}

TEST_CASE("output is independent of the thread width")
{
    const auto one = run_cli("verify-rr --n 2 --max 20 --format csv --threads 1");
    const auto three = run_cli("verify-rr --n 2 --max 20 --format csv --threads 3");
    CHECK(one.exit_code == 0);
    CHECK(one.output == three.output);

    const auto census_one = run_cli("census --n 2 --m -4 --format json --threads 1");
    const auto census_four = run_cli("census --n 2 --m -4 --format json --threads 4");
    CHECK(census_one.output == census_four.output);
}

TEST_CASE("RRCENSUS_THREADS environment fallback")
{
    const auto flagged = run_cli("verify-rr --n 2 --max 15 --format csv --threads 2");
    const auto env = run_cli("verify-rr --n 2 --max 15 --format csv", "RRCENSUS_THREADS=2 ");
    CHECK(env.exit_code == 0);
    CHECK(env.output == flagged.output);
}

TEST_CASE("--out writes the same bytes")
{
    const std::string path = "/tmp/rrcensus_test_out.csv";
    std::remove(path.c_str());
    const auto direct = run_cli("verify-rr --n 2 --max 8 --format csv");
    const auto to_file = run_cli("verify-rr --n 2 --max 8 --format csv --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.output);
    std::remove(path.c_str());

    CHECK(run_cli("verify-rr --n 2 --max 8 --out /nonexistent/dir/x.csv").exit_code == 2);
}
