#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "cyclemod/period.hpp"
#include "cyclemod/sequence.hpp"

namespace {

struct run_result {
    int exit_code = -1;
    std::string output;
};

// Runs the built binary through the shell, capturing stdout.
run_result run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command = env_prefix + CYCLEMOD_BIN " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("period command prints the worked values") {
    CHECK(run_cli("period --fib 0,1 --m 6").output == "24\n");
    CHECK(run_cli("period --block 0 --m 7").output == "1\n");
    CHECK(run_cli("period --block 2,0,1,9,0,8,2,3 --m 36").output == "8\n");
    CHECK(run_cli("period --fib 0,1 --m 6").exit_code == 0);
    CHECK(run_cli("period --fib 0,1 --m 6 --format json").output ==
          "{\"period\":24,\"modulus\":6}\n");
}

TEST_CASE("sum-period reports and verifies") {
    const auto plain = run_cli("sum-period --block 0,1,1 --m 8");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "period: 3\ntail_sum: 2\norder_multiplier: 4\n"
                          "predicted_sum_period: 12\n");

    const auto verified = run_cli("sum-period --block 2,0,1,9,0,8,2,3 --m 30 --verify");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("predicted_sum_period: 48") != std::string::npos);
    CHECK(verified.output.find("detected_sum_period: 48") != std::string::npos);
    CHECK(verified.output.find("verdict: MATCH") != std::string::npos);

    CHECK(run_cli("sum-period --block 0 --m 9").output.find("predicted_sum_period: 1") !=
          std::string::npos);
}

TEST_CASE("sum-period JSON round-trips through the documented schema") {
    const auto result = run_cli("sum-period --block 0,1,1 --m 5 --format json");
    REQUIRE(result.exit_code == 0);
    const auto report = cyclemod::period_report_from_json(result.output);
    CHECK(report.period == 3);
    CHECK(report.tail_sum == 2);
    CHECK(report.order_multiplier == 5);
    CHECK(report.predicted_sum_period == 15);
    CHECK(report.modulus == 5);
}

TEST_CASE("chain prints one period block per level") {
    const auto result = run_cli("chain --fib 0,1 --m 2 --depth 4");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("011\n") != std::string::npos);
    CHECK(result.output.find("010\n") != std::string::npos);
    CHECK(result.output.find("011100\n") != std::string::npos);
    CHECK(result.output.find("010111101000\n") != std::string::npos);
    CHECK(result.output.find("011010110000\n") != std::string::npos);

    const auto json = run_cli("chain --fib 0,1 --m 3 --depth 4 --format json");
    REQUIRE(json.exit_code == 0);
    const auto chain = cyclemod::chain_report_from_json(json.output);
    REQUIRE(chain.levels.size() == 5);
    const std::vector<std::int64_t> expected{8, 8, 24, 24, 72};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(chain.levels[i].period == expected[i]);

    const auto zeros = run_cli("chain --fib 0,0 --m 5 --depth 3 --format json");
    for (const auto& level : cyclemod::chain_report_from_json(zeros.output).levels)
        CHECK(level.period == 1);
}

TEST_CASE("pisano emits the quoted list, CSV and JSON") {
    CHECK(run_cli("pisano --range 2,8").output == "3,8,6,20,24,16,12\n");

    const auto csv = run_cli("pisano --range 2,4 --format csv");
    CHECK(csv.output == "m,pi,ratio6m_equal\n2,3,false\n3,8,false\n4,6,false\n");

    const auto json = run_cli("pisano --range 9,10 --format json");
    CHECK(json.output.find("{\"m\":10,\"pi\":60,\"ratio_times_6m\":true}") != std::string::npos);

    CHECK(run_cli("pisano --m 987").output == "32\n");
}

TEST_CASE("verify freyd-brown reports the equality set") {
    const auto result = run_cli("verify --suite freyd-brown --max-m 60");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("{10, 50}") != std::string::npos);
    CHECK(result.output.find("PASS") != std::string::npos);
}

TEST_CASE("verify theorem-3-5 passes vacuously with zero cases") {
    const auto result = run_cli("verify --suite theorem-3-5 --cases 0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("0/0") != std::string::npos);
    CHECK(result.output.find("PASS") != std::string::npos);
}

TEST_CASE("verify runs are byte-identical for a fixed seed, across job counts") {
    const std::string args = "verify --suite theorem-3-5 --cases 300 --seed 7 --max-m 24";
    const auto first = run_cli(args + " --jobs 1");
    const auto second = run_cli(args + " --jobs 1");
    const auto parallel = run_cli(args + " --jobs 4");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output == parallel.output);
}

TEST_CASE("specs load from files and inline JSON") {
    const std::string path = "/tmp/cyclemod_test_spec.json";
    {
        std::ofstream file(path);
        file << cyclemod::make_block({0, 1, 1}, cyclemod::modulus(5)).to_json();
    }
    CHECK(run_cli("period --spec " + path).output == "3\n");
    CHECK(run_cli("sum-period --spec " + path).output.find("predicted_sum_period: 15") !=
          std::string::npos);
    CHECK(run_cli("period --spec "
                  "'{\"m\":6,\"kind\":\"recurrence\",\"coefficients\":[1,1],\"initial\":[0,1]}'")
              .output == "24\n");
    std::remove(path.c_str());
}

TEST_CASE("exit code 2 covers malformed spec input") {
    CHECK(run_cli("period --spec '{broken'").exit_code == 2);
    CHECK(run_cli("period --spec '{\"m\":6,\"kind\":\"spiral\"}'").exit_code == 2);
    CHECK(run_cli("period --spec '{\"m\":6,\"kind\":\"block\",\"block\":[1],\"x\":1}'")
              .exit_code == 2);
    CHECK(run_cli("period --spec /nonexistent/path.json").exit_code == 2);
    CHECK(run_cli("period --fib 0,1").exit_code == 2);     // missing --m
    CHECK(run_cli("period --fib banana --m 4").exit_code == 2);
}

TEST_CASE("exit code 3 covers invariant violations") {
    CHECK(run_cli("period --fib 0,1 --m 1").exit_code == 3);
    CHECK(run_cli("period --spec "
                  "'{\"m\":6,\"kind\":\"recurrence\",\"coefficients\":[1,2],\"initial\":[0,1]}'")
              .exit_code == 3);
    CHECK(run_cli("period --spec '{\"m\":6,\"kind\":\"block\",\"block\":[]}'").exit_code == 3);
}

TEST_CASE("exit code 5 covers the derived-level cap") {
    CHECK(run_cli("chain --fib 0,1 --m 3 --depth 3 --level-cap 10").exit_code == 5);
    CHECK(run_cli("chain --fib 0,1 --m 3 --depth 3",
                  "CYCLEMOD_LEVEL_CAP=10 ")
              .exit_code == 5);
    CHECK(run_cli("chain --fib 0,1 --m 3 --depth 3",
                  "CYCLEMOD_LEVEL_CAP=100 ")
              .exit_code == 0);
}
