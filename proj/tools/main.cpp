// cyclemod: periodic integer sequences mod m, running-sum periods, derived
// chains, Pisano tables and theorem verification sweeps.

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cyclemod/fibonacci.hpp"
#include "cyclemod/fuzz.hpp"
#include "cyclemod/parallel.hpp"
#include "cyclemod/period.hpp"
#include "cyclemod/sequence.hpp"

namespace {

using namespace cyclemod;

constexpr int exit_ok = 0;
constexpr int exit_malformed_spec = 2;
constexpr int exit_invariant = 3;
constexpr int exit_verification_failed = 4;
constexpr int exit_level_cap = 5;

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* flag) {
    std::vector<std::int64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw spec_error(std::string(flag) + " expects comma-separated integers, got \"" +
                             text + "\"");
        }
    }
    if (out.empty())
        throw spec_error(std::string(flag) + " expects at least one integer");
    return out;
}

struct spec_options {
    std::string fib;
    std::string block;
    std::string spec_source;
    std::int64_t m = 0;
    bool has_m = false;

    void attach(CLI::App& cmd) {
        auto* fib_opt = cmd.add_option("--fib", fib, "Fibonacci-type seed values a,b");
        auto* block_opt = cmd.add_option("--block", block, "repeating block entries x,y,...");
        auto* spec_opt =
            cmd.add_option("--spec", spec_source, "sequence spec as inline JSON or a file path");
        auto* m_opt = cmd.add_option("--m", m, "modulus (>= 2)");
        fib_opt->excludes(block_opt)->excludes(spec_opt);
        block_opt->excludes(spec_opt);
        m_opt->excludes(spec_opt);
        cmd.callback([this, m_opt] { has_m = m_opt->count() > 0; });
    }

    sequence_spec load() const {
        if (!spec_source.empty()) {
            if (!spec_source.empty() && spec_source.front() == '{')
                return sequence_spec::from_json(spec_source);
            std::ifstream file(spec_source);
            if (!file)
                throw spec_error("cannot read spec file \"" + spec_source + "\"");
            std::stringstream buffer;
            buffer << file.rdbuf();
            return sequence_spec::from_json(buffer.str());
        }
        if (!has_m)
            throw spec_error("--m is required with --fib/--block");
        const modulus mod(m);
        if (!fib.empty()) {
            const auto seeds = parse_int_list(fib, "--fib");
            if (seeds.size() != 2)
                throw spec_error("--fib expects exactly two integers a,b");
            return make_general_fibonacci(seeds[0], seeds[1], mod);
        }
        if (!block.empty())
            return make_block(parse_int_list(block, "--block"), mod);
        throw spec_error("one of --fib, --block or --spec is required");
    }
};

std::string render_block_line(const std::vector<std::int64_t>& terms, std::int64_t m) {
    std::ostringstream out;
    if (m <= 10) {
        for (const auto term : terms)
            out << term;
    } else {
        for (std::size_t i = 0; i < terms.size(); ++i)
            out << (i ? "," : "") << terms[i];
    }
    return out.str();
}

std::int64_t level_cap_from_env() {
    if (const char* value = std::getenv("CYCLEMOD_LEVEL_CAP")) {
        try {
            return std::stoll(value);
        } catch (const std::exception&) {
            throw spec_error("CYCLEMOD_LEVEL_CAP must be an integer");
        }
    }
    return default_level_cap;
}

int default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// --- verify suites ----------------------------------------------------------

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct verify_options {
    std::uint64_t seed = 0;
    std::int64_t cases = 10'000;
    std::int64_t max_m = 60;
    bool max_m_given = false;
    int jobs = 1;
};

void print_check_line(const std::string& label, std::int64_t good, std::int64_t total) {
    std::cout << "  " << label << " ... " << good << "/" << total << "\n";
}

bool run_sum_period_fuzz(const verify_options& options) {
    std::cout << "suite theorem-3-5: seed=" << options.seed << " cases=" << options.cases
              << " max-m=" << options.max_m << "\n";
    const auto corpus = random_spec_corpus(
        {.seed = options.seed, .cases = options.cases, .max_modulus = options.max_m});

    std::atomic<std::int64_t> predicted_ok{0};
    std::atomic<std::int64_t> multiple_ok{0};
    std::atomic<std::int64_t> divides_ok{0};
    std::atomic<std::int64_t> dichotomy_ok{0};
    std::atomic<std::int64_t> prime_ok{0};
    std::atomic<std::int64_t> prime_total{0};
    std::atomic<std::int64_t> first_bad{std::numeric_limits<std::int64_t>::max()};

    parallel_for_index(static_cast<std::int64_t>(corpus.size()), options.jobs,
                       [&](std::int64_t i) {
                           const auto& spec = corpus[static_cast<std::size_t>(i)];
                           const auto report = predict_sum_period(spec);
                           const auto detected = detected_sum_period(spec);
                           const auto invariance = check_sum_period_invariance(spec);

                           bool all_good = true;
                           if (report.predicted_sum_period == detected)
                               ++predicted_ok;
                           else
                               all_good = false;
                           if (detected % report.period == 0 &&
                               detected / report.period == report.order_multiplier)
                               ++multiple_ok;
                           else
                               all_good = false;
                           if (report.modulus % report.order_multiplier == 0)
                               ++divides_ok;
                           else
                               all_good = false;
                           if (invariance.tail_sum_zero == invariance.periods_equal)
                               ++dichotomy_ok;
                           else
                               all_good = false;
                           if (is_prime(report.modulus)) {
                               ++prime_total;
                               if (report.order_multiplier == 1 ||
                                   report.order_multiplier == report.modulus)
                                   ++prime_ok;
                               else
                                   all_good = false;
                           }
                           if (!all_good) {
                               std::int64_t seen = first_bad.load();
                               while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
                               }
                           }
                       });

    const std::int64_t total = static_cast<std::int64_t>(corpus.size());
    print_check_line("predicted == detected", predicted_ok.load(), total);
    print_check_line("detected = multiplier * base period", multiple_ok.load(), total);
    print_check_line("multiplier divides modulus", divides_ok.load(), total);
    print_check_line("tail zero iff periods equal", dichotomy_ok.load(), total);
    print_check_line("prime m has multiplier 1 or m", prime_ok.load(), prime_total.load());

    if (first_bad.load() != std::numeric_limits<std::int64_t>::max()) {
        const auto index = first_bad.load();
        const auto& spec = corpus[static_cast<std::size_t>(index)];
        const auto report = predict_sum_period(spec);
        std::cout << "  first counterexample: case " << index << " spec " << spec.to_json()
                  << " predicted=" << report.predicted_sum_period
                  << " detected=" << detected_sum_period(spec) << "\n";
        std::cout << "FAIL\n";
        return false;
    }
    std::cout << "PASS\n";
    return true;
}

bool run_identity_sweeps() {
    std::cout << "suite identities:\n";
    const std::vector<fib_pair> pairs = {{0, 1}, {2, 1}, {1, 0}, {-3, 5}, {7, -2}};

    std::int64_t closed_good = 0;
    std::int64_t closed_total = 0;
    std::string first_bad;
    for (const auto& pair : pairs)
        for (std::int64_t level = 1; level <= 6; ++level)
            for (std::int64_t n = 0; n <= 60; ++n) {
                ++closed_total;
                if (derived_fib_closed_form(pair, level, n) == derived_fib_term(pair, level, n))
                    ++closed_good;
                else if (first_bad.empty())
                    first_bad = "closed form at a=" + pair.a.get_str() +
                                " b=" + pair.b.get_str() + " level=" + std::to_string(level) +
                                " n=" + std::to_string(n);
            }
    print_check_line("closed form vs iterated sums (levels 1..6, n <= 60)", closed_good,
                     closed_total);

    std::int64_t poly_good = 0;
    std::int64_t poly_total = 0;
    for (const auto& pair : pairs)
        for (std::int64_t level = 2; level <= 4; ++level)
            for (std::int64_t n = 0; n <= 40; ++n) {
                ++poly_total;
                if (derived_fib_polynomial_form(pair, level, n) ==
                    derived_fib_closed_form(pair, level, n))
                    ++poly_good;
                else if (first_bad.empty())
                    first_bad = "polynomial form at level=" + std::to_string(level) +
                                " n=" + std::to_string(n);
            }
    print_check_line("polynomial forms match (levels 2..4, n <= 40)", poly_good, poly_total);

    std::int64_t at_one_good = 0;
    std::int64_t at_one_total = 0;
    for (const auto& pair : pairs)
        for (std::int64_t j = 1; j <= 12; ++j) {
            ++at_one_total;
            if (derived_fib_at_one(pair, j) == derived_fib_term(pair, j - 1, 1))
                ++at_one_good;
            else if (first_bad.empty())
                first_bad = "index-one value at j=" + std::to_string(j);
        }
    print_check_line("value at index one (j <= 12)", at_one_good, at_one_total);

    std::int64_t pascal_good = 0;
    std::int64_t pascal_total = 0;
    for (std::int64_t j = 1; j <= 12; ++j)
        for (std::int64_t n = 0; n <= 50; ++n) {
            ++pascal_total;
            const auto [first, second] = pascal_sum_identities(j, n);
            if (first && second)
                ++pascal_good;
            else if (first_bad.empty())
                first_bad = "pascal sums at j=" + std::to_string(j) + " n=" + std::to_string(n);
        }
    print_check_line("pascal sums (j <= 12, n <= 50)", pascal_good, pascal_total);

    if (!first_bad.empty()) {
        std::cout << "  first counterexample: " << first_bad << "\n";
        std::cout << "FAIL\n";
        return false;
    }
    std::cout << "PASS\n";
    return true;
}

std::string render_set(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? ", " : "") << values[i];
    out << "}";
    return out.str();
}

bool run_period_bound_scan(const verify_options& options) {
    std::cout << "suite freyd-brown: max-m=" << options.max_m << "\n";
    const auto scan = freyd_brown_scan(options.max_m, options.jobs);

    std::vector<std::int64_t> expected_fib;
    for (std::int64_t v = 10; v <= options.max_m; v *= 5)
        expected_fib.push_back(v);
    std::vector<std::int64_t> expected_lucas;
    if (options.max_m >= 6)
        expected_lucas.push_back(6);

    const std::int64_t range = options.max_m - 1;
    print_check_line("fibonacci period <= 6m",
                     range - static_cast<std::int64_t>(scan.fibonacci_violations.size()), range);
    print_check_line("lucas period <= 4m",
                     range - static_cast<std::int64_t>(scan.lucas_violations.size()), range);
    std::cout << "  fibonacci equality set ... " << render_set(scan.fibonacci_equalities)
              << " (expected " << render_set(expected_fib) << ")\n";
    std::cout << "  lucas equality set ... " << render_set(scan.lucas_equalities)
              << " (expected " << render_set(expected_lucas) << ")\n";

    const bool good = scan.fibonacci_violations.empty() && scan.lucas_violations.empty() &&
                      scan.fibonacci_equalities == expected_fib &&
                      scan.lucas_equalities == expected_lucas;
    std::cout << (good ? "PASS" : "FAIL") << "\n";
    return good;
}

bool run_seeded_pair_sweep(const verify_options& options) {
    const std::int64_t max_m = options.max_m_given ? options.max_m : 30;
    std::cout << "suite period-sums: max-m=" << max_m << "\n";

    std::atomic<std::int64_t> sum_good{0};
    std::atomic<std::int64_t> equal_good{0};
    std::atomic<std::int64_t> total{0};
    std::atomic<bool> failed{false};
    parallel_for_index(max_m - 1, options.jobs, [&](std::int64_t offset) {
        const std::int64_t m = 2 + offset;
        const modulus mod(m);
        for (std::int64_t a = 0; a < m; ++a)
            for (std::int64_t b = 0; b < m; ++b) {
                ++total;
                const auto spec = make_general_fibonacci(a, b, mod);
                const auto p = minimal_period(spec);
                std::int64_t sum = 0;
                for (const auto term : spec.prefix(static_cast<std::size_t>(p)))
                    sum = (sum + term) % m;
                if (sum == 0)
                    ++sum_good;
                else
                    failed = true;
                if (detected_sum_period(spec) == p)
                    ++equal_good;
                else
                    failed = true;
            }
    });
    print_check_line("one-period sums vanish mod m", sum_good.load(), total.load());
    print_check_line("base and running-sum periods equal", equal_good.load(), total.load());
    std::cout << (failed.load() ? "FAIL" : "PASS") << "\n";
    return !failed.load();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic sequences mod m: periods, running sums, derived chains"};
    app.require_subcommand(1);

    // period
    auto* period_cmd = app.add_subcommand("period", "minimal period of a sequence");
    spec_options period_spec;
    period_spec.attach(*period_cmd);
    std::string period_format = "text";
    period_cmd->add_option("--format", period_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // sum-period
    auto* sum_cmd = app.add_subcommand("sum-period", "period report of the running-sum sequence");
    spec_options sum_spec;
    sum_spec.attach(*sum_cmd);
    std::string sum_format = "text";
    bool sum_verify = false;
    sum_cmd->add_option("--format", sum_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sum_cmd->add_flag("--verify", sum_verify, "cross-check against the brute-force oracle");

    // chain
    auto* chain_cmd = app.add_subcommand("chain", "iterated running-sum period ladder");
    spec_options chain_spec;
    chain_spec.attach(*chain_cmd);
    int chain_depth = 0;
    std::string chain_format = "text";
    std::int64_t chain_cap = -1;
    chain_cmd->add_option("--depth", chain_depth, "number of summation levels")
        ->check(CLI::NonNegativeNumber);
    chain_cmd->add_option("--format", chain_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    chain_cmd->add_option("--level-cap", chain_cap,
                          "max realized terms per level (default CYCLEMOD_LEVEL_CAP or 10^7)");

    // pisano
    auto* pisano_cmd = app.add_subcommand("pisano", "Pisano period table over a modulus range");
    std::string pisano_range;
    std::int64_t pisano_m = 0;
    std::string pisano_format = "text";
    int pisano_jobs = default_jobs();
    auto* range_opt = pisano_cmd->add_option("--range", pisano_range, "modulus range lo,hi");
    pisano_cmd->add_option("--m", pisano_m, "single modulus")->excludes(range_opt);
    pisano_cmd->add_option("--format", pisano_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    pisano_cmd->add_option("--jobs", pisano_jobs, "worker threads");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string suite = "all";
    verify_options verify_opts;
    verify_opts.jobs = default_jobs();
    verify_cmd->add_option("--suite", suite, "which sweep to run")
        ->check(CLI::IsMember({"theorem-3-5", "identities", "freyd-brown", "period-sums", "all"}));
    verify_cmd->add_option("--cases", verify_opts.cases, "number of random cases")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify_opts.seed, "random seed");
    auto* max_m_opt = verify_cmd->add_option("--max-m", verify_opts.max_m, "largest modulus");
    verify_cmd->add_option("--jobs", verify_opts.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (period_cmd->parsed()) {
            const auto spec = period_spec.load();
            const auto p = minimal_period(spec);
            if (period_format == "json")
                std::cout << "{\"period\":" << p << ",\"modulus\":" << spec.mod().value()
                          << "}\n";
            else
                std::cout << p << "\n";
            return exit_ok;
        }

        if (sum_cmd->parsed()) {
            const auto spec = sum_spec.load();
            const auto report = predict_sum_period(spec);
            std::int64_t detected = 0;
            bool match = true;
            if (sum_verify) {
                detected = detected_sum_period(spec);
                match = detected == report.predicted_sum_period;
            }
            if (sum_format == "json") {
                if (sum_verify)
                    std::cout << "{\"report\":" << to_json(report)
                              << ",\"detected_sum_period\":" << detected << ",\"verdict\":\""
                              << (match ? "MATCH" : "MISMATCH") << "\"}\n";
                else
                    std::cout << to_json(report) << "\n";
            } else {
                std::cout << "period: " << report.period << "\n"
                          << "tail_sum: " << report.tail_sum << "\n"
                          << "order_multiplier: " << report.order_multiplier << "\n"
                          << "predicted_sum_period: " << report.predicted_sum_period << "\n";
                if (sum_verify)
                    std::cout << "detected_sum_period: " << detected << "\n"
                              << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
            }
            return match ? exit_ok : exit_verification_failed;
        }

        if (chain_cmd->parsed()) {
            const std::int64_t cap = chain_cap >= 0 ? chain_cap : level_cap_from_env();
            const auto spec = chain_spec.load();
            if (chain_format == "json") {
                std::cout << to_json(derived_chain(spec, chain_depth, cap)) << "\n";
                return exit_ok;
            }
            for (const auto& level : derive(spec, chain_depth, cap)) {
                const auto report = predict_sum_period(level.spec);
                std::cout << "S^" << level.level << ": period=" << report.period
                          << " tail_sum=" << report.tail_sum
                          << " multiplier=" << report.order_multiplier << "\n";
                std::cout << render_block_line(
                                 level.spec.prefix(static_cast<std::size_t>(report.period)),
                                 spec.mod().value())
                          << "\n";
            }
            return exit_ok;
        }

        if (pisano_cmd->parsed()) {
            std::int64_t lo = 0;
            std::int64_t hi = 0;
            if (!pisano_range.empty()) {
                const auto bounds = parse_int_list(pisano_range, "--range");
                if (bounds.size() != 2)
                    throw spec_error("--range expects lo,hi");
                lo = bounds[0];
                hi = bounds[1];
            } else if (pisano_m != 0) {
                lo = hi = pisano_m;
            } else {
                throw spec_error("pisano needs --range lo,hi or --m");
            }
            const auto table = pisano_table(lo, hi, pisano_jobs);
            if (pisano_format == "csv") {
                std::cout << pisano_csv(table);
            } else if (pisano_format == "json") {
                std::cout << pisano_json(table) << "\n";
            } else {
                std::ostringstream line;
                for (std::size_t i = 0; i < table.size(); ++i)
                    line << (i ? "," : "") << table[i].pi;
                std::cout << line.str() << "\n";
            }
            return exit_ok;
        }

        if (verify_cmd->parsed()) {
            verify_opts.max_m_given = max_m_opt->count() > 0;
            bool good = true;
            if (suite == "theorem-3-5" || suite == "all")
                good = run_sum_period_fuzz(verify_opts) && good;
            if (suite == "identities" || suite == "all")
                good = run_identity_sweeps() && good;
            if (suite == "freyd-brown" || suite == "all")
                good = run_period_bound_scan(verify_opts) && good;
            if (suite == "period-sums" || suite == "all")
                good = run_seeded_pair_sweep(verify_opts) && good;
            return good ? exit_ok : exit_verification_failed;
        }
    } catch (const spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_malformed_spec;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_level_cap;
    } catch (const invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invariant;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
