// Acceptance suite: every gate below is exact (integer equality); the only
// tolerance anywhere is the wall-clock budget on the full Pisano scan.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cyclemod/fibonacci.hpp"
#include "cyclemod/fuzz.hpp"
#include "cyclemod/period.hpp"
#include "cyclemod/sequence.hpp"

namespace {

using namespace cyclemod;

int failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty())
        std::cout << " | " << detail;
    std::cout << "\n";
    if (!ok)
        ++failures;
}

std::string digits(const std::vector<std::int64_t>& terms) {
    std::ostringstream out;
    for (const auto term : terms)
        out << term;
    return out.str();
}

constexpr std::uint64_t corpus_seed = 12345;
constexpr std::int64_t corpus_cases = 10'000;

// 1. Running-sum periods of the repeating block 011 for m = 2..8, predicted
//    and brute-force detected.
void intro_block_table() {
    const std::vector<std::int64_t> expected{3, 9, 6, 15, 9, 21, 12};
    bool ok = true;
    std::string detail;
    for (std::int64_t m = 2; m <= 8; ++m) {
        const auto spec = make_block({0, 1, 1}, modulus(m));
        const auto predicted = predict_sum_period(spec).predicted_sum_period;
        const auto detected = detected_sum_period(spec);
        const auto want = expected[static_cast<std::size_t>(m - 2)];
        if (predicted != want || detected != want) {
            ok = false;
            detail = "m=" + std::to_string(m) + " predicted=" + std::to_string(predicted) +
                     " detected=" + std::to_string(detected) + " want=" + std::to_string(want);
            break;
        }
    }
    criterion(1, "block 011 running-sum periods for m=2..8 are (3,9,6,15,9,21,12)", ok, detail);
}

// 2. Block 20190823 mod 15/30/36.
void digit_block_example() {
    const std::map<std::int64_t, std::int64_t> expected{{15, 24}, {30, 48}, {36, 288}};
    bool ok = true;
    std::string detail;
    for (const auto& [m, want] : expected) {
        const auto spec = make_block({2, 0, 1, 9, 0, 8, 2, 3}, modulus(m));
        const auto predicted = predict_sum_period(spec).predicted_sum_period;
        const auto detected = detected_sum_period(spec);
        if (predicted != want || detected != want) {
            ok = false;
            detail = "m=" + std::to_string(m) + " predicted=" + std::to_string(predicted) +
                     " detected=" + std::to_string(detected);
            break;
        }
    }
    criterion(2, "block 20190823 running-sum periods mod 15/30/36 are 24/48/288", ok, detail);
}

// 3. Pisano spot values plus the timed full scan to 2001.
void pisano_spot_values() {
    const auto start = std::chrono::steady_clock::now();
    const auto table = pisano_table(2, 2001);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto pi = [&table](std::int64_t m) {
        return table[static_cast<std::size_t>(m - 2)].pi;
    };
    const std::vector<std::int64_t> small{3, 8, 6, 20, 24, 16, 12};
    bool ok = true;
    std::string detail;
    for (std::int64_t m = 2; m <= 8; ++m)
        if (pi(m) != small[static_cast<std::size_t>(m - 2)]) {
            ok = false;
            detail = "pi(" + std::to_string(m) + ")=" + std::to_string(pi(m));
        }
    const std::map<std::int64_t, std::int64_t> spots{
        {10, 60},     {25, 100},   {98, 336},   {250, 1500},  {500, 1500},  {625, 2500},
        {750, 3000},  {987, 32},   {1250, 7500}, {1991, 90},  {2000, 3000}, {2001, 336}};
    for (const auto& [m, want] : spots)
        if (pi(m) != want) {
            ok = false;
            detail = "pi(" + std::to_string(m) + ")=" + std::to_string(pi(m)) + " want " +
                     std::to_string(want);
        }
    if (seconds >= 10.0) {
        ok = false;
        detail = "scan took " + std::to_string(seconds) + "s";
    }
    std::ostringstream stamp;
    stamp.precision(2);
    stamp << std::fixed << seconds;
    criterion(3, "Pisano spot values match and the 2..2001 scan ran in " + stamp.str() + "s",
              ok, detail);
}

// 4. pi(m) <= 6m to 2000 with equality exactly at {10,50,250,1250}; Lucas
//    period <= 4m to 500 with equality exactly at {6}.
void period_bound_scan() {
    const auto scan = freyd_brown_scan(2000);
    bool ok = scan.fibonacci_violations.empty() &&
              scan.fibonacci_equalities == std::vector<std::int64_t>{10, 50, 250, 1250};
    std::string detail;
    if (!ok)
        detail = "fibonacci side off";
    std::vector<std::int64_t> lucas_eq_500;
    for (const auto m : scan.lucas_equalities)
        if (m <= 500)
            lucas_eq_500.push_back(m);
    for (const auto m : scan.lucas_violations)
        if (m <= 500) {
            ok = false;
            detail = "lucas bound violated at m=" + std::to_string(m);
        }
    if (lucas_eq_500 != std::vector<std::int64_t>{6}) {
        ok = false;
        detail = "lucas equality set off";
    }
    criterion(4, "period bounds: 6m equality set {10,50,250,1250}, 4m equality set {6}", ok,
              detail);
}

// 5. Derived chains of the Fibonacci sequence mod 2 and mod 3, with exact
//    per-level period blocks.
void derived_chain_blocks() {
    bool ok = true;
    std::string detail;

    const std::vector<std::string> blocks2{"011", "010", "011100", "010111101000",
                                           "011010110000"};
    const auto levels2 = derive(make_general_fibonacci(0, 1, modulus(2)), 4);
    for (std::size_t i = 0; i < blocks2.size(); ++i) {
        const auto period = minimal_period(levels2[i].spec);
        if (period != static_cast<std::int64_t>(blocks2[i].size()) ||
            digits(levels2[i].spec.prefix(static_cast<std::size_t>(period))) != blocks2[i]) {
            ok = false;
            detail = "mod 2 level " + std::to_string(i);
        }
    }

    const std::vector<std::string> blocks3{"01120221", "01211020",
                                           "010122111212002220201100",
                                           "011210120202221022112000"};
    const auto levels3 = derive(make_general_fibonacci(0, 1, modulus(3)), 3);
    for (std::size_t i = 0; i < blocks3.size(); ++i) {
        const auto period = minimal_period(levels3[i].spec);
        if (period != static_cast<std::int64_t>(blocks3[i].size()) ||
            digits(levels3[i].spec.prefix(static_cast<std::size_t>(period))) != blocks3[i]) {
            ok = false;
            detail = "mod 3 level " + std::to_string(i);
        }
    }
    criterion(5, "derived chains mod 2 (periods 3,3,6,12,12) and mod 3 (8,8,24,24) match "
                 "the printed blocks", ok, detail);
}

// 6. Predictor vs brute-force oracle over the random corpus.
void predictor_fuzz() {
    const auto corpus = random_spec_corpus({.seed = corpus_seed, .cases = corpus_cases});
    bool ok = true;
    std::string detail;
    for (const auto& spec : corpus) {
        const auto predicted = predict_sum_period(spec).predicted_sum_period;
        const auto detected = detected_sum_period(spec);
        if (predicted != detected) {
            ok = false;
            detail = "spec " + spec.to_json() + " predicted=" + std::to_string(predicted) +
                     " detected=" + std::to_string(detected);
            break;
        }
    }
    criterion(6, "predicted == detected running-sum period on " +
                     std::to_string(corpus_cases) + " random specs (m <= 60)", ok, detail);
}

// 7. Closed form vs iterated summation over Z, plus the polynomial variants.
void identity_suite() {
    const std::vector<fib_pair> pairs = {{0, 1}, {2, 1}, {1, 0}, {-3, 5}, {7, -2}};
    bool ok = true;
    std::string detail;
    for (const auto& pair : pairs) {
        for (std::int64_t level = 1; level <= 6 && ok; ++level)
            for (std::int64_t n = 0; n <= 60 && ok; ++n)
                if (derived_fib_closed_form(pair, level, n) !=
                    derived_fib_term(pair, level, n)) {
                    ok = false;
                    detail = "closed form a=" + pair.a.get_str() + " b=" + pair.b.get_str() +
                             " level=" + std::to_string(level) + " n=" + std::to_string(n);
                }
        for (std::int64_t level = 2; level <= 4 && ok; ++level)
            for (std::int64_t n = 0; n <= 40 && ok; ++n)
                if (derived_fib_polynomial_form(pair, level, n) !=
                    derived_fib_closed_form(pair, level, n)) {
                    ok = false;
                    detail = "polynomial form level=" + std::to_string(level) +
                             " n=" + std::to_string(n);
                }
    }
    criterion(7, "summation identities hold exactly over Z (levels <= 6, n <= 60, "
                 "5 seed pairs; polynomial forms for levels 2..4)", ok, detail);
}

// 8. Every seeded pair mod m <= 30: one-period sum vanishes and the
//    running-sum period equals the base period.
void seeded_pair_sweep() {
    bool ok = true;
    std::string detail;
    for (std::int64_t m = 2; m <= 30 && ok; ++m) {
        const modulus mod(m);
        for (std::int64_t a = 0; a < m && ok; ++a)
            for (std::int64_t b = 0; b < m && ok; ++b) {
                const auto spec = make_general_fibonacci(a, b, mod);
                const auto p = minimal_period(spec);
                std::int64_t sum = 0;
                for (const auto term : spec.prefix(static_cast<std::size_t>(p)))
                    sum = (sum + term) % m;
                if (sum != 0 || detected_sum_period(spec) != p) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b);
                }
            }
    }
    criterion(8, "all seeded pairs mod m <= 30: period sums vanish and base equals "
                 "running-sum period", ok, detail);
}

// 9. Telescoped Pascal sums.
void pascal_identity_suite() {
    bool ok = true;
    std::string detail;
    for (std::int64_t j = 1; j <= 12 && ok; ++j)
        for (std::int64_t n = 0; n <= 50 && ok; ++n) {
            const auto [first, second] = pascal_sum_identities(j, n);
            if (!first || !second) {
                ok = false;
                detail = "j=" + std::to_string(j) + " n=" + std::to_string(n);
            }
        }
    criterion(9, "both Pascal-sum identities hold for 1 <= j <= 12, 0 <= n <= 50", ok, detail);
}

// 10. Tail-sum dichotomy over the criterion-6 corpus.
void dichotomy_over_corpus() {
    const auto corpus = random_spec_corpus({.seed = corpus_seed, .cases = corpus_cases});
    bool ok = true;
    std::string detail;
    for (const auto& spec : corpus) {
        const auto invariance = check_sum_period_invariance(spec);
        if (invariance.tail_sum_zero != invariance.periods_equal) {
            ok = false;
            detail = "spec " + spec.to_json();
            break;
        }
    }
    criterion(10, "tail sum vanishes iff base and running-sum periods agree, over the "
                  "same corpus", ok, detail);
}

} // namespace

int main() {
    intro_block_table();
    digit_block_example();
    pisano_spot_values();
    period_bound_scan();
    derived_chain_blocks();
    predictor_fuzz();
    identity_suite();
    seeded_pair_sweep();
    pascal_identity_suite();
    dichotomy_over_corpus();

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
