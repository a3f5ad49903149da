#pragma once

// Closed-form identities for generalized Fibonacci sequences and their
// iterated partial sums over Z, Pisano-period utilities, and the 6m/4m
// period-bound scan.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/residue.hpp"

namespace cyclemod {

/// Seed values F_0 = a, F_1 = b of a generalized Fibonacci sequence over Z.
/// Exact integers (may be negative); identity checks run without reduction.
struct fib_pair {
    mpz_class a;
    mpz_class b;
};

/// Exact binomial coefficient C(n, k); 0 for k outside [0, n].
mpz_class binomial_exact(std::int64_t n, std::int64_t k);

/// F(a,b)_n over Z.
mpz_class general_fib_term(const fib_pair& pair, std::int64_t n);

/// The level-fold running sum of F(a,b) evaluated at n, by direct iterated
/// summation. Level 0 is the sequence itself.
mpz_class derived_fib_term(const fib_pair& pair, std::int64_t level, std::int64_t n);

/// The same value via the shift-by-two closed form: the level-1 sum at n+2
/// minus binomial-weighted seed corrections. Requires level >= 1.
mpz_class derived_fib_closed_form(const fib_pair& pair, std::int64_t level, std::int64_t n);

/// Low-level polynomial variants of the closed form (levels 2, 3 and 4 only),
/// with the binomial weights spelled out as polynomials in n.
mpz_class derived_fib_polynomial_form(const fib_pair& pair, std::int64_t level, std::int64_t n);

/// Value at index 1 after j-1 summations: (j-1)a + b. Requires j >= 1.
mpz_class derived_fib_at_one(const fib_pair& pair, std::int64_t j);

/// Both telescoped Pascal-sum identities at (j, n):
///   j + sum_{k=0..n} C(k+j, j-2) == C(n+j+1, j-1)
///   1 + sum_{k=0..n} C(k+j, j-1) == C(n+j+1, j)
/// Returns one boolean per identity; both hold for every j >= 1, n >= 0.
std::pair<bool, bool> pascal_sum_identities(std::int64_t j, std::int64_t n);

/// Pisano period pi(m) of the Fibonacci sequence mod m, and whether it
/// attains the 6m bound.
struct pisano_record {
    std::int64_t m = 0;
    std::int64_t pi = 0;
    bool ratio_times_6m = false;

    friend bool operator==(const pisano_record&, const pisano_record&) = default;
};

pisano_record pisano(modulus m);

/// Period of the Lucas sequence (seed 2, 1) mod m.
std::int64_t lucas_period(modulus m);

/// Records for every m in [lo, hi], computed with up to `jobs` threads.
std::vector<pisano_record> pisano_table(std::int64_t lo, std::int64_t hi, int jobs = 1);

/// CSV with header "m,pi,ratio6m_equal".
std::string pisano_csv(const std::vector<pisano_record>& records);

/// JSON array of records with fields m, pi, ratio_times_6m.
std::string pisano_json(const std::vector<pisano_record>& records);

/// Bound check over 2 <= m <= m_max: pi(m) <= 6m with equality recorded, and
/// the Lucas period <= 4m with equality recorded. The expected equality sets
/// are {2 * 5^k} and {6}; violations should always be empty.
struct freyd_brown_report {
    std::int64_t m_max = 0;
    std::vector<std::int64_t> fibonacci_equalities;
    std::vector<std::int64_t> fibonacci_violations;
    std::vector<std::int64_t> lucas_equalities;
    std::vector<std::int64_t> lucas_violations;
};

freyd_brown_report freyd_brown_scan(std::int64_t m_max, int jobs = 1);

} // namespace cyclemod
