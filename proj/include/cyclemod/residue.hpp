#pragma once

// Exact arithmetic in Z_m: residues, gcd/lcm, additive orders and binomial
// coefficients computed without modular division.

#include <cstdint>
#include <numeric>

#include "cyclemod/errors.hpp"

namespace cyclemod {

/// Ring size for Z_m. The valid range is [2, 2^31]; the cap guarantees that
/// a sum of two residues and a period-times-order product both stay inside
/// std::int64_t without further checks.
class modulus {
public:
    static constexpr std::int64_t max_value = std::int64_t{1} << 31;

    explicit modulus(std::int64_t m);

    std::int64_t value() const noexcept { return m_; }

    friend bool operator==(modulus, modulus) = default;

private:
    std::int64_t m_;
};

/// An integer in [0, m). Construction reduces any int64 argument, mapping
/// negatives into the canonical range.
class residue {
public:
    residue(std::int64_t value, modulus m);

    std::int64_t value() const noexcept { return value_; }
    modulus mod() const noexcept { return mod_; }

    bool is_zero() const noexcept { return value_ == 0; }

    friend residue operator+(residue lhs, residue rhs);
    friend residue operator-(residue lhs, residue rhs);
    friend residue operator*(residue lhs, residue rhs);
    friend bool operator==(const residue&, const residue&) = default;

private:
    std::int64_t value_;
    modulus mod_;
};

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

/// lcm(a, b) with an explicit overflow check; lcm(0, x) = 0.
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Smallest s >= 1 with s*x == 0 (mod m), i.e. m / gcd(x, m). The zero
/// residue has order 1.
std::int64_t additive_order(const residue& x);

/// C(n, k) mod m via the additive Pascal recurrence. No modular division is
/// involved, so composite m is fine. k outside [0, n] yields 0.
residue binomial_mod(std::int64_t n, std::int64_t k, modulus m);

} // namespace cyclemod
