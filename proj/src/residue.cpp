#include "cyclemod/residue.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cyclemod {

modulus::modulus(std::int64_t m) : m_(m) {
    if (m < 2 || m > max_value)
        throw invariant_error("modulus must lie in [2, 2^31], got " + std::to_string(m));
}

residue::residue(std::int64_t value, modulus m) : mod_(m) {
    value_ = value % m.value();
    if (value_ < 0)
        value_ += m.value();
}

namespace {

void require_same_modulus(residue lhs, residue rhs) {
    if (!(lhs.mod() == rhs.mod()))
        throw invariant_error("mixed moduli in residue arithmetic");
}

} // namespace

residue operator+(residue lhs, residue rhs) {
    require_same_modulus(lhs, rhs);
    return residue(lhs.value_ + rhs.value_, lhs.mod_);
}

residue operator-(residue lhs, residue rhs) {
    require_same_modulus(lhs, rhs);
    return residue(lhs.value_ - rhs.value_, lhs.mod_);
}

residue operator*(residue lhs, residue rhs) {
    require_same_modulus(lhs, rhs);
    return residue(lhs.value_ * rhs.value_, lhs.mod_);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0)
        throw invariant_error("lcm arguments must be non-negative");
    if (a == 0 || b == 0)
        return 0;
    const std::int64_t quotient = a / std::gcd(a, b);
    std::int64_t out = 0;
    if (__builtin_mul_overflow(quotient, b, &out))
        throw overflow_error("lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                             ") exceeds 64-bit range");
    return out;
}

std::int64_t additive_order(const residue& x) {
    if (x.is_zero())
        return 1;
    return x.mod().value() / std::gcd(x.value(), x.mod().value());
}

residue binomial_mod(std::int64_t n, std::int64_t k, modulus m) {
    if (n < 0)
        throw invariant_error("binomial_mod requires n >= 0");
    if (k < 0 || k > n)
        return residue(0, m);
    // One Pascal row at a time, updated in place right-to-left. Columns
    // beyond k never feed back into column k, so the row is truncated there.
    std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (std::int64_t r = 1; r <= n; ++r)
        for (std::int64_t c = std::min(r, k); c >= 1; --c)
            row[static_cast<std::size_t>(c)] =
                (row[static_cast<std::size_t>(c)] + row[static_cast<std::size_t>(c) - 1]) %
                m.value();
    return residue(row[static_cast<std::size_t>(k)], m);
}

} // namespace cyclemod
