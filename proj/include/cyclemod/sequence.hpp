#pragma once

// Finite descriptions of infinite purely periodic sequences mod m, lazy term
// generation, and the partial-sum derivation operator.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cyclemod/residue.hpp"

namespace cyclemod {

/// x_n = c_1*x_{n-1} + ... + c_k*x_{n-k} (mod m), seeded with x_0..x_{k-1}.
/// The trailing coefficient c_k is a unit mod m, which makes the state map
/// invertible and the sequence purely periodic from index 0.
struct recurrence_kind {
    std::vector<std::int64_t> coefficients; // c_1..c_k, reduced into [0, m)
    std::vector<std::int64_t> initial;      // x_0..x_{k-1}, reduced

    friend bool operator==(const recurrence_kind&, const recurrence_kind&) = default;
};

/// A non-empty finite block repeated forever. Not canonicalized: the block
/// may be a repetition of a shorter primitive period.
struct block_kind {
    std::vector<std::int64_t> residues; // reduced into [0, m)

    friend bool operator==(const block_kind&, const block_kind&) = default;
};

class sequence_spec {
public:
    static sequence_spec recurrence(std::vector<std::int64_t> coefficients,
                                    std::vector<std::int64_t> initial, modulus m);
    static sequence_spec block(std::vector<std::int64_t> entries, modulus m);

    modulus mod() const noexcept { return mod_; }

    bool is_block() const noexcept { return std::holds_alternative<block_kind>(kind_); }
    bool is_recurrence() const noexcept { return std::holds_alternative<recurrence_kind>(kind_); }
    const block_kind& as_block() const { return std::get<block_kind>(kind_); }
    const recurrence_kind& as_recurrence() const { return std::get<recurrence_kind>(kind_); }

    /// First n terms x_0..x_{n-1}.
    std::vector<std::int64_t> prefix(std::size_t n) const;

    /// Serialized form: {"m": ..., "kind": "recurrence"|"block", ...} with
    /// "coefficients"/"initial" for recurrences and "block" for blocks.
    std::string to_json() const;

    /// Parses the serialized form. Unknown fields are rejected. Shape
    /// problems throw spec_error; value problems throw invariant_error.
    static sequence_spec from_json(const std::string& text);

    friend bool operator==(const sequence_spec&, const sequence_spec&) = default;

private:
    sequence_spec(modulus m, std::variant<recurrence_kind, block_kind> kind);

    modulus mod_;
    std::variant<recurrence_kind, block_kind> kind_;
};

/// Streams terms of a spec one at a time with O(k) state. Borrows the spec;
/// the spec must outlive the cursor.
class sequence_cursor {
public:
    explicit sequence_cursor(const sequence_spec& spec);

    std::int64_t next();

private:
    const sequence_spec* spec_;
    std::size_t pos_ = 0;                // index of the next term to emit
    std::vector<std::int64_t> window_;   // last k terms (recurrence only)
    std::size_t oldest_ = 0;             // ring-buffer head into window_
};

/// Recurrence with coefficients (1, 1) and initial values (a, b); a and b
/// may be any integers and are reduced mod m. (0,1) is the Fibonacci
/// sequence, (2,1) the Lucas sequence.
sequence_spec make_general_fibonacci(std::int64_t a, std::int64_t b, modulus m);

sequence_spec make_block(std::vector<std::int64_t> entries, modulus m);

std::vector<std::int64_t> prefix(const sequence_spec& spec, std::size_t n);

/// Default bound on the realized length of one derived level.
inline constexpr std::int64_t default_level_cap = 10'000'000;

/// The running-sum sequence of `spec`, realized as a block of exactly one
/// minimal period so the operator can be iterated with bounded memory.
/// Throws cap_error when that period exceeds level_cap.
sequence_spec partial_sum(const sequence_spec& spec,
                          std::int64_t level_cap = default_level_cap);

/// One rung of an iterated partial-sum ladder: `spec` generates the
/// level-fold running sum of `base`. Level 0 is the base spec itself.
struct derivation_level {
    sequence_spec base;
    int level = 0;
    sequence_spec spec;
};

/// Levels 0..depth of the partial-sum ladder over `spec`.
std::vector<derivation_level> derive(const sequence_spec& spec, int depth,
                                     std::int64_t level_cap = default_level_cap);

} // namespace cyclemod
