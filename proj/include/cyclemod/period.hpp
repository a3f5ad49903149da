#pragma once

// Exact minimal-period detection for periodic sequences mod m, the period
// predictor for partial sums, derived-period chains, and an independent
// brute-force oracle for cross-checking the predictor.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclemod/residue.hpp"
#include "cyclemod/sequence.hpp"

namespace cyclemod {

/// What the predictor knows about one sequence: its minimal period p, the
/// sum of one full period (the tail sum), the additive order s of that sum,
/// and the resulting period s*p of the running-sum sequence.
struct period_report {
    std::int64_t period = 0;
    std::int64_t tail_sum = 0;
    std::int64_t order_multiplier = 0;
    std::int64_t predicted_sum_period = 0;
    std::int64_t modulus = 0;

    friend bool operator==(const period_report&, const period_report&) = default;
};

struct chain_level {
    int level = 0;
    std::int64_t period = 0;
    std::int64_t tail_sum = 0;
    std::int64_t multiplier = 0;

    friend bool operator==(const chain_level&, const chain_level&) = default;
};

/// Per-level periods of an iterated partial-sum ladder. Consecutive levels
/// satisfy period[i+1] = multiplier[i] * period[i].
struct chain_report {
    std::vector<chain_level> levels;

    friend bool operator==(const chain_report&, const chain_report&) = default;
};

/// The least p >= 1 with x_{n+p} = x_n for all n. Recurrences step the state
/// vector until it returns to the initial state (capped by the m^k
/// pigeonhole bound); blocks use the border (failure-function)
/// characterization of the primitive period.
std::int64_t minimal_period(const sequence_spec& spec);

/// Minimal period p, tail sum, additive order of the tail sum, and the
/// predicted running-sum period s*p.
period_report predict_sum_period(const sequence_spec& spec);

/// Brute-force minimal period of the running-sum sequence: materializes
/// 2*m*p terms (twice the s*p <= m*p bound, so the prefix holds at least two
/// full repetitions) and takes the least period of that prefix. Never
/// consults predict_sum_period.
std::int64_t detected_sum_period(const sequence_spec& spec);

/// Levels 0..depth with period, tail sum and multiplier per level, each
/// level realized as a block and re-measured from scratch.
chain_report derived_chain(const sequence_spec& spec, int depth,
                           std::int64_t level_cap = default_level_cap);

/// Both sides of the tail-sum dichotomy, computed independently: whether one
/// period of the base sequence sums to zero, and whether the running-sum
/// period (brute-force detected) equals the base period. The two always
/// agree.
struct sum_period_invariance {
    bool tail_sum_zero = false;
    bool periods_equal = false;

    friend bool operator==(const sum_period_invariance&, const sum_period_invariance&) = default;
};

sum_period_invariance check_sum_period_invariance(const sequence_spec& spec);

std::string to_json(const period_report& report);
period_report period_report_from_json(const std::string& text);

std::string to_json(const chain_report& report);
chain_report chain_report_from_json(const std::string& text);

namespace detail {

/// Materializes the running-sum block of `spec` with length
/// report.predicted_sum_period; throws cap_error past level_cap.
sequence_spec realize_sum_block(const sequence_spec& spec, const period_report& report,
                                std::int64_t level_cap);

} // namespace detail

} // namespace cyclemod
