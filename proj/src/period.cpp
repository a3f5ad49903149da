#include "cyclemod/period.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <utility>

namespace cyclemod {

namespace {

/// Failure function f of a finite word: f[i] is the length of the longest
/// proper border of the first i symbols. The least period of the word is
/// size - f[size].
std::vector<std::size_t> failure_function(const std::vector<std::int64_t>& word) {
    std::vector<std::size_t> f(word.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < word.size(); ++i) {
        while (k > 0 && word[i] != word[k])
            k = f[k];
        if (word[i] == word[k])
            ++k;
        f[i + 1] = k;
    }
    return f;
}

std::size_t least_prefix_period(const std::vector<std::int64_t>& word) {
    return word.size() - failure_function(word).back();
}

/// Minimal period of the infinite repetition of a block of length L. It
/// always divides L, so the border-derived candidate counts only when it
/// does; otherwise the block itself is primitive.
std::int64_t block_period(const block_kind& block) {
    const std::size_t length = block.residues.size();
    const std::size_t candidate = least_prefix_period(block.residues);
    return static_cast<std::int64_t>(length % candidate == 0 ? candidate : length);
}

std::int64_t saturating_pow(std::int64_t base, std::size_t exponent) {
    std::int64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(out, base, &out))
            return std::numeric_limits<std::int64_t>::max();
    }
    return out;
}

std::int64_t recurrence_period(const sequence_spec& spec) {
    const auto& rec = spec.as_recurrence();
    const std::size_t k = rec.coefficients.size();
    // First return of the state vector to its initial value. The state map
    // is a bijection (unit trailing coefficient), so the orbit is a pure
    // cycle of length at most m^k.
    const std::int64_t cap = saturating_pow(spec.mod().value(), k);
    sequence_cursor cursor(spec);
    std::vector<std::int64_t> state = rec.initial;
    for (std::size_t i = 0; i < k; ++i)
        cursor.next();
    std::int64_t steps = 0;
    while (true) {
        state.erase(state.begin());
        state.push_back(cursor.next());
        ++steps;
        if (state == rec.initial)
            return steps;
        if (steps >= cap)
            throw error("state never returned within the pigeonhole bound; "
                        "recurrence invariant violated");
    }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw overflow_error(std::string(what) + " exceeds 64-bit range");
    return out;
}

} // namespace

std::int64_t minimal_period(const sequence_spec& spec) {
    if (spec.is_block())
        return block_period(spec.as_block());
    return recurrence_period(spec);
}

period_report predict_sum_period(const sequence_spec& spec) {
    const std::int64_t m = spec.mod().value();
    const std::int64_t p = minimal_period(spec);
    sequence_cursor cursor(spec);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < p; ++i)
        sum = (sum + cursor.next()) % m;
    const residue tail(sum, spec.mod());
    const std::int64_t s = additive_order(tail);
    return period_report{p, tail.value(), s, checked_mul(s, p, "predicted sum period"), m};
}

std::int64_t detected_sum_period(const sequence_spec& spec) {
    const std::int64_t m = spec.mod().value();
    const std::int64_t p = minimal_period(spec);
    const std::int64_t length = checked_mul(2 * m, p, "oracle prefix length");
    std::vector<std::int64_t> sums;
    sums.reserve(static_cast<std::size_t>(length));
    sequence_cursor cursor(spec);
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < length; ++i) {
        acc = (acc + cursor.next()) % m;
        sums.push_back(acc);
    }
    return static_cast<std::int64_t>(least_prefix_period(sums));
}

sequence_spec detail::realize_sum_block(const sequence_spec& spec, const period_report& report,
                                        std::int64_t level_cap) {
    if (report.predicted_sum_period > level_cap)
        throw cap_error("derived level needs " + std::to_string(report.predicted_sum_period) +
                        " terms, over the cap of " + std::to_string(level_cap));
    const std::int64_t m = spec.mod().value();
    std::vector<std::int64_t> sums;
    sums.reserve(static_cast<std::size_t>(report.predicted_sum_period));
    sequence_cursor cursor(spec);
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < report.predicted_sum_period; ++i) {
        acc = (acc + cursor.next()) % m;
        sums.push_back(acc);
    }
    return sequence_spec::block(std::move(sums), spec.mod());
}

chain_report derived_chain(const sequence_spec& spec, int depth, std::int64_t level_cap) {
    chain_report out;
    for (const auto& level : derive(spec, depth, level_cap)) {
        const period_report report = predict_sum_period(level.spec);
        out.levels.push_back(
            {level.level, report.period, report.tail_sum, report.order_multiplier});
    }
    return out;
}

sum_period_invariance check_sum_period_invariance(const sequence_spec& spec) {
    const std::int64_t m = spec.mod().value();
    const std::int64_t p = minimal_period(spec);
    std::int64_t sum = 0;
    for (const std::int64_t term : spec.prefix(static_cast<std::size_t>(p)))
        sum = (sum + term) % m;
    return sum_period_invariance{sum == 0, detected_sum_period(spec) == p};
}

// --- JSON forms -------------------------------------------------------------

namespace {

using nlohmann::json;

std::int64_t integer_field(const json& object, const char* field) {
    if (!object.contains(field) || !object[field].is_number_integer())
        throw spec_error(std::string("expected integer field \"") + field + "\"");
    return object[field].get<std::int64_t>();
}

json parse_object(const std::string& text, const char* what) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw spec_error(std::string("invalid ") + what + " JSON: " + e.what());
    }
    if (!parsed.is_object())
        throw spec_error(std::string(what) + " JSON must be an object");
    return parsed;
}

} // namespace

std::string to_json(const period_report& report) {
    json out;
    out["period"] = report.period;
    out["tail_sum"] = report.tail_sum;
    out["order_multiplier"] = report.order_multiplier;
    out["predicted_sum_period"] = report.predicted_sum_period;
    out["modulus"] = report.modulus;
    return out.dump();
}

period_report period_report_from_json(const std::string& text) {
    const json parsed = parse_object(text, "period report");
    return period_report{integer_field(parsed, "period"), integer_field(parsed, "tail_sum"),
                         integer_field(parsed, "order_multiplier"),
                         integer_field(parsed, "predicted_sum_period"),
                         integer_field(parsed, "modulus")};
}

std::string to_json(const chain_report& report) {
    json levels = json::array();
    for (const auto& level : report.levels) {
        json entry;
        entry["level"] = level.level;
        entry["period"] = level.period;
        entry["tail_sum"] = level.tail_sum;
        entry["multiplier"] = level.multiplier;
        levels.push_back(entry);
    }
    json out;
    out["levels"] = levels;
    return out.dump();
}

chain_report chain_report_from_json(const std::string& text) {
    const json parsed = parse_object(text, "chain report");
    if (!parsed.contains("levels") || !parsed["levels"].is_array())
        throw spec_error("chain report JSON needs an array field \"levels\"");
    chain_report out;
    for (const auto& entry : parsed["levels"]) {
        if (!entry.is_object())
            throw spec_error("chain report levels must be objects");
        out.levels.push_back({static_cast<int>(integer_field(entry, "level")),
                              integer_field(entry, "period"), integer_field(entry, "tail_sum"),
                              integer_field(entry, "multiplier")});
    }
    return out;
}

} // namespace cyclemod
