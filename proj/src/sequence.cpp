#include "cyclemod/sequence.hpp"

#include <json.hpp>

#include <numeric>
#include <string>
#include <utility>

#include "cyclemod/period.hpp"

namespace cyclemod {

namespace {

std::vector<std::int64_t> reduce_all(std::vector<std::int64_t> values, modulus m) {
    for (auto& v : values) {
        v %= m.value();
        if (v < 0)
            v += m.value();
    }
    return values;
}

} // namespace

sequence_spec::sequence_spec(modulus m, std::variant<recurrence_kind, block_kind> kind)
    : mod_(m), kind_(std::move(kind)) {}

sequence_spec sequence_spec::recurrence(std::vector<std::int64_t> coefficients,
                                        std::vector<std::int64_t> initial, modulus m) {
    if (coefficients.empty())
        throw invariant_error("recurrence needs at least one coefficient");
    if (coefficients.size() != initial.size())
        throw invariant_error("recurrence needs as many initial values as coefficients");
    coefficients = reduce_all(std::move(coefficients), m);
    initial = reduce_all(std::move(initial), m);
    // Unit trailing coefficient <=> invertible state map <=> purely periodic.
    if (std::gcd(coefficients.back(), m.value()) != 1)
        throw invariant_error("trailing coefficient " + std::to_string(coefficients.back()) +
                              " is not a unit mod " + std::to_string(m.value()));
    return sequence_spec(m, recurrence_kind{std::move(coefficients), std::move(initial)});
}

sequence_spec sequence_spec::block(std::vector<std::int64_t> entries, modulus m) {
    if (entries.empty())
        throw invariant_error("block must be non-empty");
    return sequence_spec(m, block_kind{reduce_all(std::move(entries), m)});
}

std::vector<std::int64_t> sequence_spec::prefix(std::size_t n) const {
    std::vector<std::int64_t> out;
    out.reserve(n);
    sequence_cursor cursor(*this);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(cursor.next());
    return out;
}

sequence_cursor::sequence_cursor(const sequence_spec& spec) : spec_(&spec) {
    if (spec.is_recurrence())
        window_ = spec.as_recurrence().initial;
}

std::int64_t sequence_cursor::next() {
    if (spec_->is_block()) {
        const auto& entries = spec_->as_block().residues;
        return entries[pos_++ % entries.size()];
    }
    const auto& rec = spec_->as_recurrence();
    const std::size_t k = rec.coefficients.size();
    if (pos_ < k)
        return window_[pos_++];
    // window_ holds x_{n-k}..x_{n-1} as a ring buffer with oldest_ at x_{n-k};
    // c_1 pairs with the newest entry. Each product is < 2^62 (m <= 2^31) and
    // the accumulator is reduced per step, so nothing overflows.
    const std::int64_t m = spec_->mod().value();
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t term = window_[(oldest_ + k - 1 - i) % k];
        acc = (acc + rec.coefficients[i] * term) % m;
    }
    window_[oldest_] = acc;
    oldest_ = (oldest_ + 1) % k;
    ++pos_;
    return acc;
}

sequence_spec make_general_fibonacci(std::int64_t a, std::int64_t b, modulus m) {
    return sequence_spec::recurrence({1, 1}, {a, b}, m);
}

sequence_spec make_block(std::vector<std::int64_t> entries, modulus m) {
    return sequence_spec::block(std::move(entries), m);
}

std::vector<std::int64_t> prefix(const sequence_spec& spec, std::size_t n) {
    return spec.prefix(n);
}

sequence_spec partial_sum(const sequence_spec& spec, std::int64_t level_cap) {
    const period_report report = predict_sum_period(spec);
    return detail::realize_sum_block(spec, report, level_cap);
}

std::vector<derivation_level> derive(const sequence_spec& spec, int depth,
                                     std::int64_t level_cap) {
    if (depth < 0)
        throw invariant_error("derivation depth must be >= 0");
    std::vector<derivation_level> levels;
    levels.reserve(static_cast<std::size_t>(depth) + 1);
    levels.push_back({spec, 0, spec});
    for (int i = 1; i <= depth; ++i)
        levels.push_back({spec, i, partial_sum(levels.back().spec, level_cap)});
    return levels;
}

// --- JSON form ------------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<std::int64_t> integer_array(const json& value, const std::string& field) {
    if (!value.is_array())
        throw spec_error("field \"" + field + "\" must be an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number_integer())
            throw spec_error("field \"" + field + "\" must contain only integers");
        out.push_back(item.get<std::int64_t>());
    }
    return out;
}

} // namespace

std::string sequence_spec::to_json() const {
    json out;
    out["m"] = mod_.value();
    if (is_recurrence()) {
        out["kind"] = "recurrence";
        out["coefficients"] = as_recurrence().coefficients;
        out["initial"] = as_recurrence().initial;
    } else {
        out["kind"] = "block";
        out["block"] = as_block().residues;
    }
    return out.dump();
}

sequence_spec sequence_spec::from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw spec_error(std::string("invalid spec JSON: ") + e.what());
    }
    if (!parsed.is_object())
        throw spec_error("spec JSON must be an object");
    if (!parsed.contains("m") || !parsed["m"].is_number_integer())
        throw spec_error("spec JSON needs an integer field \"m\"");
    if (!parsed.contains("kind") || !parsed["kind"].is_string())
        throw spec_error("spec JSON needs a string field \"kind\"");

    const std::string kind = parsed["kind"].get<std::string>();
    std::vector<std::string> allowed = {"m", "kind"};
    if (kind == "recurrence") {
        allowed.insert(allowed.end(), {"coefficients", "initial"});
    } else if (kind == "block") {
        allowed.push_back("block");
    } else {
        throw spec_error("unknown kind \"" + kind + "\" (expected \"recurrence\" or \"block\")");
    }
    for (const auto& [key, value] : parsed.items()) {
        (void)value;
        bool known = false;
        for (const auto& name : allowed)
            known = known || key == name;
        if (!known)
            throw spec_error("unknown field \"" + key + "\" in spec JSON");
    }

    const modulus m(parsed["m"].get<std::int64_t>());
    if (kind == "recurrence") {
        if (!parsed.contains("coefficients") || !parsed.contains("initial"))
            throw spec_error("recurrence spec needs \"coefficients\" and \"initial\"");
        return sequence_spec::recurrence(integer_array(parsed["coefficients"], "coefficients"),
                                         integer_array(parsed["initial"], "initial"), m);
    }
    if (!parsed.contains("block"))
        throw spec_error("block spec needs \"block\"");
    return sequence_spec::block(integer_array(parsed["block"], "block"), m);
}

} // namespace cyclemod
