#pragma once

// Deterministic random-spec corpus shared by the verify sweeps.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclemod/sequence.hpp"

namespace cyclemod {

struct fuzz_options {
    std::uint64_t seed = 0;
    std::int64_t cases = 10'000;
    std::int64_t max_modulus = 60;
    std::int64_t max_block_length = 12;
};

/// Reproducible corpus: even indices draw repeating blocks of length up to
/// max_block_length, odd indices draw Fibonacci-type recurrences with random
/// initial values; moduli are uniform in [2, max_modulus]. The same seed
/// yields the same corpus on every platform (raw engine draws, no
/// distribution objects).
inline std::vector<sequence_spec> random_spec_corpus(const fuzz_options& options) {
    std::mt19937_64 rng(options.seed);
    const auto draw = [&rng](std::int64_t bound) {
        return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
    };
    std::vector<sequence_spec> out;
    out.reserve(static_cast<std::size_t>(options.cases > 0 ? options.cases : 0));
    for (std::int64_t i = 0; i < options.cases; ++i) {
        const modulus m(2 + draw(options.max_modulus - 1));
        if (i % 2 == 0) {
            std::vector<std::int64_t> entries(
                static_cast<std::size_t>(1 + draw(options.max_block_length)));
            for (auto& entry : entries)
                entry = draw(m.value());
            out.push_back(make_block(std::move(entries), m));
        } else {
            out.push_back(make_general_fibonacci(draw(m.value()), draw(m.value()), m));
        }
    }
    return out;
}

} // namespace cyclemod
