#include "cyclemod/fibonacci.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "cyclemod/parallel.hpp"
#include "cyclemod/period.hpp"
#include "cyclemod/sequence.hpp"

namespace cyclemod {

mpz_class binomial_exact(std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw invariant_error("binomial_exact requires n >= 0");
    if (k < 0 || k > n)
        return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

/// S^level F(a,b)_0..n as one table: the base terms followed by `level`
/// in-place prefix-sum passes.
std::vector<mpz_class> derived_fib_table(const fib_pair& pair, std::int64_t level,
                                         std::int64_t n) {
    std::vector<mpz_class> terms(static_cast<std::size_t>(n) + 1);
    terms[0] = pair.a;
    if (n >= 1)
        terms[1] = pair.b;
    for (std::size_t i = 2; i < terms.size(); ++i)
        terms[i] = terms[i - 1] + terms[i - 2];
    for (std::int64_t pass = 0; pass < level; ++pass)
        for (std::size_t i = 1; i < terms.size(); ++i)
            terms[i] += terms[i - 1];
    return terms;
}

} // namespace

mpz_class general_fib_term(const fib_pair& pair, std::int64_t n) {
    return derived_fib_term(pair, 0, n);
}

mpz_class derived_fib_term(const fib_pair& pair, std::int64_t level, std::int64_t n) {
    if (level < 0 || n < 0)
        throw invariant_error("derived_fib_term requires level >= 0 and n >= 0");
    return derived_fib_table(pair, level, n).back();
}

mpz_class derived_fib_closed_form(const fib_pair& pair, std::int64_t level, std::int64_t n) {
    if (level < 1)
        throw invariant_error("closed form needs level >= 1");
    return derived_fib_term(pair, level - 1, n + 2) - binomial_exact(n + level, level - 2) * pair.a -
           binomial_exact(n + level, level - 1) * pair.b;
}

mpz_class derived_fib_polynomial_form(const fib_pair& pair, std::int64_t level, std::int64_t n) {
    if (n < 0)
        throw invariant_error("polynomial form requires n >= 0");
    const mpz_class previous = level >= 2 && level <= 4
                                   ? derived_fib_term(pair, level - 1, n + 2)
                                   : mpz_class(0);
    switch (level) {
    case 2:
        return previous - pair.a - (n + 2) * pair.b;
    case 3:
        return previous - (n + 3) * pair.a - ((n + 2) * (n + 3) / 2) * pair.b;
    case 4:
        return previous - ((n + 3) * (n + 4) / 2) * pair.a -
               ((n + 2) * (n + 3) * (n + 4) / 6) * pair.b;
    default:
        throw invariant_error("polynomial form covers levels 2..4 only");
    }
}

mpz_class derived_fib_at_one(const fib_pair& pair, std::int64_t j) {
    if (j < 1)
        throw invariant_error("derived_fib_at_one requires j >= 1");
    return (j - 1) * pair.a + pair.b;
}

std::pair<bool, bool> pascal_sum_identities(std::int64_t j, std::int64_t n) {
    if (j < 1 || n < 0)
        throw invariant_error("pascal_sum_identities requires j >= 1 and n >= 0");
    mpz_class lower_sum = 0;
    mpz_class upper_sum = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        lower_sum += binomial_exact(k + j, j - 2);
        upper_sum += binomial_exact(k + j, j - 1);
    }
    const bool first = j + lower_sum == binomial_exact(n + j + 1, j - 1);
    const bool second = 1 + upper_sum == binomial_exact(n + j + 1, j);
    return {first, second};
}

pisano_record pisano(modulus m) {
    const std::int64_t pi = minimal_period(make_general_fibonacci(0, 1, m));
    return pisano_record{m.value(), pi, pi == 6 * m.value()};
}

std::int64_t lucas_period(modulus m) {
    return minimal_period(make_general_fibonacci(2, 1, m));
}

std::vector<pisano_record> pisano_table(std::int64_t lo, std::int64_t hi, int jobs) {
    if (lo < 2 || hi < lo)
        throw invariant_error("pisano range must satisfy 2 <= lo <= hi");
    std::vector<pisano_record> records(static_cast<std::size_t>(hi - lo + 1));
    parallel_for_index(hi - lo + 1, jobs, [&](std::int64_t i) {
        records[static_cast<std::size_t>(i)] = pisano(modulus(lo + i));
    });
    return records;
}

std::string pisano_csv(const std::vector<pisano_record>& records) {
    std::ostringstream out;
    out << "m,pi,ratio6m_equal\n";
    for (const auto& record : records)
        out << record.m << ',' << record.pi << ',' << (record.ratio_times_6m ? "true" : "false")
            << '\n';
    return out.str();
}

std::string pisano_json(const std::vector<pisano_record>& records) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& record : records) {
        nlohmann::json entry;
        entry["m"] = record.m;
        entry["pi"] = record.pi;
        entry["ratio_times_6m"] = record.ratio_times_6m;
        out.push_back(entry);
    }
    return out.dump();
}

freyd_brown_report freyd_brown_scan(std::int64_t m_max, int jobs) {
    if (m_max < 2)
        throw invariant_error("freyd_brown_scan requires m_max >= 2");
    struct per_m {
        std::int64_t pi = 0;
        std::int64_t lucas = 0;
    };
    std::vector<per_m> measured(static_cast<std::size_t>(m_max - 1));
    parallel_for_index(m_max - 1, jobs, [&](std::int64_t i) {
        const modulus m(2 + i);
        measured[static_cast<std::size_t>(i)] = {pisano(m).pi, lucas_period(m)};
    });

    freyd_brown_report report;
    report.m_max = m_max;
    for (std::int64_t m = 2; m <= m_max; ++m) {
        const auto& entry = measured[static_cast<std::size_t>(m - 2)];
        if (entry.pi == 6 * m)
            report.fibonacci_equalities.push_back(m);
        else if (entry.pi > 6 * m)
            report.fibonacci_violations.push_back(m);
        if (entry.lucas == 4 * m)
            report.lucas_equalities.push_back(m);
        else if (entry.lucas > 4 * m)
            report.lucas_violations.push_back(m);
    }
    return report;
}

} // namespace cyclemod
