#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "intmath.hpp"
#include "partitions.hpp"

namespace symspan {

GreedyDecomposition nu_decompose(std::uint64_t m)
{
    GreedyDecomposition decomposition;
    decomposition.m = m;
    std::uint64_t remaining = m;
    while (remaining > 0) {
        // largest k with binom(k,2) <= remaining, via k = floor((1+sqrt(8m+1))/2)
        std::uint64_t k = (1 + isqrt_u64(8 * remaining + 1)) / 2;
        decomposition.ks.push_back(k);
        decomposition.nu += k;
        remaining -= binom2(k);
    }
    return decomposition;
}

std::vector<std::int64_t> compute_u_values(std::uint32_t n_max)
{
    std::vector<std::int64_t> u(n_max + 1);
    u[0] = 1;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        std::int64_t value = static_cast<std::int64_t>(binom2(n)) + 1;
        for (std::uint32_t j = 1; j <= n; ++j) {
            std::int64_t shortfall =
                static_cast<std::int64_t>(euler_phi(j)) - u[n % j];   // n - j*floor(n/j) = n mod j
            if (shortfall > 0) value -= shortfall;
        }
        u[n] = value;
    }
    return u;
}

namespace {

std::set<std::uint64_t> d_value_set(std::uint32_t n)
{
    std::set<std::uint64_t> values;
    PartitionGenerator gen(n);
    Partition lambda;
    while (gen.next(lambda)) values.insert(d_statistic(lambda));
    return values;
}

}  // namespace

std::int64_t compute_e(std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("E needs n >= 1");
    return static_cast<std::int64_t>(d_value_set(n).size());
}

std::int64_t compute_g(std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("G needs n >= 1");
    std::set<std::uint64_t> values = d_value_set(n);
    std::uint64_t m = 1;
    while (values.count(m)) ++m;
    return static_cast<std::int64_t>(m) - 1;
}

std::int64_t compute_h(std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("H needs n >= 1");
    const std::uint64_t scan_cap = static_cast<std::uint64_t>(n) * n + 1;
    for (std::uint64_t m = 1; m <= scan_cap; ++m)
        if (nu_decompose(m).nu > n) return static_cast<std::int64_t>(m) - 1;
    // nu(m) reaches n+1 well before n^2 + 1; getting here is a logic bug
    throw internal_error("nu scan passed the cap of n^2 + 1 without exceeding n");
}

namespace {

// Decide nu <= sqrt(2m) + 3 m^{1/4} with s fractional bits:
//   S = floor(2^s * sqrt(2m)),  F = floor(2^s * m^{1/4})
// give S + 3F <= 2^s * bound < S + 3F + 4. The comparison is settled unless
// nu*2^s lands in that width-4 window, in which case s doubles. The bound is
// irrational for every m >= 1 (2m a perfect square and m a perfect fourth
// power are mutually exclusive), so the loop terminates.
bool nu_bound_holds_impl(std::uint64_t m, std::uint64_t nu_value, double* slack)
{
    for (unsigned bits = 16;; bits *= 2) {
        mpz_class scaled_2m = mpz_class(2) * mpz_class(m) << (2 * bits);
        mpz_class sqrt_part;
        mpz_sqrt(sqrt_part.get_mpz_t(), scaled_2m.get_mpz_t());

        mpz_class scaled_m = mpz_class(m) << (4 * bits);
        mpz_class fourth_root_part;
        mpz_root(fourth_root_part.get_mpz_t(), scaled_m.get_mpz_t(), 4);

        mpz_class bound_lo = sqrt_part + 3 * fourth_root_part;
        mpz_class scaled_nu = mpz_class(nu_value) << bits;
        if (scaled_nu <= bound_lo) {
            if (slack) {
                mpz_class difference = bound_lo - scaled_nu;
                *slack = mpz_get_d(difference.get_mpz_t()) * std::ldexp(1.0, -static_cast<int>(bits));
            }
            return true;
        }
        if (scaled_nu > bound_lo + 4) {
            if (slack) *slack = 0.0;
            return false;
        }
    }
}

}  // namespace

bool nu_bound_holds(std::uint64_t m, std::uint64_t nu_value)
{
    return nu_bound_holds_impl(m, nu_value, nullptr);
}

NuCheckReport check_nu_inequality(std::uint64_t m_lo, std::uint64_t m_hi)
{
    if (m_lo < 405)
        throw std::invalid_argument("the nu inequality starts at m = 405");
    if (m_hi < m_lo)
        throw std::invalid_argument("empty range for the nu inequality check");
    NuCheckReport report;
    report.m_lo = m_lo;
    report.m_hi = m_hi;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        double slack = 0.0;
        if (!nu_bound_holds_impl(m, nu_decompose(m).nu, &slack)) {
            report.violations.push_back(m);
        } else if (slack > report.max_slack) {
            report.max_slack = slack;
            report.max_slack_m = m;
        }
    }
    return report;
}

std::pair<std::uint64_t, std::uint64_t> nu_max_below(std::uint64_t limit)
{
    if (limit < 2) throw std::invalid_argument("nu maximum needs limit >= 2");
    std::uint64_t best = 0;
    std::uint64_t attained_at = 1;
    for (std::uint64_t m = 1; m < limit; ++m) {
        std::uint64_t value = nu_decompose(m).nu;
        if (value > best) {
            best = value;
            attained_at = m;
        }
    }
    return {best, attained_at};
}

std::int64_t gap_statistic(std::uint32_t n,
                           const std::map<std::uint32_t, std::int64_t>& d_values)
{
    if (n == 0) throw std::invalid_argument("gap statistic needs n >= 1");
    std::string missing;
    auto require = [&](std::uint32_t k) {
        if (!d_values.count(k)) missing += (missing.empty() ? "" : ", ") + std::to_string(k);
    };
    require(n);
    for (std::uint32_t j = 1; j <= n; ++j) require(n % j);
    if (!missing.empty())
        throw std::invalid_argument("gap statistic is missing D-values at: " + missing);

    std::int64_t value = -d_values.at(n) + static_cast<std::int64_t>(binom2(n)) + 1;
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::int64_t shortfall =
            static_cast<std::int64_t>(euler_phi(j)) - d_values.at(n % j);
        if (shortfall > 0) value -= shortfall;
    }
    return value;
}

AsymptoticsReport asymptotics_probe(std::uint32_t n_max)
{
    if (n_max < 2) throw std::invalid_argument("asymptotics probe needs n_max >= 2");
    AsymptoticsReport report;
    std::vector<std::int64_t> u = compute_u_values(n_max);
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        AsymptoticsRow row;
        row.n = n;
        double half_n_squared = 0.5 * static_cast<double>(n) * n;
        double h = static_cast<double>(compute_h(n));
        row.h_ratio = h / half_n_squared;
        row.u_ratio = static_cast<double>(u[n]) / half_n_squared;
        row.c_hat = (half_n_squared - h) / std::pow(static_cast<double>(n), 1.5);
        if (row.c_hat > report.max_c_hat) {
            report.max_c_hat = row.c_hat;
            report.max_c_hat_n = n;
        }
        report.rows.push_back(row);
    }
    return report;
}

std::vector<BoundsRecord> compute_bounds_records(std::uint32_t n_max)
{
    if (n_max == 0) throw std::invalid_argument("bounds table needs n_max >= 1");
    std::vector<std::int64_t> u = compute_u_values(n_max);
    std::vector<BoundsRecord> records;
    records.reserve(n_max);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        BoundsRecord record;
        record.n = n;
        record.U = u[n];
        record.E = compute_e(n);
        record.G = compute_g(n);
        record.H = compute_h(n);
        record.P = count_partitions(n);
        record.eq2 = static_cast<std::int64_t>(binom2(n)) + 1;
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace symspan
