#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symspan {

// m written greedily as binom(k_1,2) + ... + binom(k_r,2) with
// k_1 >= ... >= k_r >= 2, each k chosen as large as possible against the
// remaining value. nu = k_1 + ... + k_r; m = 0 decomposes into the empty sum
// with nu = 0.
struct GreedyDecomposition {
    std::uint64_t m = 0;
    std::vector<std::uint64_t> ks;
    std::uint64_t nu = 0;
};

GreedyDecomposition nu_decompose(std::uint64_t m);

// U(0..n_max), bottom-up:
//   U(0) = 1,
//   U(n) = n(n-1)/2 + 1 - sum_{j=1}^{n} max(0, phi(j) - U(n - j*floor(n/j))).
std::vector<std::int64_t> compute_u_values(std::uint32_t n_max);

// Number of distinct values d(lambda) over the partitions of n.
std::int64_t compute_e(std::uint32_t n);

// G(n): one less than the least positive integer not of the form d(lambda)
// for lambda of n.
std::int64_t compute_g(std::uint32_t n);

// H(n): the largest N such that nu(m) <= n for every m <= N. The scan is
// capped at m = n^2 + 1; passing that cap means a bug, not a user mistake,
// and raises internal_error.
std::int64_t compute_h(std::uint32_t n);

// Exact decision of nu_value <= sqrt(2m) + 3 m^{1/4}, certified with scaled
// integer roots (no floating point in the decision).
bool nu_bound_holds(std::uint64_t m, std::uint64_t nu_value);

struct NuCheckReport {
    std::uint64_t m_lo = 0;
    std::uint64_t m_hi = 0;
    std::vector<std::uint64_t> violations;   // every m in range failing the bound
    double max_slack = 0.0;                  // informational; decisions are exact
    std::uint64_t max_slack_m = 0;
};

// Verifies nu(m) <= sqrt(2m) + 3 m^{1/4} for every m in [m_lo, m_hi].
// Throws std::invalid_argument when m_lo < 405 (the inequality starts there)
// or the range is empty.
NuCheckReport check_nu_inequality(std::uint64_t m_lo, std::uint64_t m_hi);

// Maximum of nu(m) for 1 <= m < limit and the m attaining it.
std::pair<std::uint64_t, std::uint64_t> nu_max_below(std::uint64_t limit);

// The open-question quantity
//   -D(n) + n(n-1)/2 + 1 - sum_{j=1}^{n} max(0, phi(j) - D(n - j*floor(n/j)))
// evaluated with exact D-values only. d_values must contain D(n) and D(k)
// for every k = n mod j, j = 1..n; missing arguments are listed in the
// thrown std::invalid_argument.
std::int64_t gap_statistic(std::uint32_t n,
                           const std::map<std::uint32_t, std::int64_t>& d_values);

struct AsymptoticsRow {
    std::uint32_t n = 0;
    double h_ratio = 0.0;   // H(n) / (n^2/2)
    double u_ratio = 0.0;   // U(n) / (n^2/2)
    double c_hat = 0.0;     // (n^2/2 - H(n)) / n^{3/2}
};

// Numerical evidence for H(n) ~ n^2/2 and the sandwich around D(n); no
// pass/fail semantics. Rows cover n = 2..n_max; throws on n_max < 2.
struct AsymptoticsReport {
    std::vector<AsymptoticsRow> rows;
    double max_c_hat = 0.0;
    std::uint32_t max_c_hat_n = 0;
};

AsymptoticsReport asymptotics_probe(std::uint32_t n_max);

// One line of the bounds table. D and the gap statistic are optional: they
// are attached only when exact or consensus dimension values are on hand.
struct BoundsRecord {
    std::uint32_t n = 0;
    std::optional<std::int64_t> D;
    std::string d_provenance;   // "exact" | "modular-consensus" | ""
    std::int64_t U = 0;
    std::int64_t E = 0;
    std::int64_t G = 0;
    std::int64_t H = 0;
    mpz_class P;
    std::int64_t eq2 = 0;       // n(n-1)/2 + 1
    std::optional<std::int64_t> gap;
};

// Records for n = 1..n_max without D attached.
std::vector<BoundsRecord> compute_bounds_records(std::uint32_t n_max);

}  // namespace symspan
