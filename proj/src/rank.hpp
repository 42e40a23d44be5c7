#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "partitions.hpp"
#include "series.hpp"

namespace symspan {

inline constexpr std::uint64_t kDefaultMemoryBudgetMiB = 4096;

// The two smallest primes above 2^20; small-prime rank drops are dodged by
// staying above that threshold.
inline constexpr std::uint64_t kDefaultPrimes[2] = {1048583, 1048589};

// Rows are the partitions of n in enumeration order; columns are series
// coefficients 0..n(n-1)/2. The rank of this matrix over the rationals is the
// dimension of the span of the symmetric-power characters of S_n.
struct CoefficientMatrix {
    std::uint32_t n = 0;
    std::uint64_t truncation = 0;
    std::vector<Partition> row_index;
    std::vector<std::vector<mpz_class>> entries;

    std::size_t rows() const noexcept { return entries.size(); }
    std::size_t cols() const noexcept { return truncation + 1; }
};

// Assembles series_row(lambda, n(n-1)/2) for every lambda of n, in
// enumeration order. Throws resource_limit_error when the static size
// estimate exceeds the budget.
CoefficientMatrix build_matrix(std::uint32_t n,
                               std::uint64_t memory_budget_mib = kDefaultMemoryBudgetMiB);

// Rank over the rationals by fraction-free (Bareiss) elimination on exact
// integers. Pivoting is deterministic: columns are processed left to right
// and the pivot is the first remaining row in enumeration order with a
// nonzero entry in the current column. The entries are integers, so the rank
// over Q equals the rank over C of the underlying character table.
std::size_t rank_exact(const CoefficientMatrix& matrix);

// The same elimination on arbitrary integer rows (the rows are consumed).
std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows);

struct ModularRankReport {
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> per_prime;
    std::size_t rank = 0;      // consensus value, or the maximum when inconsistent
    bool consensus = false;    // a modular rank never exceeds the rank over Q,
                               // so even without consensus `rank` is a valid
                               // lower bound for the true rank
};

// Streams modular rows partition by partition into an incremental echelon
// basis per prime; the full matrix is never materialized. Requires at least
// two distinct primes, each above 2^20 (and below 2^31); throws
// std::invalid_argument otherwise.
ModularRankReport rank_modular(std::uint32_t n, std::span<const std::uint64_t> primes);

// A primitive integer vector over the partitions of n asserting
// sum a_lambda f_lambda = 0. Support is kept in enumeration order with all
// coefficients nonzero, gcd 1, and a positive leading coefficient.
struct RelationCertificate {
    std::uint32_t n = 0;
    std::vector<std::pair<Partition, mpz_class>> support;
    bool verified = false;
};

// A basis of the left nullspace (relations among the rows f_lambda) of the
// coefficient matrix, of size P(n) - D(n). Every returned certificate has
// been re-verified by exact row combination.
std::vector<RelationCertificate> nullspace_certificates(
    std::uint32_t n, std::uint64_t memory_budget_mib = kDefaultMemoryBudgetMiB);

// Recomputes sum a_lambda series_row(lambda, n(n-1)/2) exactly; true iff it
// is the zero vector, which proves the corresponding rational-function
// identity (see truncation_degree). Throws std::invalid_argument if the
// support partitions are not all of the certificate's n.
bool verify_certificate(const RelationCertificate& certificate);

// True iff the candidate's coefficient vector lies in the rational span of
// the basis certificates. All certificates must share the same n.
bool certificate_in_span(const std::vector<RelationCertificate>& basis,
                         const RelationCertificate& candidate);

}  // namespace symspan
