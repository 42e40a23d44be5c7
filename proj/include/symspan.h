/*
 * symspan - exact dimensions, bounds, and relation certificates for the span
 * of symmetric-power characters of the symmetric group.
 *
 * C interface of the shared library. All functions return a symspan_status;
 * results come back through out-parameters. Objects returned through handle
 * or string out-parameters are owned by the caller and released with the
 * matching *_free function. On failure, symspan_last_error() carries a
 * detail message for the current thread.
 */
#ifndef SYMSPAN_H
#define SYMSPAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SYMSPAN_API __declspec(dllexport)
#else
#define SYMSPAN_API __attribute__((visibility("default")))
#endif

typedef enum symspan_status {
    SYMSPAN_OK = 0,
    SYMSPAN_INVALID_ARGUMENT = 1,
    SYMSPAN_RESOURCE_LIMIT = 2,
    SYMSPAN_VERIFY_FAILED = 3,
    SYMSPAN_INTERNAL_ERROR = 4
} symspan_status;

SYMSPAN_API const char* symspan_version(void);
SYMSPAN_API const char* symspan_status_name(symspan_status status);

/* Detail message of the most recent failing call on this thread; empty string
 * when the last call succeeded. The pointer stays valid until the next
 * library call on the same thread. */
SYMSPAN_API const char* symspan_last_error(void);

SYMSPAN_API void symspan_string_free(char* s);
SYMSPAN_API void symspan_string_array_free(char** strings, size_t count);
SYMSPAN_API void symspan_u64_array_free(uint64_t* values);

/* ---------------- partitions and characters ---------------- */

/* P(n) as a decimal string. */
SYMSPAN_API symspan_status symspan_count_partitions(uint32_t n, char** out_decimal);

SYMSPAN_API symspan_status symspan_euler_phi(uint64_t j, uint64_t* out_phi);

/* n(n-1)/2; series agreement through this degree proves identity. */
SYMSPAN_API symspan_status symspan_truncation_degree(uint32_t n, uint64_t* out_degree);

/* Character of the N-th symmetric power of the standard representation on a
 * lambda-cycle, for N = 0..max_degree, as decimal strings. parts may arrive
 * unsorted (they are canonicalized); zero parts are rejected. out_sorted, when
 * nonzero on return, tells the caller the input needed reordering. */
SYMSPAN_API symspan_status symspan_character_values(const uint32_t* parts,
                                                    size_t part_count,
                                                    uint64_t max_degree,
                                                    int* out_sorted,
                                                    char*** out_values,
                                                    size_t* out_count);

/* ---------------- dimension D(n) ---------------- */

/* Rank of the full partition-by-coefficient matrix by exact fraction-free
 * elimination. memory_budget_mib gates the matrix assembly. */
SYMSPAN_API symspan_status symspan_rank_exact(uint32_t n,
                                              uint64_t memory_budget_mib,
                                              int64_t* out_rank);

/* Rank mod each given prime (at least two distinct primes in (2^20, 2^31)),
 * streamed row by row. out_per_prime (optional, capacity prime_count)
 * receives the individual ranks; out_rank the consensus value, or the
 * maximum when the primes disagree (out_consensus reports which; the maximum
 * is still a valid lower bound for the true rank). Pass primes = NULL with
 * prime_count = 0 for the built-in defaults (the two smallest primes above
 * 2^20). */
SYMSPAN_API symspan_status symspan_rank_modular(uint32_t n,
                                                const uint64_t* primes,
                                                size_t prime_count,
                                                int64_t* out_per_prime,
                                                int64_t* out_rank,
                                                int* out_consensus);

/* ---------------- bounds ---------------- */

typedef struct symspan_bounds symspan_bounds;

/* U, E, G, H, P, n(n-1)/2+1 for n = 1..n_max. */
SYMSPAN_API symspan_status symspan_bounds_compute(uint32_t n_max, symspan_bounds** out);
SYMSPAN_API void symspan_bounds_free(symspan_bounds* bounds);
SYMSPAN_API symspan_status symspan_bounds_row(const symspan_bounds* bounds,
                                              uint32_t n,
                                              int64_t* out_u,
                                              int64_t* out_e,
                                              int64_t* out_g,
                                              int64_t* out_h,
                                              int64_t* out_eq2,
                                              char** out_p_decimal);

/* The open-question quantity
 *   -D(n) + n(n-1)/2 + 1 - sum_j max(0, phi(j) - D(n - j*floor(n/j))),
 * evaluated from exact D-values. d_values[k] = D(k) for k = 0..d_count-1;
 * d_count must exceed n. */
SYMSPAN_API symspan_status symspan_gap_statistic(uint32_t n,
                                                 const int64_t* d_values,
                                                 size_t d_count,
                                                 int64_t* out_gap);

/* Evidence table for n = 2..n_max: H(n)/(n^2/2), U(n)/(n^2/2), and
 * (n^2/2 - H(n))/n^{3/2}. Arrays hold n_max - 1 entries; any may be NULL. */
SYMSPAN_API symspan_status symspan_asymptotics(uint32_t n_max,
                                               double* out_h_ratio,
                                               double* out_u_ratio,
                                               double* out_c_hat,
                                               double* out_max_c_hat);

/* ---------------- greedy nu decompositions ---------------- */

/* m = binom(k_1,2) + ... + binom(k_r,2) greedily; nu = sum k_i. */
SYMSPAN_API symspan_status symspan_nu_decompose(uint64_t m,
                                                uint64_t** out_ks,
                                                size_t* out_count,
                                                uint64_t* out_nu);

/* Exact check of nu(m) <= sqrt(2m) + 3 m^{1/4} over [m_lo, m_hi]; m_lo must
 * be at least 405. out_first_violation is set only when violations exist. */
SYMSPAN_API symspan_status symspan_nu_verify_range(uint64_t m_lo,
                                                   uint64_t m_hi,
                                                   uint64_t* out_violation_count,
                                                   uint64_t* out_first_violation,
                                                   double* out_max_slack);

/* Maximum of nu(m) over 1 <= m < limit and the m attaining it. */
SYMSPAN_API symspan_status symspan_nu_max_below(uint64_t limit,
                                                uint64_t* out_max_nu,
                                                uint64_t* out_attained_at);

/* ---------------- relation certificates ---------------- */

typedef struct symspan_relations symspan_relations;

/* Basis of the left nullspace of the coefficient matrix: P(n) - D(n)
 * certificates, each re-verified by exact row combination. */
SYMSPAN_API symspan_status symspan_relations_compute(uint32_t n,
                                                     uint64_t memory_budget_mib,
                                                     symspan_relations** out);
SYMSPAN_API void symspan_relations_free(symspan_relations* relations);
SYMSPAN_API size_t symspan_relations_count(const symspan_relations* relations);
SYMSPAN_API int symspan_relations_all_verified(const symspan_relations* relations);

/* Serializes to
 * {"n": int, "relations": [{"terms": [{"partition": [int...], "coeff": int}...],
 *  "verified": bool}...]}
 * with terms in partition-enumeration order. */
SYMSPAN_API symspan_status symspan_relations_to_json(const symspan_relations* relations,
                                                     char** out_json);

/* Parses a document in the same schema and checks each of its relations:
 * exact verification and membership in the span of this basis. */
SYMSPAN_API symspan_status symspan_relations_check_json(const symspan_relations* relations,
                                                        const char* json_document,
                                                        int* out_all_verified,
                                                        int* out_all_in_span);

#ifdef __cplusplus
}
#endif

#endif /* SYMSPAN_H */
