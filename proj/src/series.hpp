#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "partitions.hpp"

namespace symspan {

// Exact integer coefficients c_0..c_T of a truncated power series.
struct TruncatedSeries {
    std::vector<mpz_class> coeffs;   // size truncation + 1
    std::uint64_t truncation = 0;
};

// Multiplicities of the cyclotomic factors of the denominator of
// 1/prod(1 - q^{lambda_i}): Phi_j divides it exactly as often as j divides a
// part of lambda.
struct CyclotomicProfile {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> multiplicity;   // index j in 1..n; [0] unused

    std::uint64_t at(std::uint64_t j) const { return multiplicity.at(j); }
};

// T = n(n-1)/2, the degree through which series agreement already proves
// identity. Throws std::invalid_argument on n = 0.
//
// Why this truncation is enough: over the common denominator
// Q(q) = (1-q)(1-q^2)...(1-q^n), every f_lambda with lambda of size n has a
// numerator of degree n(n+1)/2 - n = T. Any combination S(q) = sum a_lambda
// f_lambda is then N(q)/Q(q) with deg N <= T, and N = S * Q as power series.
// If the coefficients of S vanish through degree T, then N, having degree at
// most T, vanishes identically, so S = 0 as a rational function. Truncated
// rank therefore equals true rank.
std::uint64_t truncation_degree(std::uint32_t n);

// c_N = number of nonnegative integer solutions of
// lambda_1 x_1 + ... + lambda_k x_k = N, i.e. the coefficients of
// 1/prod(1 - q^{lambda_i}); this is the character of the N-th symmetric power
// of the standard representation evaluated on a lambda-cycle. The empty
// partition gives the constant series 1. One pass of prefix sums with stride
// lambda_i per part, O(k*T) big-integer additions total.
TruncatedSeries series_row(const Partition& lambda, std::uint64_t truncation);

// series_row reduced mod p, computed natively in residues (no big integers).
// p must be an odd prime below 2^31; throws std::invalid_argument otherwise.
std::vector<std::uint64_t> series_modular_row(const Partition& lambda,
                                              std::uint64_t truncation,
                                              std::uint64_t p);

CyclotomicProfile cyclotomic_profile(const Partition& lambda);

// Coefficients of q^{d(lambda)} / prod_i (1-q)(1-q^2)...(1-q^{lambda_i}), the
// principal specialization of the elementary symmetric function e_lambda.
// The lowest nonzero term sits at degree exactly d(lambda). Throws
// std::invalid_argument if truncation < d(lambda), where the row would be
// identically zero.
TruncatedSeries elementary_specialization_row(const Partition& lambda,
                                              std::uint64_t truncation);

}  // namespace symspan
