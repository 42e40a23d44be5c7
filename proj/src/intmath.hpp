#pragma once

#include <cstdint>

namespace symspan {

// floor(sqrt(x)), exact for the full 64-bit range.
std::uint64_t isqrt_u64(std::uint64_t x);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

// binom(k, 2) = k(k-1)/2
constexpr std::uint64_t binom2(std::uint64_t k) { return k * (k - 1) / 2; }

}  // namespace symspan
