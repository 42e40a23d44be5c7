#include "intmath.hpp"

#include <cmath>
#include <initializer_list>

namespace symspan {

std::uint64_t isqrt_u64(std::uint64_t x)
{
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    // correct the double rounding; squares go through 128 bits near 2^64
    while (static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t x)
{
    if (x < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set decides primality for everything below 3.3 * 10^24
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t v = powmod(a, d, x);
        if (v == 1 || v == x - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            v = mulmod(v, v, x);
            if (v == x - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace symspan
