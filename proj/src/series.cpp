#include "series.hpp"

#include <stdexcept>
#include <string>

#include "intmath.hpp"

namespace symspan {

std::uint64_t truncation_degree(std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("truncation degree needs n >= 1");
    return binom2(n);
}

namespace {

// in-place multiplication by 1/(1 - q^stride): running prefix addition
template <typename Int>
void divide_by_one_minus_q_pow(std::vector<Int>& coeffs, std::uint64_t stride)
{
    for (std::uint64_t i = stride; i < coeffs.size(); ++i)
        coeffs[i] += coeffs[i - stride];
}

void divide_by_one_minus_q_pow_mod(std::vector<std::uint64_t>& coeffs,
                                   std::uint64_t stride, std::uint64_t p)
{
    for (std::uint64_t i = stride; i < coeffs.size(); ++i)
        coeffs[i] = (coeffs[i] + coeffs[i - stride]) % p;
}

}  // namespace

TruncatedSeries series_row(const Partition& lambda, std::uint64_t truncation)
{
    TruncatedSeries series;
    series.truncation = truncation;
    series.coeffs.assign(truncation + 1, mpz_class(0));
    series.coeffs[0] = 1;
    for (std::uint32_t part : lambda.parts())
        divide_by_one_minus_q_pow(series.coeffs, part);
    return series;
}

std::vector<std::uint64_t> series_modular_row(const Partition& lambda,
                                              std::uint64_t truncation,
                                              std::uint64_t p)
{
    if (p <= 2 || p >= (1ull << 31) || !is_prime_u64(p))
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                    std::to_string(p));
    std::vector<std::uint64_t> coeffs(truncation + 1, 0);
    coeffs[0] = 1 % p;
    for (std::uint32_t part : lambda.parts())
        divide_by_one_minus_q_pow_mod(coeffs, part, p);
    return coeffs;
}

CyclotomicProfile cyclotomic_profile(const Partition& lambda)
{
    CyclotomicProfile profile;
    profile.n = lambda.sum();
    profile.multiplicity.assign(profile.n + 1, 0);
    for (std::uint64_t j = 1; j <= profile.n; ++j)
        for (std::uint32_t part : lambda.parts())
            if (part % j == 0) ++profile.multiplicity[j];
    return profile;
}

TruncatedSeries elementary_specialization_row(const Partition& lambda,
                                              std::uint64_t truncation)
{
    std::uint64_t order = d_statistic(lambda);
    if (truncation < order)
        throw std::invalid_argument(
            "truncation " + std::to_string(truncation) + " is below d(lambda) = " +
            std::to_string(order) + "; the truncated row would be zero");
    TruncatedSeries series;
    series.truncation = truncation;
    series.coeffs.assign(truncation + 1, mpz_class(0));
    series.coeffs[order] = 1;
    // denominator factors (1-q)(1-q^2)...(1-q^{part}) per part; the prefix
    // additions only feed upward, so the order stays exactly d(lambda)
    for (std::uint32_t part : lambda.parts())
        for (std::uint32_t m = 1; m <= part; ++m)
            divide_by_one_minus_q_pow(series.coeffs, m);
    return series;
}

}  // namespace symspan
