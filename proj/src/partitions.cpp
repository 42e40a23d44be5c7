#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "intmath.hpp"

namespace symspan {

Partition::Partition(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<std::uint32_t> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool enumeration_order_less(const Partition& a, const Partition& b)
{
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

PartitionGenerator::PartitionGenerator(std::uint32_t n)
{
    if (n > 0) current_.push_back(n);
}

bool PartitionGenerator::next(Partition& out)
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = Partition(current_);
        if (current_.empty() || current_.front() == 1) done_ = true;
        return true;
    }
    // Successor in descending lex order: shrink the last part that exceeds 1,
    // then refill greedily with copies of the shrunken value.
    std::size_t i = current_.size();
    std::uint32_t tail = 0;
    while (i > 0 && current_[i - 1] == 1) { ++tail; --i; }
    if (i == 0) { done_ = true; return false; }
    std::uint32_t x = current_[i - 1] - 1;
    std::uint32_t rem = current_[i - 1] + tail;
    current_.resize(i - 1);
    while (rem > 0) {
        std::uint32_t part = std::min(x, rem);
        current_.push_back(part);
        rem -= part;
    }
    out = Partition(current_);
    if (current_.front() == 1) done_ = true;
    return true;
}

std::vector<Partition> enumerate_partitions(std::uint32_t n)
{
    std::vector<Partition> result;
    PartitionGenerator gen(n);
    Partition p;
    while (gen.next(p)) result.push_back(std::move(p));
    return result;
}

mpz_class count_partitions(std::uint32_t n)
{
    std::vector<mpz_class> ways(n + 1);
    ways[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
        for (std::uint32_t m = k; m <= n; ++m)
            ways[m] += ways[m - k];
    return ways[n];
}

std::uint64_t euler_phi(std::uint64_t j)
{
    if (j == 0) throw std::invalid_argument("euler_phi is undefined at 0");
    std::uint64_t result = j;
    std::uint64_t m = j;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::uint64_t d_statistic(const Partition& lambda)
{
    std::uint64_t d = 0;
    for (std::uint32_t part : lambda.parts()) d += binom2(part);
    return d;
}

Partition conjugate(const Partition& lambda)
{
    if (lambda.empty()) return Partition{};
    std::vector<std::uint32_t> transposed(lambda.parts().front());
    for (std::uint32_t part : lambda.parts())
        for (std::uint32_t j = 0; j < part; ++j)
            ++transposed[j];
    return Partition(std::move(transposed));
}

}  // namespace symspan
