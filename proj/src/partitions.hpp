#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace symspan {

// A partition of n: weakly decreasing positive parts. The empty partition is
// the unique partition of 0. The part list is the canonical form, so two
// partitions are equal iff their lists are equal.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<std::uint32_t> parts);

    // Canonicalizes first (sorts descending); rejects zero parts.
    static Partition from_unsorted(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    std::uint64_t sum() const noexcept { return sum_; }
    std::size_t part_count() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::uint32_t> parts_;
    std::uint64_t sum_ = 0;
};

// True iff a comes before b in the enumeration order used everywhere in this
// library: descending lexicographic on part lists, (n) first, (1,...,1) last.
bool enumeration_order_less(const Partition& a, const Partition& b);

// Streams the partitions of n in enumeration order without materializing the
// whole list.
class PartitionGenerator {
public:
    explicit PartitionGenerator(std::uint32_t n);

    // Writes the next partition into out; false once exhausted.
    bool next(Partition& out);

private:
    std::vector<std::uint32_t> current_;
    bool started_ = false;
    bool done_ = false;
};

// All partitions of n in enumeration order.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

// P(n), exact.
mpz_class count_partitions(std::uint32_t n);

// Euler totient by trial division. Throws std::invalid_argument on j = 0.
std::uint64_t euler_phi(std::uint64_t j);

// d(lambda) = sum_i binom(lambda_i, 2)
std::uint64_t d_statistic(const Partition& lambda);

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& lambda);

}  // namespace symspan
