#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "errors.hpp"
#include "golden_tables.hpp"
#include "oracles.hpp"
#include "rank.hpp"

using namespace symspan;

namespace {

Partition p(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

RelationCertificate cert(std::uint32_t n,
                         std::vector<std::pair<std::vector<std::uint32_t>, long>> terms)
{
    RelationCertificate certificate;
    certificate.n = n;
    for (auto& [parts, coefficient] : terms)
        certificate.support.emplace_back(p(std::move(parts)), mpz_class(coefficient));
    std::sort(certificate.support.begin(), certificate.support.end(),
              [](const auto& a, const auto& b) {
                  return enumeration_order_less(a.first, b.first);
              });
    return certificate;
}

// first relation of the worked n = 7 example:
//   4 f_{(2,2,1,1,1)} - 3 f_{(3,1,1,1,1)} - f_{(3,2,2)} = 0
RelationCertificate paper_relation_one()
{
    return cert(7, {{{2, 2, 1, 1, 1}, 4}, {{3, 1, 1, 1, 1}, -3}, {{3, 2, 2}, -1}});
}

// second relation: 3 f_{(3,2,1,1)} - 2 f_{(4,1,1,1)} - f_{(4,3)} = 0
RelationCertificate paper_relation_two()
{
    return cert(7, {{{3, 2, 1, 1}, 3}, {{4, 1, 1, 1}, -2}, {{4, 3}, -1}});
}

}  // namespace

TEST_CASE("matrix assembly")
{
    auto one = build_matrix(1);
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one.entries[0][0] == 1);

    auto four = build_matrix(4);
    CHECK(four.rows() == 5);
    CHECK(four.cols() == 7);
    CHECK(four.row_index.front() == p({4}));
    CHECK(four.entries.front() ==
          std::vector<mpz_class>{1, 0, 0, 0, 1, 0, 0});

    auto seven = build_matrix(7);
    CHECK(seven.rows() == 15);
    CHECK(seven.cols() == 22);
    CHECK(rank_exact(seven) == 13);

    for (std::uint32_t n = 1; n <= 10; ++n)
        for (const auto& row : build_matrix(n).entries)
            CHECK(row[0] == 1);   // column 0 is all ones

    CHECK_THROWS_AS(build_matrix(12, 0), resource_limit_error);
    CHECK_THROWS_AS(build_matrix(0), std::invalid_argument);
}

TEST_CASE("exact rank matches the reference dimensions for small n")
{
    for (std::uint32_t n = 1; n <= 12; ++n)
        CHECK(rank_exact(build_matrix(n)) ==
              static_cast<std::size_t>(golden::kTable1[n - 1].D));
}

TEST_CASE("exact rank equals naive rational elimination for n <= 6")
{
    for (std::uint32_t n = 1; n <= 6; ++n) {
        auto matrix = build_matrix(n);
        CHECK(rank_exact(matrix) == oracles::naive_rational_rank(matrix.entries));
    }
}

TEST_CASE("rank never exceeds the column or row count")
{
    for (std::uint32_t n = 1; n <= 12; ++n) {
        std::size_t rank = rank_exact(build_matrix(n));
        CHECK(rank <= static_cast<std::size_t>(n) * (n - 1) / 2 + 1);
        CHECK(mpz_class(rank) <= count_partitions(n));
        // spanning the full partition count happens exactly for n <= 6
        CHECK((mpz_class(rank) == count_partitions(n)) == (n <= 6));
    }
}

TEST_CASE("modular rank")
{
    SUBCASE("consensus at n = 7 with the default primes")
    {
        auto report = rank_modular(7, kDefaultPrimes);
        CHECK(report.per_prime == std::vector<std::size_t>{13, 13});
        CHECK(report.consensus);
        CHECK(report.rank == 13);
    }
    SUBCASE("n = 19 consensus value")
    {
        auto report = rank_modular(19, kDefaultPrimes);
        CHECK(report.consensus);
        CHECK(report.rank == 118);
    }
    SUBCASE("per-prime ranks never exceed the exact rank")
    {
        for (std::uint32_t n = 1; n <= 10; ++n) {
            std::size_t exact = rank_exact(build_matrix(n));
            auto report = rank_modular(n, kDefaultPrimes);
            for (std::size_t r : report.per_prime) CHECK(r <= exact);
        }
    }
    SUBCASE("input validation")
    {
        std::vector<std::uint64_t> one_prime = {1048583};
        CHECK_THROWS_AS(rank_modular(5, one_prime), std::invalid_argument);
        std::vector<std::uint64_t> duplicated = {1048583, 1048583};
        CHECK_THROWS_AS(rank_modular(5, duplicated), std::invalid_argument);
        std::vector<std::uint64_t> not_prime = {1048583, 1048585};
        CHECK_THROWS_AS(rank_modular(5, not_prime), std::invalid_argument);
        std::vector<std::uint64_t> too_small = {5, 1048583};
        CHECK_THROWS_AS(rank_modular(5, too_small), std::invalid_argument);
    }
}

TEST_CASE("nullspace certificates")
{
    SUBCASE("none below n = 7")
    {
        for (std::uint32_t n = 1; n <= 6; ++n)
            CHECK(nullspace_certificates(n).empty());
    }
    SUBCASE("exactly two at n = 7, both verified and normalized")
    {
        auto certificates = nullspace_certificates(7);
        REQUIRE(certificates.size() == 2);
        for (const auto& certificate : certificates) {
            CHECK(certificate.verified);
            CHECK(verify_certificate(certificate));
            REQUIRE(!certificate.support.empty());
            CHECK(certificate.support.front().second > 0);   // leading sign
            mpz_class content = 0;
            for (const auto& [lambda, coefficient] : certificate.support) {
                CHECK(coefficient != 0);
                CHECK(lambda.sum() == 7);
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                        coefficient.get_mpz_t());
            }
            CHECK(content == 1);   // primitive
            for (std::size_t i = 1; i < certificate.support.size(); ++i)
                CHECK(enumeration_order_less(certificate.support[i - 1].first,
                                             certificate.support[i].first));
        }
    }
    SUBCASE("count equals P(n) - D(n) through n = 12")
    {
        for (std::uint32_t n = 1; n <= 12; ++n) {
            auto certificates = nullspace_certificates(n);
            mpz_class expected = count_partitions(n) - rank_exact(build_matrix(n));
            CHECK(mpz_class(certificates.size()) == expected);
            for (const auto& certificate : certificates) CHECK(certificate.verified);
        }
    }
}

TEST_CASE("verifying explicit relations")
{
    CHECK(verify_certificate(paper_relation_one()));
    CHECK(verify_certificate(paper_relation_two()));
    CHECK_FALSE(verify_certificate(cert(7, {{{7}, 1}})));
    CHECK_THROWS_AS(verify_certificate(cert(7, {{{3, 2}, 1}})), std::invalid_argument);
}

TEST_CASE("span membership")
{
    auto basis = nullspace_certificates(7);
    REQUIRE(basis.size() == 2);
    CHECK(certificate_in_span(basis, paper_relation_one()));
    CHECK(certificate_in_span(basis, paper_relation_two()));
    CHECK(certificate_in_span(basis, basis.front()));
    CHECK_FALSE(certificate_in_span(basis, cert(7, {{{7}, 1}})));

    // an integer combination of the basis stays in the span
    RelationCertificate combined;
    combined.n = 7;
    auto index = enumerate_partitions(7);
    std::vector<mpz_class> dense(index.size(), 0);
    for (std::size_t i = 0; i < index.size(); ++i) {
        for (const auto& [lambda, coefficient] : basis[0].support)
            if (lambda == index[i]) dense[i] += 2 * coefficient;
        for (const auto& [lambda, coefficient] : basis[1].support)
            if (lambda == index[i]) dense[i] -= 3 * coefficient;
    }
    for (std::size_t i = 0; i < index.size(); ++i)
        if (dense[i] != 0) combined.support.emplace_back(index[i], dense[i]);
    CHECK(certificate_in_span(basis, combined));
}
