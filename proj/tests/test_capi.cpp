#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "golden_tables.hpp"
#include "symspan.h"

namespace {

std::string take_string(char* s)
{
    std::string copy = s ? s : "";
    symspan_string_free(s);
    return copy;
}

}  // namespace

TEST_CASE("version and status names")
{
    CHECK(symspan_version() != nullptr);
    CHECK(std::strcmp(symspan_status_name(SYMSPAN_OK), "ok") == 0);
    CHECK(std::strcmp(symspan_status_name(SYMSPAN_RESOURCE_LIMIT), "resource limit") == 0);
}

TEST_CASE("partition counts and phi")
{
    char* decimal = nullptr;
    REQUIRE(symspan_count_partitions(7, &decimal) == SYMSPAN_OK);
    CHECK(take_string(decimal) == "15");
    REQUIRE(symspan_count_partitions(23, &decimal) == SYMSPAN_OK);
    CHECK(take_string(decimal) == "1255");

    uint64_t phi = 0;
    REQUIRE(symspan_euler_phi(12, &phi) == SYMSPAN_OK);
    CHECK(phi == 4);
    CHECK(symspan_euler_phi(0, &phi) == SYMSPAN_INVALID_ARGUMENT);
    CHECK(std::string(symspan_last_error()).find("undefined") != std::string::npos);
}

TEST_CASE("truncation degree")
{
    uint64_t degree = 0;
    REQUIRE(symspan_truncation_degree(7, &degree) == SYMSPAN_OK);
    CHECK(degree == 21);
    CHECK(symspan_truncation_degree(0, &degree) == SYMSPAN_INVALID_ARGUMENT);
}

TEST_CASE("character values")
{
    const uint32_t parts[] = {1, 1, 1};
    char** values = nullptr;
    size_t count = 0;
    int sorted = -1;
    REQUIRE(symspan_character_values(parts, 3, 3, &sorted, &values, &count) == SYMSPAN_OK);
    REQUIRE(count == 4);
    CHECK(sorted == 0);
    CHECK(std::string(values[0]) == "1");
    CHECK(std::string(values[1]) == "3");
    CHECK(std::string(values[2]) == "6");
    CHECK(std::string(values[3]) == "10");
    symspan_string_array_free(values, count);

    // unsorted input is canonicalized and flagged
    const uint32_t unsorted[] = {2, 3};
    REQUIRE(symspan_character_values(unsorted, 2, 2, &sorted, &values, &count) == SYMSPAN_OK);
    CHECK(sorted == 1);
    symspan_string_array_free(values, count);

    const uint32_t zero_part[] = {3, 0};
    CHECK(symspan_character_values(zero_part, 2, 2, &sorted, &values, &count) ==
          SYMSPAN_INVALID_ARGUMENT);
}

TEST_CASE("exact and modular rank")
{
    int64_t rank = 0;
    REQUIRE(symspan_rank_exact(7, 4096, &rank) == SYMSPAN_OK);
    CHECK(rank == 13);

    CHECK(symspan_rank_exact(12, 0, &rank) == SYMSPAN_RESOURCE_LIMIT);
    CHECK(std::string(symspan_last_error()).find("budget") != std::string::npos);

    int64_t per_prime[2] = {0, 0};
    int consensus = 0;
    REQUIRE(symspan_rank_modular(7, nullptr, 0, per_prime, &rank, &consensus) == SYMSPAN_OK);
    CHECK(rank == 13);
    CHECK(consensus == 1);
    CHECK(per_prime[0] == 13);
    CHECK(per_prime[1] == 13);

    const uint64_t bad_primes[] = {4u, 6u};
    CHECK(symspan_rank_modular(7, bad_primes, 2, nullptr, &rank, &consensus) ==
          SYMSPAN_INVALID_ARGUMENT);
}

TEST_CASE("bounds table")
{
    symspan_bounds* bounds = nullptr;
    REQUIRE(symspan_bounds_compute(23, &bounds) == SYMSPAN_OK);
    for (int i = 0; i < golden::kMaxN; ++i) {
        uint32_t n = static_cast<uint32_t>(golden::kTable2[i].n);
        int64_t u = 0, e = 0, g = 0, h = 0, eq2 = 0;
        char* p_decimal = nullptr;
        REQUIRE(symspan_bounds_row(bounds, n, &u, &e, &g, &h, &eq2, &p_decimal) == SYMSPAN_OK);
        CHECK(u == golden::kTable1[i].U);
        CHECK(e == golden::kTable2[i].E);
        CHECK(h == golden::kTable2[i].H);
        CHECK(eq2 == golden::kTable1[i].eq2);
        CHECK(take_string(p_decimal) == std::to_string(golden::kTable1[i].P));
    }
    int64_t u = 0;
    CHECK(symspan_bounds_row(bounds, 24, &u, nullptr, nullptr, nullptr, nullptr, nullptr) ==
          SYMSPAN_INVALID_ARGUMENT);
    symspan_bounds_free(bounds);
}

TEST_CASE("gap statistic")
{
    std::vector<int64_t> d_values(24);
    d_values[0] = 1;
    for (int i = 0; i < golden::kMaxN; ++i) d_values[i + 1] = golden::kTable1[i].D;
    int64_t gap = 0;
    REQUIRE(symspan_gap_statistic(6, d_values.data(), d_values.size(), &gap) == SYMSPAN_OK);
    CHECK(gap == 0);
    REQUIRE(symspan_gap_statistic(19, d_values.data(), d_values.size(), &gap) == SYMSPAN_OK);
    CHECK(gap == 1);
    CHECK(symspan_gap_statistic(25, d_values.data(), d_values.size(), &gap) ==
          SYMSPAN_INVALID_ARGUMENT);
}

TEST_CASE("asymptotics probe")
{
    std::vector<double> c_hat(22);
    double max_c_hat = 0.0;
    REQUIRE(symspan_asymptotics(23, nullptr, nullptr, c_hat.data(), &max_c_hat) == SYMSPAN_OK);
    CHECK(c_hat.back() == doctest::Approx(1.346).epsilon(1e-3));
    CHECK(max_c_hat > 0.0);
}

TEST_CASE("nu functions")
{
    uint64_t* ks = nullptr;
    size_t count = 0;
    uint64_t nu = 0;
    REQUIRE(symspan_nu_decompose(26, &ks, &count, &nu) == SYMSPAN_OK);
    REQUIRE(count == 4);
    CHECK(ks[0] == 7);
    CHECK(ks[1] == 3);
    CHECK(ks[2] == 2);
    CHECK(ks[3] == 2);
    CHECK(nu == 14);
    symspan_u64_array_free(ks);

    uint64_t violations = 1;
    uint64_t first = 0;
    double slack = 0.0;
    REQUIRE(symspan_nu_verify_range(405, 2000, &violations, &first, &slack) == SYMSPAN_OK);
    CHECK(violations == 0);
    CHECK(symspan_nu_verify_range(404, 2000, &violations, &first, &slack) ==
          SYMSPAN_INVALID_ARGUMENT);

    uint64_t max_nu = 0, attained_at = 0;
    REQUIRE(symspan_nu_max_below(405, &max_nu, &attained_at) == SYMSPAN_OK);
    CHECK(max_nu == 42);
    CHECK(attained_at == 404);
}

TEST_CASE("relations: compute, serialize, check")
{
    symspan_relations* relations = nullptr;
    REQUIRE(symspan_relations_compute(7, 4096, &relations) == SYMSPAN_OK);
    CHECK(symspan_relations_count(relations) == 2);
    CHECK(symspan_relations_all_verified(relations) == 1);

    char* serialized = nullptr;
    REQUIRE(symspan_relations_to_json(relations, &serialized) == SYMSPAN_OK);
    std::string text = take_string(serialized);

    auto document = nlohmann::json::parse(text);
    CHECK(document["n"] == 7);
    REQUIRE(document["relations"].size() == 2);
    for (const auto& relation : document["relations"]) {
        CHECK(relation["verified"] == true);
        CHECK(relation["terms"].is_array());
        for (const auto& term : relation["terms"]) {
            CHECK(term["partition"].is_array());
            CHECK(term["coeff"].is_number_integer());
        }
    }

    // the two relations of the worked n = 7 example, as a check document
    nlohmann::json check_doc = {
        {"n", 7},
        {"relations",
         {{{"terms",
            {{{"partition", {2, 2, 1, 1, 1}}, {"coeff", 4}},
             {{"partition", {3, 1, 1, 1, 1}}, {"coeff", -3}},
             {{"partition", {3, 2, 2}}, {"coeff", -1}}}}},
          {{"terms",
            {{{"partition", {3, 2, 1, 1}}, {"coeff", 3}},
             {{"partition", {4, 1, 1, 1}}, {"coeff", -2}},
             {{"partition", {4, 3}}, {"coeff", -1}}}}}}}};
    int all_verified = 0, all_in_span = 0;
    REQUIRE(symspan_relations_check_json(relations, check_doc.dump().c_str(),
                                         &all_verified, &all_in_span) == SYMSPAN_OK);
    CHECK(all_verified == 1);
    CHECK(all_in_span == 1);

    // a corrupted coefficient no longer verifies
    check_doc["relations"][0]["terms"][0]["coeff"] = 5;
    REQUIRE(symspan_relations_check_json(relations, check_doc.dump().c_str(),
                                         &all_verified, &all_in_span) == SYMSPAN_OK);
    CHECK(all_verified == 0);

    CHECK(symspan_relations_check_json(relations, "{not json",
                                       &all_verified, &all_in_span) ==
          SYMSPAN_INVALID_ARGUMENT);
    nlohmann::json wrong_n = {{"n", 8}, {"relations", nlohmann::json::array()}};
    CHECK(symspan_relations_check_json(relations, wrong_n.dump().c_str(),
                                       &all_verified, &all_in_span) ==
          SYMSPAN_INVALID_ARGUMENT);

    symspan_relations_free(relations);

    symspan_relations* empty = nullptr;
    REQUIRE(symspan_relations_compute(6, 4096, &empty) == SYMSPAN_OK);
    CHECK(symspan_relations_count(empty) == 0);
    symspan_relations_free(empty);
}
