#include "symspan.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "errors.hpp"
#include "partitions.hpp"
#include "rank.hpp"
#include "series.hpp"

using json = nlohmann::ordered_json;

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
symspan_status guarded(Fn&& fn)
{
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SYMSPAN_INVALID_ARGUMENT;
    } catch (const symspan::resource_limit_error& e) {
        g_last_error = e.what();
        return SYMSPAN_RESOURCE_LIMIT;
    } catch (const symspan::internal_error& e) {
        g_last_error = e.what();
        return SYMSPAN_INTERNAL_ERROR;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SYMSPAN_RESOURCE_LIMIT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SYMSPAN_INTERNAL_ERROR;
    }
}

symspan::Partition partition_from_parts(const uint32_t* parts, size_t part_count,
                                        bool* was_sorted = nullptr)
{
    if (parts == nullptr && part_count > 0)
        throw std::invalid_argument("parts pointer is null");
    std::vector<std::uint32_t> list(parts, parts + part_count);
    bool sorted = std::is_sorted(list.begin(), list.end(), std::greater<>());
    if (was_sorted) *was_sorted = sorted;
    return symspan::Partition::from_unsorted(std::move(list));
}

// big coefficients that do not fit an int64 are emitted as decimal strings
json coefficient_to_json(const mpz_class& value)
{
    if (value.fits_slong_p())
        return json(static_cast<std::int64_t>(value.get_si()));
    return json(value.get_str());
}

mpz_class coefficient_from_json(const json& value)
{
    if (value.is_number_integer())
        return mpz_class(static_cast<long>(value.get<std::int64_t>()));
    if (value.is_string())
        return mpz_class(value.get<std::string>());
    throw std::invalid_argument("relation coefficient must be an integer or decimal string");
}

}  // namespace

struct symspan_bounds {
    std::vector<symspan::BoundsRecord> records;
};

struct symspan_relations {
    std::uint32_t n = 0;
    std::vector<symspan::RelationCertificate> certificates;
};

extern "C" {

const char* symspan_version(void) { return "1.0.0"; }

const char* symspan_status_name(symspan_status status)
{
    switch (status) {
        case SYMSPAN_OK: return "ok";
        case SYMSPAN_INVALID_ARGUMENT: return "invalid argument";
        case SYMSPAN_RESOURCE_LIMIT: return "resource limit";
        case SYMSPAN_VERIFY_FAILED: return "verification failed";
        case SYMSPAN_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char* symspan_last_error(void) { return g_last_error.c_str(); }

void symspan_string_free(char* s) { delete[] s; }

void symspan_string_array_free(char** strings, size_t count)
{
    if (!strings) return;
    for (size_t i = 0; i < count; ++i) delete[] strings[i];
    delete[] strings;
}

void symspan_u64_array_free(uint64_t* values) { delete[] values; }

symspan_status symspan_count_partitions(uint32_t n, char** out_decimal)
{
    return guarded([&]() {
        if (!out_decimal) throw std::invalid_argument("out_decimal is null");
        *out_decimal = copy_string(symspan::count_partitions(n).get_str());
        return SYMSPAN_OK;
    });
}

symspan_status symspan_euler_phi(uint64_t j, uint64_t* out_phi)
{
    return guarded([&]() {
        if (!out_phi) throw std::invalid_argument("out_phi is null");
        *out_phi = symspan::euler_phi(j);
        return SYMSPAN_OK;
    });
}

symspan_status symspan_truncation_degree(uint32_t n, uint64_t* out_degree)
{
    return guarded([&]() {
        if (!out_degree) throw std::invalid_argument("out_degree is null");
        *out_degree = symspan::truncation_degree(n);
        return SYMSPAN_OK;
    });
}

symspan_status symspan_character_values(const uint32_t* parts, size_t part_count,
                                        uint64_t max_degree, int* out_sorted,
                                        char*** out_values, size_t* out_count)
{
    return guarded([&]() {
        if (!out_values || !out_count)
            throw std::invalid_argument("output pointers are null");
        bool sorted = true;
        symspan::Partition lambda = partition_from_parts(parts, part_count, &sorted);
        if (out_sorted) *out_sorted = sorted ? 0 : 1;
        symspan::TruncatedSeries row = symspan::series_row(lambda, max_degree);
        char** values = new char*[row.coeffs.size()]();
        for (size_t i = 0; i < row.coeffs.size(); ++i)
            values[i] = copy_string(row.coeffs[i].get_str());
        *out_values = values;
        *out_count = row.coeffs.size();
        return SYMSPAN_OK;
    });
}

symspan_status symspan_rank_exact(uint32_t n, uint64_t memory_budget_mib,
                                  int64_t* out_rank)
{
    return guarded([&]() {
        if (!out_rank) throw std::invalid_argument("out_rank is null");
        symspan::CoefficientMatrix matrix = symspan::build_matrix(n, memory_budget_mib);
        *out_rank = static_cast<int64_t>(symspan::rank_exact(matrix));
        return SYMSPAN_OK;
    });
}

symspan_status symspan_rank_modular(uint32_t n, const uint64_t* primes,
                                    size_t prime_count, int64_t* out_per_prime,
                                    int64_t* out_rank, int* out_consensus)
{
    return guarded([&]() {
        if (!out_rank) throw std::invalid_argument("out_rank is null");
        std::span<const uint64_t> span_primes =
            prime_count > 0 ? std::span<const uint64_t>(primes, prime_count)
                            : std::span<const uint64_t>(symspan::kDefaultPrimes);
        symspan::ModularRankReport report = symspan::rank_modular(n, span_primes);
        if (out_per_prime)
            for (size_t i = 0; i < report.per_prime.size(); ++i)
                out_per_prime[i] = static_cast<int64_t>(report.per_prime[i]);
        *out_rank = static_cast<int64_t>(report.rank);
        if (out_consensus) *out_consensus = report.consensus ? 1 : 0;
        return SYMSPAN_OK;
    });
}

symspan_status symspan_bounds_compute(uint32_t n_max, symspan_bounds** out)
{
    return guarded([&]() {
        if (!out) throw std::invalid_argument("out is null");
        auto bounds = std::make_unique<symspan_bounds>();
        bounds->records = symspan::compute_bounds_records(n_max);
        *out = bounds.release();
        return SYMSPAN_OK;
    });
}

void symspan_bounds_free(symspan_bounds* bounds) { delete bounds; }

symspan_status symspan_bounds_row(const symspan_bounds* bounds, uint32_t n,
                                  int64_t* out_u, int64_t* out_e, int64_t* out_g,
                                  int64_t* out_h, int64_t* out_eq2,
                                  char** out_p_decimal)
{
    return guarded([&]() {
        if (!bounds) throw std::invalid_argument("bounds handle is null");
        if (n < 1 || n > bounds->records.size())
            throw std::invalid_argument("n is outside the computed range");
        const symspan::BoundsRecord& record = bounds->records[n - 1];
        if (out_u) *out_u = record.U;
        if (out_e) *out_e = record.E;
        if (out_g) *out_g = record.G;
        if (out_h) *out_h = record.H;
        if (out_eq2) *out_eq2 = record.eq2;
        if (out_p_decimal) *out_p_decimal = copy_string(record.P.get_str());
        return SYMSPAN_OK;
    });
}

symspan_status symspan_gap_statistic(uint32_t n, const int64_t* d_values,
                                     size_t d_count, int64_t* out_gap)
{
    return guarded([&]() {
        if (!out_gap) throw std::invalid_argument("out_gap is null");
        if (!d_values) throw std::invalid_argument("d_values is null");
        std::map<std::uint32_t, std::int64_t> map;
        for (size_t k = 0; k < d_count; ++k)
            map[static_cast<std::uint32_t>(k)] = d_values[k];
        *out_gap = symspan::gap_statistic(n, map);
        return SYMSPAN_OK;
    });
}

symspan_status symspan_asymptotics(uint32_t n_max, double* out_h_ratio,
                                   double* out_u_ratio, double* out_c_hat,
                                   double* out_max_c_hat)
{
    return guarded([&]() {
        symspan::AsymptoticsReport report = symspan::asymptotics_probe(n_max);
        for (size_t i = 0; i < report.rows.size(); ++i) {
            if (out_h_ratio) out_h_ratio[i] = report.rows[i].h_ratio;
            if (out_u_ratio) out_u_ratio[i] = report.rows[i].u_ratio;
            if (out_c_hat) out_c_hat[i] = report.rows[i].c_hat;
        }
        if (out_max_c_hat) *out_max_c_hat = report.max_c_hat;
        return SYMSPAN_OK;
    });
}

symspan_status symspan_nu_decompose(uint64_t m, uint64_t** out_ks,
                                    size_t* out_count, uint64_t* out_nu)
{
    return guarded([&]() {
        if (!out_ks || !out_count || !out_nu)
            throw std::invalid_argument("output pointers are null");
        symspan::GreedyDecomposition decomposition = symspan::nu_decompose(m);
        uint64_t* ks = new uint64_t[decomposition.ks.size()];
        std::copy(decomposition.ks.begin(), decomposition.ks.end(), ks);
        *out_ks = ks;
        *out_count = decomposition.ks.size();
        *out_nu = decomposition.nu;
        return SYMSPAN_OK;
    });
}

symspan_status symspan_nu_verify_range(uint64_t m_lo, uint64_t m_hi,
                                       uint64_t* out_violation_count,
                                       uint64_t* out_first_violation,
                                       double* out_max_slack)
{
    return guarded([&]() {
        symspan::NuCheckReport report = symspan::check_nu_inequality(m_lo, m_hi);
        if (out_violation_count) *out_violation_count = report.violations.size();
        if (out_first_violation && !report.violations.empty())
            *out_first_violation = report.violations.front();
        if (out_max_slack) *out_max_slack = report.max_slack;
        return SYMSPAN_OK;
    });
}

symspan_status symspan_nu_max_below(uint64_t limit, uint64_t* out_max_nu,
                                    uint64_t* out_attained_at)
{
    return guarded([&]() {
        auto [max_nu, attained_at] = symspan::nu_max_below(limit);
        if (out_max_nu) *out_max_nu = max_nu;
        if (out_attained_at) *out_attained_at = attained_at;
        return SYMSPAN_OK;
    });
}

symspan_status symspan_relations_compute(uint32_t n, uint64_t memory_budget_mib,
                                         symspan_relations** out)
{
    return guarded([&]() {
        if (!out) throw std::invalid_argument("out is null");
        auto relations = std::make_unique<symspan_relations>();
        relations->n = n;
        relations->certificates = symspan::nullspace_certificates(n, memory_budget_mib);
        *out = relations.release();
        return SYMSPAN_OK;
    });
}

void symspan_relations_free(symspan_relations* relations) { delete relations; }

size_t symspan_relations_count(const symspan_relations* relations)
{
    return relations ? relations->certificates.size() : 0;
}

int symspan_relations_all_verified(const symspan_relations* relations)
{
    if (!relations) return 0;
    return std::all_of(relations->certificates.begin(), relations->certificates.end(),
                       [](const symspan::RelationCertificate& c) { return c.verified; })
               ? 1
               : 0;
}

symspan_status symspan_relations_to_json(const symspan_relations* relations,
                                         char** out_json)
{
    return guarded([&]() {
        if (!relations) throw std::invalid_argument("relations handle is null");
        if (!out_json) throw std::invalid_argument("out_json is null");
        json document;
        document["n"] = relations->n;
        document["relations"] = json::array();
        for (const auto& certificate : relations->certificates) {
            json relation;
            relation["terms"] = json::array();
            for (const auto& [lambda, coefficient] : certificate.support) {
                json term;
                term["partition"] = lambda.parts();
                term["coeff"] = coefficient_to_json(coefficient);
                relation["terms"].push_back(std::move(term));
            }
            relation["verified"] = certificate.verified;
            document["relations"].push_back(std::move(relation));
        }
        *out_json = copy_string(document.dump(2) + "\n");
        return SYMSPAN_OK;
    });
}

symspan_status symspan_relations_check_json(const symspan_relations* relations,
                                            const char* json_document,
                                            int* out_all_verified,
                                            int* out_all_in_span)
{
    return guarded([&]() {
        if (!relations) throw std::invalid_argument("relations handle is null");
        if (!json_document) throw std::invalid_argument("json_document is null");
        if (!out_all_verified || !out_all_in_span)
            throw std::invalid_argument("output pointers are null");
        json document;
        try {
            document = json::parse(json_document);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("relation document is not valid JSON: ") +
                                        e.what());
        }
        if (!document.contains("n") || !document["n"].is_number_unsigned())
            throw std::invalid_argument("relation document is missing \"n\"");
        if (document["n"].get<std::uint32_t>() != relations->n)
            throw std::invalid_argument("relation document is for a different n");
        if (!document.contains("relations") || !document["relations"].is_array())
            throw std::invalid_argument("relation document is missing \"relations\"");

        bool all_verified = true;
        bool all_in_span = true;
        for (const json& relation : document["relations"]) {
            if (!relation.contains("terms") || !relation["terms"].is_array())
                throw std::invalid_argument("relation entry is missing \"terms\"");
            symspan::RelationCertificate certificate;
            certificate.n = relations->n;
            for (const json& term : relation["terms"]) {
                if (!term.contains("partition") || !term.contains("coeff"))
                    throw std::invalid_argument("relation term needs partition and coeff");
                std::vector<std::uint32_t> parts =
                    term["partition"].get<std::vector<std::uint32_t>>();
                certificate.support.emplace_back(
                    symspan::Partition::from_unsorted(std::move(parts)),
                    coefficient_from_json(term["coeff"]));
            }
            std::sort(certificate.support.begin(), certificate.support.end(),
                      [](const auto& a, const auto& b) {
                          return symspan::enumeration_order_less(a.first, b.first);
                      });
            if (!symspan::verify_certificate(certificate)) all_verified = false;
            if (!symspan::certificate_in_span(relations->certificates, certificate))
                all_in_span = false;
        }
        *out_all_verified = all_verified ? 1 : 0;
        *out_all_in_span = all_in_span ? 1 : 0;
        return SYMSPAN_OK;
    });
}

}  // extern "C"
