#include "rank.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "intmath.hpp"

namespace symspan {

namespace {

// Static per-entry estimate for the budget gate: an mpz_class plus a typical
// two-limb allocation. The gate refuses assembly up front; it is not a live
// allocator account.
constexpr std::uint64_t kBytesPerEntryEstimate = 48;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return result;
}

// Fraction-free elimination in place. Columns run left to right over
// [0, pivot_cols); the pivot is the first remaining row with a nonzero entry.
// Row updates follow Bareiss: M[i][j] <- (M[i][j]*piv - M[i][c]*M[r][j]) / prev,
// where prev is the previous pivot. Every intermediate entry is a minor of
// the original integer matrix (Sylvester's identity), so the division is
// exact and the growth stays polynomial in the minors, not exponential.
// Columns at and beyond pivot_cols are carried along in the row updates but
// never searched for pivots; rank counts pivot columns only.
std::size_t bareiss_eliminate(std::vector<std::vector<mpz_class>>& m,
                              std::size_t pivot_cols)
{
    const std::size_t rows = m.size();
    std::size_t rank = 0;
    mpz_class previous_pivot = 1;
    for (std::size_t c = 0; c < pivot_cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::vector<mpz_class>& pivot_row = m[rank];
        const mpz_class& pivot_value = pivot_row[c];
        const std::size_t width = m[rank].size();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::vector<mpz_class>& row = m[i];
            if (row[c] == 0) {
                // still needs the pivot scaling to keep later divisions exact
                for (std::size_t j = c + 1; j < width; ++j) {
                    if (row[j] == 0) continue;
                    row[j] *= pivot_value;
                    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(),
                                 previous_pivot.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = c + 1; j < width; ++j) {
                row[j] = row[j] * pivot_value - row[c] * pivot_row[j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(),
                             previous_pivot.get_mpz_t());
            }
            row[c] = 0;
        }
        previous_pivot = pivot_value;
        ++rank;
    }
    return rank;
}

}  // namespace

CoefficientMatrix build_matrix(std::uint32_t n, std::uint64_t memory_budget_mib)
{
    if (n == 0) throw std::invalid_argument("coefficient matrix needs n >= 1");
    CoefficientMatrix matrix;
    matrix.n = n;
    matrix.truncation = truncation_degree(n);
    mpz_class row_count = count_partitions(n);
    mpz_class estimated_bytes =
        row_count * (matrix.truncation + 1) * kBytesPerEntryEstimate;
    mpz_class budget_bytes = mpz_class(memory_budget_mib) * 1024 * 1024;
    if (estimated_bytes > budget_bytes)
        throw resource_limit_error(
            "coefficient matrix for n = " + std::to_string(n) + " needs ~" +
            estimated_bytes.get_str() + " bytes, over the budget of " +
            std::to_string(memory_budget_mib) + " MiB");

    PartitionGenerator gen(n);
    Partition lambda;
    while (gen.next(lambda)) {
        matrix.entries.push_back(series_row(lambda, matrix.truncation).coeffs);
        matrix.row_index.push_back(std::move(lambda));
    }
    return matrix;
}

std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows)
{
    if (rows.empty()) return 0;
    return bareiss_eliminate(rows, rows.front().size());
}

std::size_t rank_exact(const CoefficientMatrix& matrix)
{
    return integer_rank(matrix.entries);
}

namespace {

// Reduced row echelon basis mod p with unit pivots. Keeping the basis fully
// reduced lets a new row be cleared with one fused pass: the elimination
// coefficients can be read off up front because basis rows vanish at each
// other's pivot columns.
class ModularEchelon {
public:
    explicit ModularEchelon(std::uint64_t p) : p_(p) {}

    std::size_t size() const noexcept { return rows_.size(); }

    // Reduces the row against the basis; true and absorbed when independent.
    bool insert(std::vector<std::uint64_t> row)
    {
        const std::size_t width = row.size();
        if (!rows_.empty()) {
            std::vector<std::uint64_t> coeff(rows_.size());
            for (std::size_t k = 0; k < rows_.size(); ++k)
                coeff[k] = p_ - row[pivot_col_[k]];   // subtraction folded in
            for (std::size_t j = 0; j < width; ++j) {
                unsigned __int128 acc = row[j];
                for (std::size_t k = 0; k < rows_.size(); ++k)
                    acc += static_cast<unsigned __int128>(coeff[k]) * rows_[k][j];
                row[j] = static_cast<std::uint64_t>(acc % p_);
            }
        }
        std::size_t lead = 0;
        while (lead < width && row[lead] == 0) ++lead;
        if (lead == width) return false;
        std::uint64_t inverse = powmod_u64(row[lead], p_ - 2, p_);
        for (auto& value : row) value = mulmod_u64(value, inverse, p_);
        // keep the basis reduced at the new pivot column
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::uint64_t factor = rows_[k][lead];
            if (factor == 0) continue;
            std::uint64_t neg = p_ - factor;
            for (std::size_t j = 0; j < width; ++j)
                rows_[k][j] = (rows_[k][j] + mulmod_u64(neg, row[j], p_)) % p_;
        }
        pivot_col_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }

private:
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivot_col_;
};

}  // namespace

ModularRankReport rank_modular(std::uint32_t n, std::span<const std::uint64_t> primes)
{
    if (n == 0) throw std::invalid_argument("rank needs n >= 1");
    if (primes.size() < 2)
        throw std::invalid_argument("modular rank needs at least two primes");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] <= (1ull << 20) || primes[i] >= (1ull << 31) ||
            !is_prime_u64(primes[i]))
            throw std::invalid_argument("modular rank needs primes in (2^20, 2^31), got " +
                                        std::to_string(primes[i]));
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument("modular rank needs distinct primes");
    }

    ModularRankReport report;
    report.primes.assign(primes.begin(), primes.end());
    const std::uint64_t truncation = truncation_degree(n);
    for (std::uint64_t p : primes) {
        ModularEchelon echelon(p);
        PartitionGenerator gen(n);
        Partition lambda;
        while (gen.next(lambda)) {
            if (echelon.size() == truncation + 1) break;   // column count caps the rank
            echelon.insert(series_modular_row(lambda, truncation, p));
        }
        report.per_prime.push_back(echelon.size());
    }
    report.consensus = std::all_of(report.per_prime.begin(), report.per_prime.end(),
                                   [&](std::size_t r) { return r == report.per_prime.front(); });
    report.rank = *std::max_element(report.per_prime.begin(), report.per_prime.end());
    return report;
}

namespace {

std::vector<mpz_class> dense_coefficients(const RelationCertificate& certificate,
                                          const std::vector<Partition>& index)
{
    std::vector<mpz_class> dense(index.size(), mpz_class(0));
    for (const auto& [lambda, coefficient] : certificate.support) {
        auto it = std::lower_bound(index.begin(), index.end(), lambda,
                                   enumeration_order_less);
        if (it == index.end() || !(*it == lambda))
            throw internal_error("certificate support partition missing from index");
        dense[static_cast<std::size_t>(it - index.begin())] = coefficient;
    }
    return dense;
}

RelationCertificate certificate_from_dense(std::uint32_t n,
                                           const std::vector<Partition>& index,
                                           std::vector<mpz_class> dense)
{
    // primitive: divide out the content; sign: leading coefficient positive
    mpz_class content = 0;
    for (const auto& value : dense)
        if (value != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), value.get_mpz_t());
    if (content == 0) throw internal_error("zero vector is not a certificate");
    std::size_t lead = 0;
    while (dense[lead] == 0) ++lead;
    if (dense[lead] < 0) content = -content;
    RelationCertificate certificate;
    certificate.n = n;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] == 0) continue;
        mpz_class reduced;
        mpz_divexact(reduced.get_mpz_t(), dense[i].get_mpz_t(), content.get_mpz_t());
        certificate.support.emplace_back(index[i], std::move(reduced));
    }
    return certificate;
}

}  // namespace

std::vector<RelationCertificate> nullspace_certificates(std::uint32_t n,
                                                        std::uint64_t memory_budget_mib)
{
    CoefficientMatrix matrix = build_matrix(n, memory_budget_mib);
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    // Augment with the identity and eliminate the coefficient block only;
    // rows whose coefficient block cancels carry a left-nullspace vector in
    // the identity block.
    std::vector<std::vector<mpz_class>> augmented(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        augmented[i] = std::move(matrix.entries[i]);
        augmented[i].resize(cols + rows, mpz_class(0));
        augmented[i][cols + i] = 1;
    }
    bareiss_eliminate(augmented, cols);

    std::vector<RelationCertificate> certificates;
    for (const auto& row : augmented) {
        bool zero = true;
        for (std::size_t j = 0; j < cols && zero; ++j) zero = (row[j] == 0);
        if (!zero) continue;
        std::vector<mpz_class> relation(row.begin() + static_cast<std::ptrdiff_t>(cols),
                                        row.end());
        RelationCertificate certificate =
            certificate_from_dense(n, matrix.row_index, std::move(relation));
        certificate.verified = verify_certificate(certificate);
        certificates.push_back(std::move(certificate));
    }
    return certificates;
}

bool verify_certificate(const RelationCertificate& certificate)
{
    if (certificate.n == 0) throw std::invalid_argument("certificate needs n >= 1");
    const std::uint64_t truncation = truncation_degree(certificate.n);
    std::vector<mpz_class> combination(truncation + 1, mpz_class(0));
    for (const auto& [lambda, coefficient] : certificate.support) {
        if (lambda.sum() != certificate.n)
            throw std::invalid_argument("certificate support must consist of partitions of n");
        TruncatedSeries row = series_row(lambda, truncation);
        for (std::size_t i = 0; i <= truncation; ++i)
            combination[i] += coefficient * row.coeffs[i];
    }
    return std::all_of(combination.begin(), combination.end(),
                       [](const mpz_class& value) { return value == 0; });
}

bool certificate_in_span(const std::vector<RelationCertificate>& basis,
                         const RelationCertificate& candidate)
{
    std::vector<Partition> index = enumerate_partitions(candidate.n);
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(basis.size() + 1);
    for (const auto& certificate : basis) {
        if (certificate.n != candidate.n)
            throw std::invalid_argument("span check needs certificates of the same n");
        rows.push_back(dense_coefficients(certificate, index));
    }
    std::size_t basis_rank = integer_rank(rows);
    rows.clear();
    for (const auto& certificate : basis)
        rows.push_back(dense_coefficients(certificate, index));
    rows.push_back(dense_coefficients(candidate, index));
    return integer_rank(std::move(rows)) == basis_rank;
}

}  // namespace symspan
