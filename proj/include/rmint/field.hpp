#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmint/fq_linalg.hpp"
#include "rmint/gf.hpp"

namespace rmint {

enum class Level : std::uint8_t { prime, mid, top };

/// A tower element: an integer encoding plus the tower level it lives in.
/// Top-field encodings are base-q digit vectors packed into an integer
/// (digit i = coefficient of x^i in F_q[x]/(modulus_qm)).
struct FieldElement {
    std::uint32_t v = 0;
    Level level = Level::top;
};

enum class ArithOp { add, mul, inv, pow, neg };

struct FieldSpec {
    std::uint32_t p = 2, e = 1, m = 1;
    std::vector<std::uint8_t> modulus_q;  // c_0..c_e over F_p, empty = search least
    std::vector<std::uint8_t> modulus_qm; // c_0..c_m over F_q, empty = search least
    std::uint64_t table_cap = 1ull << 22;
};

/// Named field presets understood by the file format ("paper-f64" is the
/// F_64 = F_2[x]/(x^6+x^4+x^3+x+1) used by the shipped golden example).
FieldSpec field_preset(const std::string& name);

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// The tower F_p < F_q = F_{p^e} < F_{q^m}. Immutable after construction and
/// safely shareable; all operations are pure. Fields up to the table cap get
/// log/antilog tables, larger ones fall back to polynomial arithmetic.
class FieldCtx {
public:
    static FieldCtxPtr build(const FieldSpec& spec);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t qm() const { return order_; }
    const GFPtr& gf() const { return gf_; }
    const std::vector<std::uint8_t>& modulus_q() const { return gf_->modulus(); }
    const std::vector<std::uint8_t>& modulus_qm() const { return modulus_qm_; }
    std::uint32_t primitive() const { return primitive_; }
    bool has_tables() const { return !exp_.empty(); }

    // --- raw top-field arithmetic on encodings ---
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t n) const;
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, q_); }
    std::uint32_t mul_by_subfield(std::uint32_t a, std::uint8_t c) const;

    std::uint64_t log(std::uint32_t a) const; // discrete log base primitive; a != 0, tables required
    std::uint32_t alpha_power(std::uint64_t k) const;

    /// Tr_{q^m/q}(a) = a + a^q + ... + a^{q^(m-1)}, landing in F_q.
    std::uint8_t trace_to_q(std::uint32_t a) const;

    void digits_of(std::uint32_t a, std::uint8_t* out) const; // m base-q digits
    std::uint32_t from_digits(const std::uint8_t* d) const;
    bool in_subfield(std::uint32_t a) const { return a < q_; }

    // --- level-checked element API ---
    FieldElement element(std::uint32_t v, Level level = Level::top) const;
    FieldElement arith(FieldElement x, FieldElement y, ArithOp op) const;
    FieldElement trace(FieldElement x) const;

    std::string element_to_string(std::uint32_t a) const;              // "0" | "1" | "a^K"
    std::uint32_t element_from_string(const std::string& lit) const;   // exponents reduced mod q^m-1

private:
    FieldCtx() = default;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t n) const;

    std::uint32_t p_ = 0, e_ = 0, m_ = 0, q_ = 0;
    std::uint64_t order_ = 0; // q^m
    GFPtr gf_;
    std::vector<std::uint8_t> modulus_qm_;
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint64_t> qm1_prime_factors_;
};

/// An ordered F_q-basis of F_{q^m} with its change-of-basis data to the
/// polynomial (digit) basis. Default is (1, alpha, ..., alpha^(m-1)) with
/// alpha the primitive element.
class BasisExpansion {
public:
    static BasisExpansion polynomial_basis(const FieldCtxPtr& ctx);
    static BasisExpansion from_elements(const FieldCtxPtr& ctx, std::vector<std::uint32_t> gamma);

    const std::vector<std::uint32_t>& gamma() const { return gamma_; }
    /// coords (in this basis) -> digits
    const FqMatrix& to_digits() const { return to_digits_; }
    /// digits -> coords
    const FqMatrix& from_digits() const { return from_digits_; }

private:
    std::vector<std::uint32_t> gamma_;
    FqMatrix to_digits_, from_digits_;
};

/// Expansion matrix of a vector over F_{q^m}: column j holds the
/// basis coordinates of v_j, so v_j = sum_i out(i,j) * gamma_i.
FqMatrix gamma_expand(const FieldCtx& ctx, std::span<const std::uint32_t> v, const BasisExpansion& basis);
std::vector<std::uint32_t> gamma_contract(const FieldCtx& ctx, const FqMatrix& m, const BasisExpansion& basis);

} // namespace rmint
