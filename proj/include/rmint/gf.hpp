#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rmint/errors.hpp"

namespace rmint {

/// Arithmetic for a small field F_q, q = p^e <= 256. Elements are integers in
/// [0, q) encoding polynomial coefficients over F_p base p (so for p = 2 the
/// encoding is the usual bit pattern). Full add/mul tables are built at
/// construction; this is the scalar engine for all packed linear algebra.
class GF {
public:
    /// modulus: coefficients c_0..c_e of a monic irreducible polynomial over
    /// F_p (c_e = 1). Empty list means "search the lexicographically least",
    /// ordering monic candidates by the integer sum(c_i * p^i), i < e.
    static std::shared_ptr<const GF> make(std::uint32_t p, std::uint32_t e,
                                          std::vector<std::uint8_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[(std::size_t)a * q_ + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[(std::size_t)a * q_ + neg_[b]]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[(std::size_t)a * q_ + b]; }
    std::uint8_t inv(std::uint8_t a) const {
        require(a != 0, Errc::zero_inverse, "inverse of zero");
        return inv_[a];
    }
    std::uint8_t pow(std::uint8_t a, std::uint64_t n) const;

    /// Generator of the multiplicative group (least encoding).
    std::uint8_t generator() const { return generator_; }

    bool operator==(const GF& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

private:
    GF() = default;
    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint8_t> modulus_; // c_0..c_e
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
    std::uint8_t generator_ = 0;
};

using GFPtr = std::shared_ptr<const GF>;

bool is_prime_u64(std::uint64_t n);

namespace poly {

// Dense polynomials over a GF, coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint8_t>;

Poly trim(Poly a);
Poly add(const GF& f, const Poly& a, const Poly& b);
Poly mul(const GF& f, const Poly& a, const Poly& b);
Poly mod(const GF& f, Poly a, const Poly& m);
Poly mulmod(const GF& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const GF& f, Poly base, std::uint64_t n, const Poly& m);
Poly gcd(const GF& f, Poly a, Poly b);
bool is_irreducible(const GF& f, const Poly& m);

/// Lexicographically least monic irreducible of degree d over f
/// (candidates ordered by the integer encoding of their lower coefficients).
Poly least_irreducible(const GF& f, std::uint32_t d);

} // namespace poly

} // namespace rmint
