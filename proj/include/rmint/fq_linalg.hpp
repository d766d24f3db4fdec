#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmint/errors.hpp"
#include "rmint/gf.hpp"
#include "rmint/rng.hpp"

namespace rmint {

/// Dense matrix over F_q. Rows are bit-packed into 64-bit words when q = 2
/// and byte-packed otherwise; all elimination goes through the same row
/// primitives so the packed path is exercised by every operation.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(GFPtr gf, std::size_t rows, std::size_t cols);
    static FqMatrix identity(GFPtr gf, std::size_t n);
    static FqMatrix from_rows(GFPtr gf, std::size_t cols,
                              const std::vector<std::vector<std::uint8_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const GFPtr& gf() const { return gf_; }
    bool packed() const { return gf_ && gf_->q() == 2; }

    std::uint8_t get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::uint8_t v);
    std::vector<std::uint8_t> row(std::size_t r) const;
    void set_row(std::size_t r, std::span<const std::uint8_t> v);

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t r, std::uint8_t c);
    /// row[dst] += c * row[src]
    void axpy_row(std::size_t dst, std::size_t src, std::uint8_t c);
    bool row_is_zero(std::size_t r) const;

    /// In-place reduction to canonical RREF (pivots 1, zero above and below,
    /// pivot columns strictly increasing). Returns the rank; pivot columns
    /// are appended to *pivots when given. Zero rows sink to the bottom.
    std::size_t rref(std::vector<std::size_t>* pivots = nullptr);
    std::size_t rank() const;

    FqMatrix multiplied(const FqMatrix& rhs) const;
    FqMatrix transposed() const;
    bool invertible() const;

    /// First word of a packed row; requires q = 2 and cols <= 64.
    std::uint64_t row_word(std::size_t r) const;

    bool operator==(const FqMatrix& o) const;

private:
    void ensure_same_field(const FqMatrix& o) const;
    GFPtr gf_;
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint8_t> bytes_;
};

/// Kernel of M as a row-space: returns a matrix whose rows span
/// { x : M x^T = 0 }, in canonical RREF.
FqMatrix kernel(const FqMatrix& m);

/// An F_q-subspace of F_q^N held by its canonical RREF basis; two subspaces
/// are equal iff their bases compare equal.
class FqSubspace {
public:
    FqSubspace() = default;
    static FqSubspace zero(GFPtr gf, std::size_t ambient);
    static FqSubspace full(GFPtr gf, std::size_t ambient);
    static FqSubspace from_matrix(FqMatrix generators);
    static FqSubspace from_rows(GFPtr gf, std::size_t ambient,
                                const std::vector<std::vector<std::uint8_t>>& rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }
    const GFPtr& gf() const { return gf_; }

    bool operator==(const FqSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    GFPtr gf_;
    std::size_t ambient_ = 0;
    FqMatrix basis_; // dim x ambient, canonical RREF, no zero rows
};

FqSubspace intersect(const FqSubspace& a, const FqSubspace& b);
FqSubspace sum(const FqSubspace& a, const FqSubspace& b);
bool contains(const FqSubspace& a, std::span<const std::uint8_t> v);
bool contains_subspace(const FqSubspace& a, const FqSubspace& b);

/// Uniformly random dim-dimensional subspace of F_q^N (random matrices
/// conditioned on full rank), deterministic per seed.
FqSubspace random_subspace(GFPtr gf, std::size_t ambient, std::size_t dim, std::uint64_t seed);

/// Visits every vector of the subspace exactly once (q^dim of them, the zero
/// vector first). Gray-code order for q = 2, odometer order otherwise.
/// fn may return false to stop early. Throws above the enumeration cap.
template <class Fn>
void for_each_vector(const FqSubspace& s, std::uint64_t cap, Fn&& fn) {
    const auto& gf = *s.gf();
    const std::uint64_t q = gf.q();
    const std::size_t d = s.dim(), n = s.ambient();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > cap / q) fail(Errc::enumeration_cap_exceeded, "q^dim exceeds enumeration cap");
        total *= q;
    }
    std::vector<std::uint8_t> cur(n, 0);
    if (!fn(std::span<const std::uint8_t>(cur))) return;
    if (d == 0) return;
    if (q == 2) {
        // reflected Gray code: step t flips basis row ctz(t)
        for (std::uint64_t t = 1; t < total; ++t) {
            std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(t));
            auto row = s.basis().row(bit);
            for (std::size_t j = 0; j < n; ++j) cur[j] ^= row[j];
            if (!fn(std::span<const std::uint8_t>(cur))) return;
        }
    } else {
        std::vector<std::uint8_t> digits(d, 0);
        std::vector<std::vector<std::uint8_t>> rows(d);
        for (std::size_t i = 0; i < d; ++i) rows[i] = s.basis().row(i);
        // Digit encodings are field elements, so stepping a digit from c to c'
        // changes the vector by (c' - c) * row.
        auto step = [&](std::size_t pos, std::uint8_t from, std::uint8_t to) {
            std::uint8_t delta = gf.sub(to, from);
            for (std::size_t j = 0; j < n; ++j) cur[j] = gf.add(cur[j], gf.mul(delta, rows[pos][j]));
        };
        for (std::uint64_t t = 1; t < total; ++t) {
            std::size_t pos = 0;
            while (digits[pos] == q - 1) {
                step(pos, digits[pos], 0);
                digits[pos] = 0;
                ++pos;
            }
            step(pos, digits[pos], digits[pos] + 1);
            ++digits[pos];
            if (!fn(std::span<const std::uint8_t>(cur))) return;
        }
    }
}

} // namespace rmint
