#pragma once

// Plain, unpacked reference implementations used only to cross-check the
// packed linear algebra. Deliberately independent of FqMatrix/FqSubspace:
// own scalar arithmetic (mod-p, plus a hardcoded F_4), own elimination.

#include <cstdint>
#include <vector>

#include "rmint/errors.hpp"

namespace rmint::reference {

/// Scalar arithmetic for q in {2, 3, 4, 5}.
struct NaiveField {
    std::uint32_t q;

    explicit NaiveField(std::uint32_t q_) : q(q_) {
        require(q == 2 || q == 3 || q == 4 || q == 5, Errc::precondition_violated,
                "reference field supports q in {2,3,4,5}");
    }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        if (q == 4) return a ^ b; // F_4 encodings 0,1,w,w+1 add bitwise
        return static_cast<std::uint8_t>((a + b) % q);
    }
    std::uint8_t neg(std::uint8_t a) const {
        if (q == 4) return a;
        return static_cast<std::uint8_t>((q - a) % q);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (q != 4) return static_cast<std::uint8_t>((a * b) % q);
        static const std::uint8_t t[4][4] = {// w^2 = w + 1
                                             {0, 0, 0, 0},
                                             {0, 1, 2, 3},
                                             {0, 2, 3, 1},
                                             {0, 3, 1, 2}};
        return t[a][b];
    }
    std::uint8_t inv(std::uint8_t a) const {
        require(a != 0, Errc::zero_inverse, "reference inverse of zero");
        for (std::uint8_t b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        fail(Errc::validation_error, "reference inverse not found");
    }
};

using Row = std::vector<std::uint8_t>;
using Rows = std::vector<Row>;

/// Canonical RREF; returns the rank, trims zero rows.
inline std::size_t naive_rref(const NaiveField& f, Rows& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = lead; r < rows.size(); ++r)
            if (rows[r][col]) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        std::uint8_t iv = f.inv(rows[lead][col]);
        for (auto& x : rows[lead]) x = f.mul(x, iv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || !rows[r][col]) continue;
            std::uint8_t c = rows[r][col];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[lead][j]));
        }
        ++lead;
    }
    rows.resize(lead);
    return lead;
}

inline std::size_t naive_rank(const NaiveField& f, Rows rows) { return naive_rref(f, rows); }

inline Rows naive_sum(const NaiveField& f, Rows a, const Rows& b) {
    for (const auto& r : b) a.push_back(r);
    naive_rref(f, a);
    return a;
}

inline bool naive_contains(const NaiveField& f, const Rows& basis, Row v) {
    const std::size_t cols = v.size();
    for (const auto& row : basis) {
        std::size_t pc = 0;
        while (pc < cols && !row[pc]) ++pc;
        if (pc == cols) continue;
        if (v[pc]) {
            std::uint8_t c = v[pc];
            for (std::size_t j = 0; j < cols; ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
        }
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

/// Zassenhaus with the naive elimination.
inline Rows naive_intersect(const NaiveField& f, const Rows& a, const Rows& b, std::size_t cols) {
    Rows big;
    for (const auto& r : a) {
        Row row(2 * cols, 0);
        for (std::size_t j = 0; j < cols; ++j) row[j] = row[cols + j] = r[j];
        big.push_back(std::move(row));
    }
    for (const auto& r : b) {
        Row row(2 * cols, 0);
        for (std::size_t j = 0; j < cols; ++j) row[j] = r[j];
        big.push_back(std::move(row));
    }
    naive_rref(f, big);
    Rows out;
    for (const auto& row : big) {
        bool left_zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j]) {
                left_zero = false;
                break;
            }
        if (!left_zero) continue;
        Row right(row.begin() + static_cast<std::ptrdiff_t>(cols), row.end());
        bool zero = true;
        for (auto x : right)
            if (x) zero = false;
        if (!zero) out.push_back(std::move(right));
    }
    naive_rref(f, out);
    return out;
}

} // namespace rmint::reference
