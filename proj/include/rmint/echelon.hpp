#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "rmint/gf.hpp"

namespace rmint {

/// Incremental rank accumulator over F_2 for ambient width <= 64. Rows are
/// single words, bit c = column c, pivot = lowest set bit. Reusable: reset()
/// clears only the slots that were used.
struct BitEchelon {
    std::array<std::uint64_t, 64> slot{};
    std::array<std::uint8_t, 64> used_pos{};
    int used_n = 0;
    int count = 0;

    void reset() {
        for (int i = 0; i < used_n; ++i) slot[used_pos[i]] = 0;
        used_n = 0;
        count = 0;
    }

    /// Returns true when the row was independent (rank grew).
    bool insert(std::uint64_t v) {
        while (v) {
            int h = __builtin_ctzll(v);
            if (!slot[h]) {
                slot[h] = v;
                used_pos[used_n++] = static_cast<std::uint8_t>(h);
                ++count;
                return true;
            }
            v ^= slot[h];
        }
        return false;
    }

    /// Reduced echelon rows currently held, sorted by pivot column.
    std::vector<std::uint64_t> rows() const {
        std::vector<std::uint64_t> out;
        out.reserve(count);
        for (int h = 0; h < 64; ++h)
            if (slot[h]) out.push_back(slot[h]);
        return out;
    }
};

/// Generic-q counterpart for byte rows of width <= 64; pivot = first nonzero
/// column, pivot entries normalized to 1.
struct ByteEchelon {
    const GF* gf = nullptr;
    std::size_t n = 0;
    std::array<std::array<std::uint8_t, 64>, 64> slot{};
    std::array<std::int8_t, 64> has{};
    std::array<std::uint8_t, 64> used_pos{};
    int used_n = 0;
    int count = 0;

    void init(const GF* field, std::size_t width) {
        gf = field;
        n = width;
        reset();
    }

    void reset() {
        for (int i = 0; i < used_n; ++i) has[used_pos[i]] = 0;
        used_n = 0;
        count = 0;
    }

    bool insert(const std::uint8_t* row_in) {
        std::uint8_t row[64];
        std::memcpy(row, row_in, n);
        for (std::size_t h = 0; h < n; ++h) {
            if (!row[h]) continue;
            if (!has[h]) {
                std::uint8_t iv = gf->inv(row[h]);
                for (std::size_t j = h; j < n; ++j) slot[h][j] = gf->mul(row[j], iv);
                has[h] = 1;
                used_pos[used_n++] = static_cast<std::uint8_t>(h);
                ++count;
                return true;
            }
            std::uint8_t c = row[h];
            for (std::size_t j = h; j < n; ++j) row[j] = gf->sub(row[j], gf->mul(c, slot[h][j]));
        }
        return false;
    }

    std::vector<std::vector<std::uint8_t>> rows() const {
        std::vector<std::vector<std::uint8_t>> out;
        for (std::size_t h = 0; h < n; ++h)
            if (has[h]) out.emplace_back(slot[h].begin(), slot[h].begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }
};

} // namespace rmint
