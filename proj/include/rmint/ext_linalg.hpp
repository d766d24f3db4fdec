#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmint/field.hpp"
#include "rmint/fq_linalg.hpp"

namespace rmint {

/// Row vector over the top field F_{q^m}, entries as raw encodings.
using ExtVec = std::vector<std::uint32_t>;

/// In-place reduced row echelon form over F_{q^m}; returns the rank.
std::size_t ext_rref(const FieldCtx& ctx, std::vector<ExtVec>& rows);

/// Basis of { y in F_{q^m}^k : sum_j rows[i][j] * y[j] = 0 for all i }.
std::vector<ExtVec> ext_kernel(const FieldCtx& ctx, std::vector<ExtVec> rows, std::uint32_t k);

/// Digit flattening F_{q^m}^k -> F_q^{mk}; coordinate j occupies digit
/// positions [j*m, (j+1)*m). This is the fixed internal identification used
/// for every weight computation.
std::vector<std::uint8_t> flatten(const FieldCtx& ctx, const ExtVec& v);
ExtVec unflatten(const FieldCtx& ctx, std::span<const std::uint8_t> flat, std::uint32_t k);

/// F_q-flat of the F_{q^m}-span of the given vectors: spanned by x^a * w for
/// digit-basis powers a = 0..m-1.
FqSubspace ext_flat(const FieldCtx& ctx, std::uint32_t k, std::span<const ExtVec> basis);

/// An F_{q^m}-subspace of F_{q^m}^k carried with its echelonized basis and
/// its cached hm-dimensional flat.
class ExtSubspace {
public:
    static ExtSubspace from_vectors(FieldCtxPtr ctx, std::uint32_t k, std::vector<ExtVec> vectors);
    static ExtSubspace point(const FieldCtxPtr& ctx, std::uint32_t k, ExtVec v);
    static ExtSubspace full(const FieldCtxPtr& ctx, std::uint32_t k);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint32_t k() const { return k_; }
    std::size_t ext_dim() const { return basis_.size(); }
    const std::vector<ExtVec>& basis() const { return basis_; }
    const FqSubspace& flat() const { return flat_; }

private:
    FieldCtxPtr ctx_;
    std::uint32_t k_ = 0;
    std::vector<ExtVec> basis_;
    FqSubspace flat_;
};

// --- projective point bookkeeping -------------------------------------------
// Canonical representative: first nonzero coordinate scaled to 1. Points are
// ordered by leading-zero count, then by trailing coordinates as a base-Q
// integer (earlier coordinate more significant); all sweeps and witness
// minimality statements refer to this order.

std::uint64_t projective_count(const FieldCtx& ctx, std::uint32_t k);
ExtVec point_rep(const FieldCtx& ctx, std::uint32_t k, std::uint64_t index);
std::uint64_t point_index(const FieldCtx& ctx, std::uint32_t k, const ExtVec& normalized);
void normalize_point(const FieldCtx& ctx, ExtVec& v);

/// Number of h-dimensional F_{q^m}-subspaces of F_{q^m}^k (Gaussian binomial);
/// throws pair_cap-style error if it exceeds cap.
std::uint64_t subspace_count(const FieldCtx& ctx, std::uint32_t k, std::uint32_t h, std::uint64_t cap);

/// Enumerates the echelonized bases of all h-dimensional F_{q^m}-subspaces in
/// lexicographic order (pivot-column sets ascending, then free entries in
/// row-major odometer order). fn may return false to stop.
template <class Fn>
void for_each_ext_subspace(const FieldCtx& ctx, std::uint32_t k, std::uint32_t h, std::uint64_t cap, Fn&& fn) {
    subspace_count(ctx, k, h, cap);
    const std::uint64_t Q = ctx.qm();
    std::vector<std::uint32_t> cols(h);
    for (std::uint32_t i = 0; i < h; ++i) cols[i] = i;
    auto next_combination = [&]() {
        std::uint32_t i = h;
        while (i-- > 0) {
            if (cols[i] + (h - i) <= k - 1) {
                ++cols[i];
                for (std::uint32_t j = i + 1; j < h; ++j) cols[j] = cols[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    while (true) {
        // free positions: (row i, col j) with j > cols[i], j not a pivot column
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t i = 0; i < h; ++i)
            for (std::uint32_t j = cols[i] + 1; j < k; ++j) {
                bool pivot = false;
                for (std::uint32_t t = 0; t < h; ++t)
                    if (cols[t] == j) pivot = true;
                if (!pivot) free_pos.emplace_back(i, j);
            }
        std::vector<ExtVec> basis(h, ExtVec(k, 0));
        for (std::uint32_t i = 0; i < h; ++i) basis[i][cols[i]] = 1;
        std::vector<std::uint64_t> fill(free_pos.size(), 0);
        while (true) {
            if (!fn(static_cast<const std::vector<ExtVec>&>(basis))) return;
            std::size_t pos = free_pos.size();
            while (pos-- > 0) {
                if (fill[pos] + 1 < Q) {
                    ++fill[pos];
                    basis[free_pos[pos].first][free_pos[pos].second] = static_cast<std::uint32_t>(fill[pos]);
                    break;
                }
                fill[pos] = 0;
                basis[free_pos[pos].first][free_pos[pos].second] = 0;
            }
            if (pos == static_cast<std::size_t>(-1)) break;
        }
        if (!next_combination()) break;
    }
}

} // namespace rmint
