#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rmint/errors.hpp"
#include "rmint/ext_linalg.hpp"
#include "rmint/field.hpp"

namespace rmint {

/// A rank-metric code: the F_{q^m}-row space of a full-row-rank k x n
/// generator matrix. The minimum distance is cached once computed (it is
/// invariant under code equivalence; recomputations are cross-checked).
class RankCode {
public:
    RankCode(FieldCtxPtr ctx, std::vector<ExtVec> generator_rows);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::size_t k() const { return rows_.size(); }
    std::size_t n() const { return n_; }
    const std::vector<ExtVec>& generator() const { return rows_; }
    ExtVec column(std::size_t j) const;

    /// xG for a message vector x of length k.
    ExtVec encode(const ExtVec& x) const;

    std::optional<std::size_t> cached_distance() const { return d_; }
    void cache_distance(std::size_t d) const;

private:
    FieldCtxPtr ctx_;
    std::vector<ExtVec> rows_;
    std::size_t n_ = 0;
    mutable std::optional<std::size_t> d_;
};

/// supp(v) = rowspace of the basis expansion of v; independent of the basis.
FqSubspace rank_support(const FieldCtx& ctx, std::span<const std::uint32_t> v, const BasisExpansion& basis);
FqSubspace rank_support(const FieldCtx& ctx, std::span<const std::uint32_t> v);

/// dim supp(v); 0 iff v = 0.
std::size_t rank_weight(const FieldCtx& ctx, std::span<const std::uint32_t> v);

/// True iff the n columns of G are F_q-linearly independent.
bool is_nondegenerate(const RankCode& c);

/// Minimum rank weight over one representative per projective class of the
/// message space (valid by scalar invariance of supports).
std::size_t min_distance_enum(const RankCode& c, const Caps& caps = {}, unsigned threads = 1);

/// weight -> number of projective classes of that weight.
std::map<std::size_t, std::uint64_t> weight_distribution(const RankCode& c, const Caps& caps = {},
                                                         unsigned threads = 1);

/// C' = C A for A invertible over F_q; preserves n, k, d and nondegeneracy.
RankCode apply_code_equivalence(const RankCode& c, const FqMatrix& a);

} // namespace rmint
