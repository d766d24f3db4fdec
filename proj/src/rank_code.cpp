#include "rmint/rank_code.hpp"

#include <algorithm>

#include "rmint/echelon.hpp"
#include "rmint/parallel.hpp"

namespace rmint {

RankCode::RankCode(FieldCtxPtr ctx, std::vector<ExtVec> generator_rows)
    : ctx_(std::move(ctx)), rows_(std::move(generator_rows)) {
    require(!rows_.empty(), Errc::bad_dims, "generator matrix needs at least one row");
    n_ = rows_[0].size();
    for (const auto& r : rows_) require(r.size() == n_, Errc::bad_dims, "ragged generator matrix");
    require(n_ >= rows_.size(), Errc::bad_dims, "need n >= k");
    auto copy = rows_;
    require(ext_rref(*ctx_, copy) == rows_.size(), Errc::validation_error,
            "generator matrix does not have full row rank over F_{q^m}");
}

ExtVec RankCode::column(std::size_t j) const {
    ExtVec out(k());
    for (std::size_t i = 0; i < k(); ++i) out[i] = rows_[i][j];
    return out;
}

ExtVec RankCode::encode(const ExtVec& x) const {
    require(x.size() == k(), Errc::bad_dims, "message length mismatch");
    ExtVec out(n_, 0);
    for (std::size_t i = 0; i < k(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < n_; ++j) out[j] = ctx_->add(out[j], ctx_->mul(x[i], rows_[i][j]));
    }
    return out;
}

void RankCode::cache_distance(std::size_t d) const {
    require(!d_ || *d_ == d, Errc::validation_error,
            "distance recomputation disagrees with the cached value");
    d_ = d;
}

FqSubspace rank_support(const FieldCtx& ctx, std::span<const std::uint32_t> v, const BasisExpansion& basis) {
    return FqSubspace::from_matrix(gamma_expand(ctx, v, basis));
}

FqSubspace rank_support(const FieldCtx& ctx, std::span<const std::uint32_t> v) {
    // digit expansion spans the same row space as any basis expansion
    const std::uint32_t m = ctx.m();
    FqMatrix rows(ctx.gf(), m, v.size());
    std::vector<std::uint8_t> d(m);
    for (std::size_t j = 0; j < v.size(); ++j) {
        ctx.digits_of(v[j], d.data());
        for (std::uint32_t i = 0; i < m; ++i) rows.set(i, j, d[i]);
    }
    return FqSubspace::from_matrix(std::move(rows));
}

namespace {

// Scratch-based weight of a codeword: rank of the m x n digit matrix.
struct WeightScratch {
    const FieldCtx* ctx;
    BitEchelon bits;
    ByteEchelon bytes;
    std::vector<std::uint8_t> digits;

    explicit WeightScratch(const FieldCtx& c) : ctx(&c), digits(c.m()) {
        if (c.q() != 2) bytes.init(c.gf().get(), 0);
    }

    std::size_t weight(const ExtVec& v) {
        const std::uint32_t m = ctx->m();
        const std::size_t n = v.size();
        if (ctx->q() == 2 && n <= 64) {
            bits.reset();
            // row i = digit i across coordinates
            for (std::uint32_t i = 0; i < m; ++i) {
                std::uint64_t w = 0;
                for (std::size_t j = 0; j < n; ++j) w |= static_cast<std::uint64_t>((v[j] >> i) & 1u) << j;
                bits.insert(w);
            }
            return static_cast<std::size_t>(bits.count);
        }
        require(n <= 64, Errc::precondition_violated, "codeword weight scratch limited to n <= 64");
        bytes.init(ctx->gf().get(), n);
        std::uint8_t row[64];
        for (std::uint32_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                ctx->digits_of(v[j], digits.data());
                row[j] = digits[i];
            }
            bytes.insert(row);
        }
        return static_cast<std::size_t>(bytes.count);
    }
};

} // namespace

std::size_t rank_weight(const FieldCtx& ctx, std::span<const std::uint32_t> v) {
    WeightScratch scratch(ctx);
    return scratch.weight(ExtVec(v.begin(), v.end()));
}

bool is_nondegenerate(const RankCode& c) {
    const auto& ctx = *c.ctx();
    const std::size_t mk = static_cast<std::size_t>(ctx.m()) * c.k();
    FqMatrix cols(ctx.gf(), c.n(), mk);
    for (std::size_t j = 0; j < c.n(); ++j) {
        auto flat = flatten(ctx, c.column(j));
        cols.set_row(j, flat);
    }
    return cols.rank() == c.n();
}

namespace {

template <class Visit>
void sweep_projective_classes(const RankCode& c, const Caps& caps, unsigned threads, Visit&& visit) {
    const auto& ctx = *c.ctx();
    const std::uint64_t total = projective_count(ctx, static_cast<std::uint32_t>(c.k()));
    require(total <= caps.sweep, Errc::enumeration_cap_exceeded,
            "projective class sweep exceeds cap");
    parallel_chunks(total, threads, 4096, [&](std::uint64_t chunk, std::uint64_t b, std::uint64_t e) {
        WeightScratch scratch(ctx);
        for (std::uint64_t i = b; i < e; ++i) {
            ExtVec x = point_rep(ctx, static_cast<std::uint32_t>(c.k()), i);
            visit(chunk, i, scratch.weight(c.encode(x)));
        }
    });
}

} // namespace

std::size_t min_distance_enum(const RankCode& c, const Caps& caps, unsigned threads) {
    std::vector<std::size_t> local_min(1 + (projective_count(*c.ctx(), static_cast<std::uint32_t>(c.k())) / 4096),
                                       SIZE_MAX);
    sweep_projective_classes(c, caps, threads, [&](std::uint64_t chunk, std::uint64_t, std::size_t w) {
        local_min[chunk] = std::min(local_min[chunk], w);
    });
    std::size_t d = SIZE_MAX;
    for (auto w : local_min) d = std::min(d, w);
    c.cache_distance(d);
    return d;
}

std::map<std::size_t, std::uint64_t> weight_distribution(const RankCode& c, const Caps& caps, unsigned threads) {
    const std::uint64_t total = projective_count(*c.ctx(), static_cast<std::uint32_t>(c.k()));
    std::vector<std::map<std::size_t, std::uint64_t>> local(1 + total / 4096);
    sweep_projective_classes(c, caps, threads, [&](std::uint64_t chunk, std::uint64_t, std::size_t w) {
        ++local[chunk][w];
    });
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& h : local)
        for (auto [w, cnt] : h) out[w] += cnt;
    std::uint64_t sum = 0;
    for (auto [w, cnt] : out) sum += cnt;
    require(sum == total, Errc::validation_error, "weight distribution lost classes (internal)");
    c.cache_distance(out.begin()->first);
    return out;
}

RankCode apply_code_equivalence(const RankCode& c, const FqMatrix& a) {
    const auto& ctx = *c.ctx();
    require(a.rows() == c.n() && a.cols() == c.n(), Errc::bad_dims, "equivalence matrix must be n x n");
    require(a.invertible(), Errc::singular_matrix, "equivalence matrix is singular");
    std::vector<ExtVec> rows(c.k(), ExtVec(c.n(), 0));
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < c.n(); ++t)
                acc = ctx.add(acc, ctx.mul_by_subfield(c.generator()[i][t], a.get(t, j)));
            rows[i][j] = acc;
        }
    RankCode out(c.ctx(), std::move(rows));
    if (auto d = c.cached_distance()) out.cache_distance(*d);
    return out;
}

} // namespace rmint
