#include "rmint/ext_linalg.hpp"

#include <algorithm>

namespace rmint {

std::size_t ext_rref(const FieldCtx& ctx, std::vector<ExtVec>& rows) {
    if (rows.empty()) return 0;
    const std::size_t k = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < k && lead < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = lead; r < rows.size(); ++r)
            if (rows[r][col]) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        std::uint32_t iv = ctx.inv(rows[lead][col]);
        if (iv != 1)
            for (auto& x : rows[lead]) x = ctx.mul(x, iv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || !rows[r][col]) continue;
            std::uint32_t c = rows[r][col];
            for (std::size_t j = 0; j < k; ++j)
                rows[r][j] = ctx.sub(rows[r][j], ctx.mul(c, rows[lead][j]));
        }
        ++lead;
    }
    rows.resize(lead);
    return lead;
}

std::vector<ExtVec> ext_kernel(const FieldCtx& ctx, std::vector<ExtVec> rows, std::uint32_t k) {
    for (const auto& r : rows) require(r.size() == k, Errc::bad_dims, "kernel row length mismatch");
    std::size_t rank = ext_rref(ctx, rows);
    std::vector<std::uint32_t> pivots;
    std::vector<bool> is_pivot(k, false);
    for (std::size_t r = 0; r < rank; ++r) {
        std::uint32_t pc = 0;
        while (!rows[r][pc]) ++pc;
        pivots.push_back(pc);
        is_pivot[pc] = true;
    }
    std::vector<ExtVec> out;
    for (std::uint32_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        ExtVec v(k, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = ctx.neg(rows[r][f]);
        out.push_back(std::move(v));
    }
    ext_rref(ctx, out);
    return out;
}

std::vector<std::uint8_t> flatten(const FieldCtx& ctx, const ExtVec& v) {
    const std::uint32_t m = ctx.m();
    std::vector<std::uint8_t> out(v.size() * m);
    for (std::size_t j = 0; j < v.size(); ++j) ctx.digits_of(v[j], out.data() + j * m);
    return out;
}

ExtVec unflatten(const FieldCtx& ctx, std::span<const std::uint8_t> flat, std::uint32_t k) {
    const std::uint32_t m = ctx.m();
    require(flat.size() == static_cast<std::size_t>(k) * m, Errc::bad_dims, "flat length mismatch");
    ExtVec out(k);
    for (std::uint32_t j = 0; j < k; ++j) out[j] = ctx.from_digits(flat.data() + j * m);
    return out;
}

FqSubspace ext_flat(const FieldCtx& ctx, std::uint32_t k, std::span<const ExtVec> basis) {
    const std::uint32_t m = ctx.m();
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(basis.size() * m);
    for (const auto& w : basis) {
        std::uint32_t xa = 1; // x^a runs over the digit basis
        for (std::uint32_t a = 0; a < m; ++a) {
            ExtVec scaled(k);
            for (std::uint32_t j = 0; j < k; ++j) scaled[j] = ctx.mul(xa, w[j]);
            rows.push_back(flatten(ctx, scaled));
            if (a + 1 < m) xa = ctx.mul(xa, ctx.q()); // encoding of x is q
        }
    }
    return FqSubspace::from_rows(ctx.gf(), static_cast<std::size_t>(k) * m, rows);
}

ExtSubspace ExtSubspace::from_vectors(FieldCtxPtr ctx, std::uint32_t k, std::vector<ExtVec> vectors) {
    for (const auto& v : vectors) require(v.size() == k, Errc::bad_dims, "vector length mismatch");
    ExtSubspace s;
    s.ctx_ = std::move(ctx);
    s.k_ = k;
    s.basis_ = std::move(vectors);
    ext_rref(*s.ctx_, s.basis_);
    s.flat_ = ext_flat(*s.ctx_, k, s.basis_);
    require(s.flat_.dim() == s.basis_.size() * s.ctx_->m(), Errc::validation_error,
            "flat dimension mismatch (internal)");
    return s;
}

ExtSubspace ExtSubspace::point(const FieldCtxPtr& ctx, std::uint32_t k, ExtVec v) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    require(nonzero, Errc::zero_vector, "point requires a nonzero vector");
    return from_vectors(ctx, k, {std::move(v)});
}

ExtSubspace ExtSubspace::full(const FieldCtxPtr& ctx, std::uint32_t k) {
    std::vector<ExtVec> rows(k, ExtVec(k, 0));
    for (std::uint32_t i = 0; i < k; ++i) rows[i][i] = 1;
    return from_vectors(ctx, k, std::move(rows));
}

std::uint64_t projective_count(const FieldCtx& ctx, std::uint32_t k) {
    const std::uint64_t Q = ctx.qm();
    std::uint64_t total = 0, power = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        total += power;
        power *= Q;
    }
    return total; // 1 + Q + ... + Q^{k-1}
}

ExtVec point_rep(const FieldCtx& ctx, std::uint32_t k, std::uint64_t index) {
    const std::uint64_t Q = ctx.qm();
    // block of leading-zero count l has Q^{k-1-l} representatives
    std::uint64_t block = 1;
    for (std::uint32_t i = 0; i + 1 < k; ++i) block *= Q;
    for (std::uint32_t l = 0; l < k; ++l) {
        if (index < block) {
            ExtVec v(k, 0);
            v[l] = 1;
            for (std::uint32_t j = k; j-- > l + 1;) {
                v[j] = static_cast<std::uint32_t>(index % Q);
                index /= Q;
            }
            return v;
        }
        index -= block;
        block /= Q;
    }
    fail(Errc::bad_dims, "projective point index out of range");
}

std::uint64_t point_index(const FieldCtx& ctx, std::uint32_t k, const ExtVec& v) {
    const std::uint64_t Q = ctx.qm();
    std::uint32_t l = 0;
    while (l < k && v[l] == 0) ++l;
    require(l < k && v[l] == 1, Errc::validation_error, "point not in normalized form");
    std::uint64_t base = 0, block = 1;
    for (std::uint32_t i = 0; i + 1 < k; ++i) block *= Q;
    for (std::uint32_t i = 0; i < l; ++i) {
        base += block;
        block /= Q;
    }
    std::uint64_t off = 0;
    for (std::uint32_t j = l + 1; j < k; ++j) off = off * Q + v[j];
    return base + off;
}

void normalize_point(const FieldCtx& ctx, ExtVec& v) {
    std::uint32_t l = 0;
    while (l < v.size() && v[l] == 0) ++l;
    require(l < v.size(), Errc::zero_vector, "cannot normalize the zero vector");
    if (v[l] == 1) return;
    std::uint32_t iv = ctx.inv(v[l]);
    for (auto& x : v) x = ctx.mul(x, iv);
}

std::uint64_t subspace_count(const FieldCtx& ctx, std::uint32_t k, std::uint32_t h, std::uint64_t cap) {
    require(h <= k, Errc::bad_dims, "subspace dimension exceeds ambient");
    const __uint128_t Q = ctx.qm();
    __uint128_t num = 1, den = 1;
    auto qpow = [&](std::uint32_t t) {
        __uint128_t r = 1;
        for (std::uint32_t i = 0; i < t; ++i) r *= Q;
        return r;
    };
    for (std::uint32_t i = 0; i < h; ++i) {
        num *= qpow(k - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    __uint128_t count = num / den;
    require(count <= cap, Errc::enumeration_cap_exceeded,
            "subspace sweep exceeds cap");
    return static_cast<std::uint64_t>(count);
}

} // namespace rmint
