#include "rmint/duality.hpp"

namespace rmint {

DualityCtx DualityCtx::make(FieldCtxPtr ctx, std::uint32_t k) {
    DualityCtx d;
    d.ctx_ = std::move(ctx);
    d.k_ = k;
    const auto& f = *d.ctx_;
    const std::uint32_t m = f.m();
    // trace form of the digit basis: T[a][b] = Tr(x^a * x^b)
    FqMatrix t(f.gf(), m, m);
    std::vector<std::uint32_t> xpow(m); // encoding of x is q (only needed for m >= 2)
    xpow[0] = 1;
    for (std::uint32_t a = 1; a < m; ++a) xpow[a] = f.mul(xpow[a - 1], f.q());
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) t.set(a, b, f.trace_to_q(f.mul(xpow[a], xpow[b])));
    require(t.rank() == m, Errc::validation_error, "trace form is degenerate (internal)");
    const std::size_t mk = static_cast<std::size_t>(m) * k;
    d.gram_ = FqMatrix(f.gf(), mk, mk);
    for (std::uint32_t j = 0; j < k; ++j)
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b) d.gram_.set(j * m + a, j * m + b, t.get(a, b));
    return d;
}

ExtSubspace perp_ext(const DualityCtx& d, const ExtSubspace& w) {
    auto basis = ext_kernel(*d.ctx(), w.basis(), d.k());
    return ExtSubspace::from_vectors(d.ctx(), d.k(), std::move(basis));
}

FqSubspace perp_trace(const DualityCtx& d, const FqSubspace& u) {
    require(u.ambient() == d.gram().rows(), Errc::ambient_mismatch,
            "subspace ambient does not match mk");
    if (u.dim() == 0) return FqSubspace::full(u.gf(), u.ambient());
    FqMatrix m = u.basis().multiplied(d.gram());
    return FqSubspace::from_matrix(kernel(m));
}

bool check_ext_compat(const DualityCtx& d, const ExtSubspace& w) {
    ExtSubspace wp = perp_ext(d, w);
    FqSubspace via_trace = perp_trace(d, w.flat());
    return wp.flat() == via_trace;
}

std::pair<long, long> dual_weight_transfer(const DualityCtx& d, const FqSubspace& u, const ExtSubspace& w) {
    const auto& f = *d.ctx();
    const long mk = static_cast<long>(f.m()) * d.k();
    ExtSubspace wp = perp_ext(d, w);
    FqSubspace up = perp_trace(d, u);
    long lhs = static_cast<long>(intersect(up, wp.flat()).dim()) -
               static_cast<long>(intersect(u, w.flat()).dim());
    long rhs = mk - static_cast<long>(u.dim()) - static_cast<long>(f.m()) * static_cast<long>(w.ext_dim());
    return {lhs, rhs};
}

} // namespace rmint
