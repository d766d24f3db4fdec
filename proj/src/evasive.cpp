#include "rmint/evasive.hpp"

#include <algorithm>

#include "rmint/echelon.hpp"

namespace rmint {

EvasiveCertificate is_evasive(const QSystem& u, EvasiveSpec spec, const Caps& caps, unsigned threads) {
    const auto& ctx = *u.ctx();
    const std::uint32_t k = u.k(), m = ctx.m();
    require(spec.h >= 1 && spec.h <= k, Errc::precondition_violated, "need 1 <= h <= k");
    require(spec.r >= spec.h && spec.r <= static_cast<std::uint64_t>(k) * m, Errc::precondition_violated,
            "need h <= r <= km");
    EvasiveCertificate cert;
    if (spec.h == 1) {
        auto table = point_weight_table(u, caps, threads);
        cert.swept = table.size();
        for (std::uint64_t i = 0; i < table.size(); ++i)
            if (table[i] > spec.r) {
                cert.pass = false;
                cert.witness = std::vector<ExtVec>{point_rep(ctx, k, i)};
                cert.witness_weight = table[i];
                return cert;
            }
        cert.pass = true;
        return cert;
    }
    // general h: echelon-form enumeration in lex order
    const std::uint64_t total = subspace_count(ctx, k, spec.h, caps.sweep);
    std::uint64_t seen = 0;
    bool failed = false;
    for_each_ext_subspace(ctx, k, spec.h, caps.sweep, [&](const std::vector<ExtVec>& basis) {
        ++seen;
        auto w = ExtSubspace::from_vectors(u.ctx(), k, basis);
        std::size_t wt = weight_in(u, w);
        if (wt > spec.r) {
            cert.witness = basis;
            cert.witness_weight = wt;
            failed = true;
            return false;
        }
        return true;
    });
    cert.swept = failed ? seen : total;
    cert.pass = !failed;
    return cert;
}

EvasiveCertificate is_scattered(const QSystem& u, const Caps& caps) {
    const auto& ctx = *u.ctx();
    const std::uint32_t q = ctx.q();
    auto buckets = point_bucket_counts(u, caps);
    EvasiveCertificate cert;
    cert.swept = buckets.size();
    for (std::uint64_t i = 0; i < buckets.size(); ++i) {
        if (buckets[i] == 0 || buckets[i] == q - 1) continue;
        cert.pass = false;
        cert.witness = std::vector<ExtVec>{point_rep(ctx, u.k(), i)};
        // bucket q^w - 1 -> weight w
        std::size_t w = 0;
        for (std::uint64_t b = buckets[i] + 1; b > 1; b /= q) ++w;
        cert.witness_weight = w;
        return cert;
    }
    cert.pass = true;
    return cert;
}

std::int64_t scattered_bound(std::uint32_t m, std::uint32_t k) {
    return static_cast<std::int64_t>(m) * k / 2;
}

std::int64_t h_scattered_bound(std::uint32_t m, std::uint32_t k, std::uint32_t h) {
    return static_cast<std::int64_t>(k) * m / (h + 1);
}

std::int64_t evasive_bound(std::uint32_t m, std::uint32_t k, std::uint32_t h, std::uint64_t r) {
    require(k < m, Errc::precondition_violated, "evasive bound requires k < m");
    const std::int64_t mk = static_cast<std::int64_t>(m) * k;
    // floor(mk - mkh/(r+1)) = mk - ceil(mkh/(r+1))
    std::int64_t num = mk * static_cast<std::int64_t>(h);
    std::int64_t den = static_cast<std::int64_t>(r) + 1;
    return mk - (num + den - 1) / den;
}

EvasiveCertificate dual_evasiveness_check(const RankCode& c, const Caps& caps, unsigned threads) {
    require(c.k() >= 3, Errc::precondition_violated, "dual evasiveness check needs k >= 3");
    const auto& ctx = *c.ctx();
    const std::int64_t r = 2 * static_cast<std::int64_t>(ctx.m()) - static_cast<std::int64_t>(c.n()) - 2;
    require(r >= 1, Errc::precondition_violated, "need n <= 2m - 3 for the dual evasiveness spec");
    QSystem s = QSystem::from_code(c);
    auto duality = DualityCtx::make(c.ctx(), s.k());
    QSystem dual_sys = QSystem::from_subspace(c.ctx(), s.k(), perp_trace(duality, s.flat()));
    return is_evasive(dual_sys, {1, static_cast<std::uint64_t>(r)}, caps, threads);
}

} // namespace rmint
