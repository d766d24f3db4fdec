#include "rmint/bounds.hpp"

#include <mutex>

#include "rmint/evasive.hpp"
#include "rmint/linear_set.hpp"

namespace rmint {

const char* to_string(Existence e) {
    switch (e) {
    case Existence::exists: return "Exists";
    case Existence::not_exists: return "NotExists";
    case Existence::open: return "Open";
    }
    return "?";
}

std::pair<std::int64_t, std::int64_t> length_bounds(std::uint32_t k, std::uint32_t m) {
    return {2 * static_cast<std::int64_t>(k) - 1, 2 * static_cast<std::int64_t>(m) - 3};
}

std::pair<std::int64_t, std::int64_t> existence_window(std::uint32_t k, std::uint32_t m) {
    return {2 * static_cast<std::int64_t>(k) - 1,
            2 * static_cast<std::int64_t>(m) - 2 * static_cast<std::int64_t>(k) + 1};
}

std::pair<std::int64_t, std::int64_t> distance_bounds(std::uint32_t n, std::uint32_t k, std::uint32_t m) {
    std::int64_t lo = k;
    if (k >= 3) lo = std::max<std::int64_t>(lo, static_cast<std::int64_t>(n) - m + 2);
    return {lo, m};
}

std::int64_t refined_length_bound(std::uint32_t k, std::uint32_t m) {
    require(k >= 3, Errc::precondition_violated, "refined length bound needs k >= 3");
    return 2 * static_cast<std::int64_t>(m) - static_cast<std::int64_t>((k + 4) / 2);
}

std::int64_t refined_dim_bound(std::uint32_t r, std::uint32_t m) {
    // floor(2(r-1) - (r^2 - r)/m) with exact integer arithmetic
    const std::int64_t num = static_cast<std::int64_t>(m) * (2 * static_cast<std::int64_t>(r) - 2) -
                             (static_cast<std::int64_t>(r) * r - r);
    return num >= 0 ? num / m : -((-num + m - 1) / static_cast<std::int64_t>(m));
}

namespace {

ExistenceVerdict classify_impl(const ParamQuery& p) {
    require(is_prime_power(p.q), Errc::precondition_violated, "q must be a prime power");
    require(p.m >= 1 && p.n >= 1 && p.k >= 1, Errc::precondition_violated, "m, n, k must be >= 1");
    ExistenceVerdict v;
    if (p.k == 1) {
        // every [n,1] code is intersecting (single projective class of
        // codewords); nondegeneracy caps n at m
        if (p.n <= p.m) {
            v.status = Existence::exists;
            v.reasons.push_back(rules::k1_single_class);
        } else {
            v.status = Existence::not_exists;
            v.reasons.push_back(rules::k1_nondegeneracy);
        }
        return v;
    }
    auto [lo, hi] = length_bounds(p.k, p.m);
    if (p.n < lo) {
        v.status = Existence::not_exists;
        v.reasons.push_back(rules::length_lower);
        return v;
    }
    if (p.n > hi) {
        v.status = Existence::not_exists;
        v.reasons.push_back(rules::length_upper);
        return v;
    }
    if (p.k >= 3 && p.n > refined_length_bound(p.k, p.m)) {
        v.status = Existence::not_exists;
        v.reasons.push_back(rules::refined_length);
        return v;
    }
    if (p.k >= 3 && static_cast<std::int64_t>(p.n) == hi && (p.k != 3 || p.m < 6)) {
        v.status = Existence::not_exists;
        v.reasons.push_back(rules::extremal_k3_m6);
        return v;
    }
    if (p.n == 6 && p.k == 3 && p.m == 5) {
        v.status = Existence::not_exists;
        v.reasons.push_back(rules::k3_m5_n6);
        return v;
    }
    auto [wlo, whi] = existence_window(p.k, p.m);
    if (p.n >= wlo && static_cast<std::int64_t>(p.n) <= whi) {
        v.status = Existence::exists;
        v.reasons.push_back(rules::window);
        return v;
    }
    if (p.k == 3 && static_cast<std::int64_t>(p.n) == hi && p.m >= 6 && p.m % 2 == 0) {
        v.status = Existence::exists;
        v.reasons.push_back(rules::even_m_extremal);
        return v;
    }
    v.status = Existence::open;
    v.reasons.push_back(rules::open_default);
    return v;
}

std::once_flag self_check_flag;

} // namespace

void bounds_self_check() {
    // Exists and NotExists come from disjoint rule sets; scan a grid and make
    // sure no cell can be argued both ways (the cascade returns at the first
    // rule, so probe both directions explicitly).
    for (std::uint64_t q : {2, 3, 4}) {
        for (std::uint32_t m = 1; m <= 10; ++m)
            for (std::uint32_t k = 1; k <= 6; ++k)
                for (std::uint32_t n = 1; n <= 2 * m; ++n) {
                    ParamQuery p{q, m, n, k, std::nullopt};
                    auto v = classify_impl(p);
                    if (v.status != Existence::exists) continue;
                    // an Exists cell must violate no necessary condition
                    auto [lo, hi] = length_bounds(k, m);
                    bool violates = k >= 2 && (n < lo || static_cast<std::int64_t>(n) > hi);
                    if (k >= 3) {
                        violates = violates || static_cast<std::int64_t>(n) > refined_length_bound(k, m);
                        violates = violates ||
                                   (static_cast<std::int64_t>(n) == hi && (k != 3 || m < 6));
                    }
                    violates = violates || (n == 6 && k == 3 && m == 5);
                    require(!violates, Errc::validation_error,
                            "rule conflict at q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                " k=" + std::to_string(k) + " n=" + std::to_string(n));
                }
    }
}

ExistenceVerdict classify(const ParamQuery& p) {
    std::call_once(self_check_flag, bounds_self_check);
    return classify_impl(p);
}

ExtremalReport extremal_certify(const RankCode& c, const Caps& caps, unsigned threads) {
    const auto& ctx = *c.ctx();
    require(c.n() == 2 * static_cast<std::size_t>(ctx.m()) - 3, Errc::precondition_violated,
            "extremal certification applies at n = 2m-3");
    QSystem s = QSystem::from_code(c);
    ExtremalReport rep;
    rep.k_is_3 = c.k() == 3;
    rep.m_ge_6 = ctx.m() >= 6;
    auto duality = DualityCtx::make(c.ctx(), s.k());
    QSystem dual_sys = QSystem::from_subspace(c.ctx(), s.k(), perp_trace(duality, s.flat()));
    rep.dual_dim = dual_sys.dim();
    rep.dual_scattered = is_scattered(dual_sys, caps).pass;
    rep.d = min_distance_geometric(s, caps, threads);
    c.cache_distance(rep.d);
    rep.d_is_m_minus_1 = rep.d == static_cast<std::size_t>(ctx.m()) - 1;
    rep.intersecting = is_intersecting_geometric(c, caps, threads).intersecting;
    bool conj = rep.k_is_3 && rep.m_ge_6 && rep.dual_scattered;
    rep.characterization_holds = conj == rep.intersecting;
    require(rep.characterization_holds, Errc::validation_error,
            "extremal characterization tripwire: conjunction and intersecting verdict disagree");
    if (conj)
        require(rep.d_is_m_minus_1, Errc::validation_error,
                "extremal characterization tripwire: d != m-1 on a certified extremal code");
    return rep;
}

} // namespace rmint
