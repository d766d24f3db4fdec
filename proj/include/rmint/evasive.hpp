#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmint/q_system.hpp"

namespace rmint {

struct EvasiveSpec {
    std::uint32_t h = 1;
    std::uint64_t r = 1;
};

struct EvasiveCertificate {
    bool pass = false;
    /// basis of a violating h-subspace T with dim(U cap T) > r, when failing;
    /// lexicographically least in sweep order
    std::optional<std::vector<ExtVec>> witness;
    std::size_t witness_weight = 0;
    std::uint64_t swept = 0;
};

/// Exhaustive (h, r)-evasiveness certificate: dim(U cap T) <= r for every
/// h-dimensional F_{q^m}-subspace T.
EvasiveCertificate is_evasive(const QSystem& u, EvasiveSpec spec, const Caps& caps = {},
                              unsigned threads = 1);

/// Scattered = (1,1)-evasive. Fast path: bucket the nonzero vectors of U by
/// projective point; scattered iff every nonempty bucket has exactly q-1.
EvasiveCertificate is_scattered(const QSystem& u, const Caps& caps = {});

/// dim U <= mk/2 for scattered U.
std::int64_t scattered_bound(std::uint32_t m, std::uint32_t k);
/// dim U <= km/(h+1) for h-scattered U (of dim > k).
std::int64_t h_scattered_bound(std::uint32_t m, std::uint32_t k, std::uint32_t h);
/// dim U <= mk - mkh/(r+1) for (h, r)-evasive U; requires k < m.
std::int64_t evasive_bound(std::uint32_t m, std::uint32_t k, std::uint32_t h, std::uint64_t r);

/// For an intersecting code with k >= 3, U_C^perp' must be
/// (1, 2m-n-2)-evasive; runs that certificate.
EvasiveCertificate dual_evasiveness_check(const RankCode& c, const Caps& caps = {},
                                          unsigned threads = 1);

} // namespace rmint
