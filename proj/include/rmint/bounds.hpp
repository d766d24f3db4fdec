#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmint/q_system.hpp"

namespace rmint {

struct ParamQuery {
    std::uint64_t q = 2;
    std::uint32_t m = 1, n = 1, k = 1;
    std::optional<std::uint32_t> d;
};

enum class Existence { exists, not_exists, open };

const char* to_string(Existence e);

struct ExistenceVerdict {
    Existence status = Existence::open;
    std::vector<std::string> reasons; // rule ids that fired
};

/// 2k-1 <= n <= 2m-3 for intersecting codes (k >= 2).
std::pair<std::int64_t, std::int64_t> length_bounds(std::uint32_t k, std::uint32_t m);

/// Constructive window 2k-1 <= n <= 2m-2k+1 (may be empty).
std::pair<std::int64_t, std::int64_t> existence_window(std::uint32_t k, std::uint32_t m);

/// max{k, n-m+2} <= d <= m for k >= 3, else k <= d <= m.
std::pair<std::int64_t, std::int64_t> distance_bounds(std::uint32_t n, std::uint32_t k, std::uint32_t m);

/// n <= 2m - floor((k+4)/2) for k >= 3.
std::int64_t refined_length_bound(std::uint32_t k, std::uint32_t m);

/// k <= floor(2(r-1) - (r^2-r)/m) for r = 2m-n.
std::int64_t refined_dim_bound(std::uint32_t r, std::uint32_t m);

// Rule ids attached to verdicts.
namespace rules {
inline constexpr const char* length_lower = "length-lower-bound";
inline constexpr const char* length_upper = "length-upper-bound";
inline constexpr const char* refined_length = "refined-length-bound";
inline constexpr const char* extremal_k3_m6 = "extremal-length-k3-m6";
inline constexpr const char* k3_m5_n6 = "k3-m5-n6-nonexistence";
inline constexpr const char* window = "existence-window";
inline constexpr const char* even_m_extremal = "even-m-extremal-existence";
inline constexpr const char* k1_single_class = "k1-single-class";
inline constexpr const char* k1_nondegeneracy = "k1-nondegeneracy";
inline constexpr const char* open_default = "open-default";
} // namespace rules

/// Rule cascade for the existence of a nondegenerate intersecting code with
/// the given parameters. Open is the default: the classifier never
/// extrapolates beyond the implemented rules.
ExistenceVerdict classify(const ParamQuery& p);

/// Rule-conflict scan over a small grid; throws on any parameter cell that is
/// simultaneously Exists and NotExists. Runs once on first classify().
void bounds_self_check();

struct ExtremalReport {
    bool k_is_3 = false;
    bool m_ge_6 = false;
    bool dual_scattered = false;
    std::size_t dual_dim = 0;
    std::size_t d = 0;
    bool d_is_m_minus_1 = false;
    bool intersecting = false;
    bool characterization_holds = false; // (k=3 & m>=6 & dual scattered) == intersecting
};

/// Extremal characterization at n = 2m-3: the code is intersecting iff k = 3,
/// m >= 6 and U_C^perp' is scattered (of dimension m+3); then d = m-1. The
/// biconditional is enforced as a tripwire.
ExtremalReport extremal_certify(const RankCode& c, const Caps& caps = {}, unsigned threads = 1);

} // namespace rmint
