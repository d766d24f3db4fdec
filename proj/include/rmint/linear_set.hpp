#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmint/q_system.hpp"

namespace rmint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Point-weight spectrum and (for k = 3) line-intersection profile of the
/// linear set L_U in PG(k-1, q^m).
struct LinearSetStats {
    std::size_t rank = 0;                          // dim_{F_q}(U)
    std::uint64_t cardinality = 0;                 // |L_U|
    std::map<std::size_t, std::uint64_t> points;   // N_i for i >= 1
    std::map<std::uint64_t, std::uint64_t> tau;    // tau_j, only when lines were swept
    bool has_tau = false;
};

/// N_i counts via one bucket sweep; the cardinality and weighted-count
/// identities are asserted exactly.
LinearSetStats weight_spectrum(const QSystem& s, const Caps& caps = {});

/// Adds the full tau profile (k = 3 only); the three line-count identities
/// are asserted exactly.
LinearSetStats line_profile(const QSystem& s, const Caps& caps = {}, unsigned threads = 1);

/// Projection of L_U from a point P into the quotient geometry, realized via
/// the coordinate complement of P's pivot. rank drops by wt_U(P).
QSystem project_from_point(const QSystem& s, const ExtVec& point);

/// Empirical confirmation of the rank-5 weight-2 bound on PG(1, q^5):
/// N_2 <= q^2 + 1 for q > 2 and N_2 <= 6 for q = 2. Returns the measured N_2;
/// a violation aborts with a diagnostic (it would signal a bug here, not a
/// refutation of the external result).
std::uint64_t n2_bound_check(const QSystem& s);

/// Exact rational tau profile from the three fundamental line-count
/// identities, with some entries optionally fixed. Flags negativity and
/// non-integrality; the whole point of exact arithmetic is that those flags
/// are trustworthy.
struct TauProfile {
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    BigInt cardinality;
    std::map<std::uint64_t, Rational> values;
    bool negative = false;
    bool non_integral = false;
};

TauProfile solve_tau_profile(std::uint64_t q, std::uint32_t m, const BigInt& cardinality,
                             const std::vector<std::uint64_t>& support,
                             const std::map<std::uint64_t, BigInt>& fixed);

// Closed forms for the scattered rank-6 profile on PG(2, q^5).
BigInt scattered_tau_1(std::uint64_t q);
BigInt scattered_tau_qplus1(std::uint64_t q);
BigInt scattered_tau_q2q1(std::uint64_t q);

/// Closed-form tau_{q+1} of the one-weight-2-point case; negative for every
/// prime power q. (The three counting identities alone admit a nonnegative
/// solution; the negativity encodes the refined per-point analysis.)
Rational weight2_tau_qplus1(std::uint64_t q);

/// Combined non-existence report for length-6, dimension-3, distance-3 codes
/// over F_{q^5}/F_q.
struct Contradiction633 {
    std::uint64_t q = 0;
    BigInt tau_1, tau_qplus1, tau_q2q1;   // scattered-case profile (solver output)
    bool scattered_matches_closed_form = false;
    BigInt required_weight3_lines;        // tau_{q^2+q+1} forced by the scattered profile
    BigInt per_point_cap;                 // q^2+1 for q > 2, 6 for q = 2
    BigInt bound_weight3_lines;           // 1 + (q^2+q+1) * (cap - 1)
    bool scattered_contradiction = false; // bound < required
    Rational weight2_value;               // closed-form tau_{q+1}
    bool weight2_negative = false;
    TauProfile weight2_counting;          // plain counting solve of the same case
    bool q2_gap = false;                  // q = 2 is not decided by this inequality
    std::string note;
};

Contradiction633 verify_633_contradiction(std::uint64_t q);

bool is_prime_power(std::uint64_t q);

} // namespace rmint
