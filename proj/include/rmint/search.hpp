#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmint/bounds.hpp"
#include "rmint/evasive.hpp"
#include "rmint/q_system.hpp"

namespace rmint {

enum class SearchStrategy { uniform, hill_climb };

struct PunctureCandidate {
    std::uint64_t index = 0;                  // projective index of the defining dual vector
    std::vector<std::uint8_t> dual_vector;    // functional on U's coordinates, length n
    bool spanning = false;
    bool intersecting = false;
    std::size_t distance = 0;                 // 0 when not spanning
};

struct SearchResult {
    bool found = false;
    std::uint64_t found_trial = 0;
    std::optional<FqSubspace> subspace;          // scattered hits
    std::optional<std::vector<ExtVec>> generator; // intersecting hits (rows of G)
    std::uint64_t trials_used = 0;
    double wall_ms = 0.0;
    // exhaustive scans
    std::uint64_t enumerated = 0;
    std::vector<PunctureCandidate> candidates;
    std::uint64_t intersecting_hits = 0;
};

/// Seeded hunt for a scattered F_q-subspace of F_{q^m}^k of the given
/// dimension. Rejects dimensions above the mk/2 bound. Every hit is
/// re-certified by a fresh single-threaded sweep.
SearchResult search_scattered(const FieldCtxPtr& ctx, std::uint32_t k, std::size_t dim,
                              std::uint64_t budget, std::uint64_t seed,
                              SearchStrategy strategy = SearchStrategy::uniform, const Caps& caps = {},
                              unsigned threads = 1);

/// Seeded hunt for an intersecting [n, k] code. Refuses parameter points the
/// classifier rules out, unless override is set (falsification runs). Every
/// 100th trial is spot-checked with the definitional certifier.
SearchResult search_intersecting(const FieldCtxPtr& ctx, std::uint32_t k, std::uint32_t n,
                                 std::uint64_t budget, std::uint64_t seed,
                                 SearchStrategy strategy = SearchStrategy::uniform,
                                 bool override_not_exists = false, const Caps& caps = {},
                                 unsigned threads = 1);

/// Exhaustive scan over all spanning codimension-1 subspaces of U_C
/// (equivalently G*A for A of rank n-1 over F_q), certifying each punctured
/// code. Reports a per-candidate verdict table.
SearchResult puncture_scan(const RankCode& c, const Caps& caps = {}, unsigned threads = 1);

/// FNV-1a-64 digest of the canonical basis serialization; used to
/// content-address archived certificates.
std::uint64_t subspace_digest(const FqSubspace& s);
std::string digest_hex(std::uint64_t digest);

} // namespace rmint
