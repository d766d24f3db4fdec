#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rmint/duality.hpp"
#include "rmint/ext_linalg.hpp"
#include "rmint/rank_code.hpp"

namespace rmint {

/// The q-system attached to a code (or any F_q-subspace of F_{q^m}^k): the
/// flat U in F_q^{mk} together with the unflattened generating vectors and
/// the spanning flag over F_{q^m}.
class QSystem {
public:
    static QSystem from_code(const RankCode& c);
    static QSystem from_subspace(FieldCtxPtr ctx, std::uint32_t k, FqSubspace u);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint32_t k() const { return k_; }
    const FqSubspace& flat() const { return flat_; }
    const std::vector<ExtVec>& gens() const { return gens_; }
    std::size_t dim() const { return flat_.dim(); }
    bool spanning() const { return spanning_; }

private:
    FieldCtxPtr ctx_;
    std::uint32_t k_ = 0;
    FqSubspace flat_;
    std::vector<ExtVec> gens_;
    bool spanning_ = false;
};

/// wt_U(W) = dim(U cap W) for an F_{q^m}-subspace W.
std::size_t weight_in(const QSystem& s, const ExtSubspace& w);

/// Weight of the projective point <v>; v need not be normalized.
std::size_t point_weight(const QSystem& s, const ExtVec& v);

/// Weight of the hyperplane v^perp (defined by the dual vector v).
std::size_t hyperplane_weight(const QSystem& s, const ExtVec& dual);

/// Weights of all hyperplanes, indexed by dual point index.
std::vector<std::uint8_t> hyperplane_weight_table(const QSystem& s, const Caps& caps = {},
                                                  unsigned threads = 1);

/// Weights of all projective points, indexed by point index.
std::vector<std::uint8_t> point_weight_table(const QSystem& s, const Caps& caps = {},
                                             unsigned threads = 1);

/// Buckets the q^dim - 1 nonzero vectors of U by projective point: entry at
/// a point index is the number of nonzero vectors of U on that point, which
/// is q^w - 1 for a point of weight w. One enumeration feeds the weight
/// spectrum, the scattered fast path and the line profiles.
std::vector<std::uint32_t> point_bucket_counts(const QSystem& s, const Caps& caps = {});

/// d = n - max hyperplane weight (requires a spanning system).
std::size_t min_distance_geometric(const QSystem& s, const Caps& caps = {}, unsigned threads = 1);

/// w(xG) = n - dim(U cap x^perp) for x != 0.
std::size_t codeword_weight_geometric(const QSystem& s, const ExtVec& x);

struct SpannableResult {
    bool spannable = false;
    /// dual vectors of the witness hyperplanes (H = v^perp), when spannable
    std::optional<std::pair<ExtVec, ExtVec>> witness;
    std::uint64_t hyperplanes = 0;
    std::uint64_t pairs_swept = 0;      // all unordered pairs are accounted for
    std::uint64_t pairs_eliminated = 0; // pairs that needed an explicit sum-dimension check
};

/// Exhaustive 2-spannability test: U = (H_1 cap U) + (H_2 cap U) for some
/// hyperplane pair. Pairs whose intersection dimensions cannot reach dim U
/// are decided by the dimension bound; the rest get explicit checks. The
/// returned witness is the lexicographically least pair in dual point order.
SpannableResult is_two_spannable(const QSystem& s, const Caps& caps = {}, unsigned threads = 1);

struct IntersectingResult {
    bool intersecting = false;
    /// witness pair of codewords with disjoint supports, when not intersecting
    std::optional<std::pair<ExtVec, ExtVec>> witness;
    std::uint64_t classes = 0;
    std::uint64_t pairs_swept = 0;
    std::uint64_t pairs_eliminated = 0;
    const char* method = "";
};

/// Definitional certificate: sweeps unordered pairs of projective codeword
/// classes for a disjoint-support pair.
IntersectingResult is_intersecting_definitional(const RankCode& c, const Caps& caps = {},
                                                unsigned threads = 1);

/// Geometric certificate via the 2-spannability of the associated system.
IntersectingResult is_intersecting_geometric(const RankCode& c, const Caps& caps = {},
                                             unsigned threads = 1);

struct ComplementaryWeights {
    bool complementary = false;
    std::optional<std::pair<ExtVec, ExtVec>> points;
    std::size_t line_weight = 0;
};

/// True iff two distinct points P_1 != P_2 of the 2-dimensional subspace
/// `line` satisfy wt(P_1) + wt(P_2) = wt(line) in s.
ComplementaryWeights has_complementary_weights(const QSystem& s, const ExtSubspace& line);

/// 2-spannability via the dual route: exists a line whose intersection with
/// U^perp' has complementary weights. Must agree with is_two_spannable.
SpannableResult is_two_spannable_via_dual(const QSystem& s, const Caps& caps = {}, unsigned threads = 1);

} // namespace rmint
