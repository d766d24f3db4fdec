#pragma once

#include <utility>

#include "rmint/ext_linalg.hpp"

namespace rmint {

/// Duality data for sigma = the standard dot product on F_{q^m}^k and
/// sigma'(u, v) = Tr_{q^m/q}(sigma(u, v)). Holds the mk x mk Gram matrix of
/// sigma' in flattened coordinates (block diagonal: k copies of the trace
/// form of the digit basis), built once per (ctx, k).
class DualityCtx {
public:
    static DualityCtx make(FieldCtxPtr ctx, std::uint32_t k);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint32_t k() const { return k_; }
    const FqMatrix& gram() const { return gram_; }

private:
    FieldCtxPtr ctx_;
    std::uint32_t k_ = 0;
    FqMatrix gram_;
};

/// sigma-orthogonal complement of an F_{q^m}-subspace; dims sum to k.
ExtSubspace perp_ext(const DualityCtx& d, const ExtSubspace& w);

/// sigma'-orthogonal complement of an F_q-subspace of F_q^{mk};
/// dims sum to mk, involutive, order reversing.
FqSubspace perp_trace(const DualityCtx& d, const FqSubspace& u);

/// W^perp = W^perp' for F_{q^m}-subspaces (flat of perp_ext vs perp_trace of flat).
bool check_ext_compat(const DualityCtx& d, const ExtSubspace& w);

/// Both sides of the weight transfer law:
///   wt_{U^perp'}(W^perp) - wt_U(W)  ==  mk - dim U - m dim W.
std::pair<long, long> dual_weight_transfer(const DualityCtx& d, const FqSubspace& u, const ExtSubspace& w);

} // namespace rmint
