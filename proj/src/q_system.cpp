#include "rmint/q_system.hpp"

#include <algorithm>
#include <atomic>

#include "rmint/echelon.hpp"
#include "rmint/parallel.hpp"

namespace rmint {

namespace {

// Echelonized rows of a small subspace, packed when possible.
struct SmallRows {
    std::vector<std::uint64_t> words;              // q = 2, width <= 64
    std::vector<std::vector<std::uint8_t>> bytes;  // otherwise
    std::size_t nrows() const { return words.empty() ? bytes.size() : words.size(); }
};

// Rank scratch over either representation.
struct RankScratch {
    bool use_bits = false;
    BitEchelon bits;
    ByteEchelon bytes;

    void init(const GF* gf, std::size_t width) {
        use_bits = gf->q() == 2 && width <= 64;
        if (use_bits)
            bits.reset();
        else {
            require(width <= 64, Errc::precondition_violated, "ambient width > 64 unsupported in sweeps");
            bytes.init(gf, width);
        }
    }
    void reset() {
        if (use_bits)
            bits.reset();
        else
            bytes.reset();
    }
    bool insert_word(std::uint64_t w) { return bits.insert(w); }
    bool insert_bytes(const std::uint8_t* r) { return bytes.insert(r); }
    void insert_rows(const SmallRows& rows) {
        if (use_bits)
            for (auto w : rows.words) bits.insert(w);
        else
            for (const auto& r : rows.bytes) bytes.insert(r.data());
    }
    int count() const { return use_bits ? bits.count : bytes.count; }
    SmallRows snapshot() const {
        SmallRows out;
        if (use_bits)
            out.words = bits.rows();
        else
            out.bytes = bytes.rows();
        return out;
    }
};

std::uint64_t row_as_word(const FqMatrix& m, std::size_t r) { return m.row_word(r); }

// Rows of the system flat, in scratch-ready form.
SmallRows system_rows(const QSystem& s) {
    SmallRows out;
    const auto& b = s.flat().basis();
    if (s.flat().gf()->q() == 2 && s.flat().ambient() <= 64) {
        for (std::size_t r = 0; r < b.rows(); ++r) out.words.push_back(row_as_word(b, r));
    } else {
        for (std::size_t r = 0; r < b.rows(); ++r) out.bytes.push_back(b.row(r));
    }
    return out;
}

// Appends the m flat rows of the point <v> to the scratch.
void insert_point_rows(const QSystem& s, RankScratch& scratch, const ExtVec& v) {
    const auto& ctx = *s.ctx();
    const std::uint32_t m = ctx.m(), k = s.k();
    std::uint32_t xa = 1;
    std::vector<std::uint8_t> flat_row(static_cast<std::size_t>(m) * k);
    for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t j = 0; j < k; ++j) ctx.digits_of(ctx.mul(xa, v[j]), flat_row.data() + j * m);
        if (scratch.use_bits) {
            std::uint64_t w = 0;
            for (std::size_t t = 0; t < flat_row.size(); ++t) w |= static_cast<std::uint64_t>(flat_row[t] & 1u) << t;
            scratch.insert_word(w);
        } else {
            scratch.insert_bytes(flat_row.data());
        }
        if (a + 1 < m) xa = ctx.mul(xa, ctx.q());
    }
}

} // namespace

QSystem QSystem::from_code(const RankCode& c) {
    require(is_nondegenerate(c), Errc::degenerate_code,
            "code is degenerate; no associated system");
    const auto& ctx = *c.ctx();
    const auto k = static_cast<std::uint32_t>(c.k());
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(c.n());
    for (std::size_t j = 0; j < c.n(); ++j) rows.push_back(flatten(ctx, c.column(j)));
    QSystem s;
    s.ctx_ = c.ctx();
    s.k_ = k;
    s.flat_ = FqSubspace::from_rows(ctx.gf(), static_cast<std::size_t>(ctx.m()) * k, rows);
    require(s.flat_.dim() == c.n(), Errc::validation_error, "system dimension mismatch (internal)");
    for (std::size_t r = 0; r < s.flat_.dim(); ++r)
        s.gens_.push_back(unflatten(ctx, s.flat_.basis().row(r), k));
    auto copy = s.gens_;
    s.spanning_ = ext_rref(ctx, copy) == k;
    require(s.spanning_, Errc::validation_error, "nondegenerate code must give a spanning system");
    return s;
}

QSystem QSystem::from_subspace(FieldCtxPtr ctx, std::uint32_t k, FqSubspace u) {
    require(u.ambient() == static_cast<std::size_t>(ctx->m()) * k, Errc::ambient_mismatch,
            "subspace ambient must be m*k");
    QSystem s;
    s.ctx_ = std::move(ctx);
    s.k_ = k;
    s.flat_ = std::move(u);
    for (std::size_t r = 0; r < s.flat_.dim(); ++r)
        s.gens_.push_back(unflatten(*s.ctx_, s.flat_.basis().row(r), k));
    auto copy = s.gens_;
    s.spanning_ = ext_rref(*s.ctx_, copy) == k;
    return s;
}

std::size_t weight_in(const QSystem& s, const ExtSubspace& w) {
    require(s.ctx().get() == w.ctx().get() || (s.ctx()->qm() == w.ctx()->qm() && s.ctx()->q() == w.ctx()->q()),
            Errc::ambient_mismatch, "system and subspace live in different fields");
    require(s.k() == w.k(), Errc::ambient_mismatch, "system and subspace have different k");
    // dim(U cap F) = dim U + dim F - dim(U + F)
    return s.dim() + w.flat().dim() - sum(s.flat(), w.flat()).dim();
}

std::size_t point_weight(const QSystem& s, const ExtVec& v) {
    require(v.size() == s.k(), Errc::bad_dims, "point vector length mismatch");
    RankScratch scratch;
    scratch.init(s.flat().gf().get(), s.flat().ambient());
    scratch.insert_rows(system_rows(s));
    insert_point_rows(s, scratch, v);
    return s.ctx()->m() + s.dim() - static_cast<std::size_t>(scratch.count());
}

std::size_t hyperplane_weight(const QSystem& s, const ExtVec& dual) {
    const auto& ctx = *s.ctx();
    require(dual.size() == s.k(), Errc::bad_dims, "dual vector length mismatch");
    const std::uint32_t m = ctx.m();
    RankScratch scratch;
    scratch.init(ctx.gf().get(), m);
    std::vector<std::uint8_t> digits(m);
    for (const auto& u : s.gens()) {
        std::uint32_t dot = 0;
        for (std::uint32_t j = 0; j < s.k(); ++j) dot = ctx.add(dot, ctx.mul(dual[j], u[j]));
        ctx.digits_of(dot, digits.data());
        if (scratch.use_bits) {
            std::uint64_t w = 0;
            for (std::uint32_t t = 0; t < m; ++t) w |= static_cast<std::uint64_t>(digits[t] & 1u) << t;
            scratch.insert_word(w);
        } else {
            scratch.insert_bytes(digits.data());
        }
    }
    return s.dim() - static_cast<std::size_t>(scratch.count());
}

std::vector<std::uint8_t> hyperplane_weight_table(const QSystem& s, const Caps& caps, unsigned threads) {
    const auto& ctx = *s.ctx();
    const std::uint64_t total = projective_count(ctx, s.k());
    require(total <= caps.sweep, Errc::enumeration_cap_exceeded, "hyperplane sweep exceeds cap");
    std::vector<std::uint8_t> table(total);
    parallel_chunks(total, threads, 4096, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i)
            table[i] = static_cast<std::uint8_t>(hyperplane_weight(s, point_rep(ctx, s.k(), i)));
    });
    return table;
}

std::vector<std::uint8_t> point_weight_table(const QSystem& s, const Caps& caps, unsigned threads) {
    const auto& ctx = *s.ctx();
    const std::uint64_t total = projective_count(ctx, s.k());
    require(total <= caps.sweep, Errc::enumeration_cap_exceeded, "point sweep exceeds cap");
    std::vector<std::uint8_t> table(total);
    const SmallRows urows = system_rows(s);
    parallel_chunks(total, threads, 4096, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        RankScratch scratch;
        for (std::uint64_t i = b; i < e; ++i) {
            scratch.init(s.flat().gf().get(), s.flat().ambient());
            scratch.insert_rows(urows);
            insert_point_rows(s, scratch, point_rep(ctx, s.k(), i));
            table[i] = static_cast<std::uint8_t>(ctx.m() + s.dim() - scratch.count());
        }
    });
    return table;
}

std::vector<std::uint32_t> point_bucket_counts(const QSystem& s, const Caps& caps) {
    const auto& ctx = *s.ctx();
    const std::uint64_t npoints = projective_count(ctx, s.k());
    require(npoints <= caps.sweep, Errc::enumeration_cap_exceeded, "point table exceeds cap");
    std::vector<std::uint32_t> counts(npoints, 0);
    ExtVec v(s.k());
    for_each_vector(s.flat(), caps.enumeration, [&](std::span<const std::uint8_t> flat) {
        bool zero = true;
        for (auto x : flat)
            if (x) {
                zero = false;
                break;
            }
        if (zero) return true;
        for (std::uint32_t j = 0; j < s.k(); ++j) v[j] = ctx.from_digits(flat.data() + j * ctx.m());
        normalize_point(ctx, v);
        ++counts[point_index(ctx, s.k(), v)];
        return true;
    });
    return counts;
}

std::size_t min_distance_geometric(const QSystem& s, const Caps& caps, unsigned threads) {
    require(s.spanning(), Errc::precondition_violated, "distance needs a spanning system");
    auto table = hyperplane_weight_table(s, caps, threads);
    std::uint8_t maxw = 0;
    for (auto w : table) maxw = std::max(maxw, w);
    return s.dim() - maxw;
}

std::size_t codeword_weight_geometric(const QSystem& s, const ExtVec& x) {
    bool nonzero = std::any_of(x.begin(), x.end(), [](std::uint32_t v) { return v != 0; });
    require(nonzero, Errc::zero_vector, "codeword weight of the zero message");
    return s.dim() - hyperplane_weight(s, x);
}

namespace {

// Basis of U cap v^perp as scratch-ready rows: kernel of the dual-pairing
// matrix pulled back through the system generators.
SmallRows hyperplane_intersection_rows(const QSystem& s, const ExtVec& dual) {
    const auto& ctx = *s.ctx();
    const std::uint32_t m = ctx.m();
    const std::size_t n = s.dim();
    FqMatrix pairing(ctx.gf(), n, m);
    std::vector<std::uint8_t> digits(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t dot = 0;
        for (std::uint32_t j = 0; j < s.k(); ++j) dot = ctx.add(dot, ctx.mul(dual[j], s.gens()[i][j]));
        ctx.digits_of(dot, digits.data());
        for (std::uint32_t t = 0; t < m; ++t) pairing.set(i, t, digits[t]);
    }
    FqMatrix coeffs = kernel(pairing); // rows: coefficient vectors w.r.t. gens
    FqMatrix rows = coeffs.multiplied(s.flat().basis());
    RankScratch scratch;
    scratch.init(ctx.gf().get(), s.flat().ambient());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        if (scratch.use_bits)
            scratch.insert_word(rows.row_word(r));
        else {
            auto row = rows.row(r);
            scratch.insert_bytes(row.data());
        }
    }
    return scratch.snapshot();
}

// Sorted index lists by weight threshold: at_least[t] = indices with w >= t.
std::vector<std::vector<std::uint32_t>> suffix_lists(const std::vector<std::uint8_t>& w, std::size_t max_t) {
    std::vector<std::vector<std::uint32_t>> lists(max_t + 1);
    for (std::uint32_t i = 0; i < w.size(); ++i)
        for (std::size_t t = 0; t <= std::min<std::size_t>(w[i], max_t); ++t) lists[t].push_back(i);
    return lists;
}

} // namespace

SpannableResult is_two_spannable(const QSystem& s, const Caps& caps, unsigned threads) {
    require(s.k() >= 2, Errc::precondition_violated, "2-spannability needs k >= 2");
    const auto& ctx = *s.ctx();
    const std::size_t n = s.dim();
    SpannableResult res;
    res.hyperplanes = projective_count(ctx, s.k());
    require(res.hyperplanes * (res.hyperplanes - 1) / 2 <= caps.pairs, Errc::pair_cap_exceeded,
            "hyperplane pair sweep exceeds cap");
    res.pairs_swept = res.hyperplanes * (res.hyperplanes - 1) / 2;

    auto weights = hyperplane_weight_table(s, caps, threads);
    std::uint8_t maxw = 0;
    for (auto w : weights) maxw = std::max(maxw, w);
    // a witness pair needs w_i + w_j >= n
    if (static_cast<std::size_t>(maxw) * 2 < n) return res; // dimension bound settles every pair

    const std::size_t tmin = n > maxw ? n - maxw : 0;
    auto at_least = suffix_lists(weights, maxw);
    const auto& candidates = at_least[std::min(tmin, static_cast<std::size_t>(maxw))];

    // precompute intersection bases for every index that can appear in a pair
    std::vector<SmallRows> bases(res.hyperplanes);
    parallel_chunks(candidates.size(), threads, 64, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t t = b; t < e; ++t)
            bases[candidates[t]] = hyperplane_intersection_rows(s, point_rep(ctx, s.k(), candidates[t]));
    });

    FirstHit hit;
    struct Found {
        std::uint64_t i = UINT64_MAX, j = UINT64_MAX;
    };
    std::vector<Found> found(1 + candidates.size() / 16);
    std::atomic<std::uint64_t> eliminated{0};
    parallel_chunks(candidates.size(), threads, 16, [&](std::uint64_t chunk, std::uint64_t b, std::uint64_t e) {
        RankScratch scratch;
        std::uint64_t local_elim = 0;
        for (std::uint64_t t = b; t < e && !hit.should_abort(chunk); ++t) {
            std::uint32_t i = candidates[t];
            std::size_t need = n > weights[i] ? n - weights[i] : 0;
            if (need > maxw) continue;
            const auto& partners = at_least[std::min(need, static_cast<std::size_t>(maxw))];
            auto it = std::upper_bound(partners.begin(), partners.end(), i);
            for (; it != partners.end(); ++it) {
                std::uint32_t j = *it;
                ++local_elim;
                scratch.init(ctx.gf().get(), s.flat().ambient());
                scratch.insert_rows(bases[i]);
                scratch.insert_rows(bases[j]);
                if (static_cast<std::size_t>(scratch.count()) == n) {
                    found[chunk] = {i, j};
                    hit.found(chunk);
                    break;
                }
            }
            if (found[chunk].i != UINT64_MAX) break;
        }
        eliminated.fetch_add(local_elim);
    });
    res.pairs_eliminated = eliminated.load();
    std::uint64_t best = hit.best_chunk.load();
    if (best != UINT64_MAX) {
        res.spannable = true;
        res.witness = {point_rep(ctx, s.k(), found[best].i), point_rep(ctx, s.k(), found[best].j)};
    }
    return res;
}

namespace {

// Support rows of a codeword as scratch-ready echelon rows of width n.
SmallRows support_rows(const FieldCtx& ctx, const ExtVec& c) {
    const std::uint32_t m = ctx.m();
    const std::size_t n = c.size();
    RankScratch scratch;
    scratch.init(ctx.gf().get(), n);
    std::vector<std::uint8_t> digits(m);
    std::vector<std::uint8_t> row(n);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (scratch.use_bits) {
            std::uint64_t w = 0;
            for (std::size_t j = 0; j < n; ++j) w |= static_cast<std::uint64_t>((c[j] >> i) & 1u) << j;
            scratch.insert_word(w);
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                ctx.digits_of(c[j], digits.data());
                row[j] = digits[i];
            }
            scratch.insert_bytes(row.data());
        }
    }
    return scratch.snapshot();
}

} // namespace

IntersectingResult is_intersecting_definitional(const RankCode& c, const Caps& caps, unsigned threads) {
    const auto& ctx = *c.ctx();
    const auto k = static_cast<std::uint32_t>(c.k());
    const std::size_t n = c.n();
    IntersectingResult res;
    res.method = "definitional";
    res.classes = projective_count(ctx, k);
    require(res.classes <= caps.sweep, Errc::enumeration_cap_exceeded, "codeword class sweep exceeds cap");
    require(res.classes * (res.classes - 1) / 2 <= caps.pairs, Errc::pair_cap_exceeded,
            "codeword pair sweep exceeds cap");
    res.pairs_swept = res.classes * (res.classes - 1) / 2;

    std::vector<std::uint8_t> weights(res.classes);
    parallel_chunks(res.classes, threads, 4096, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
            auto cw = c.encode(point_rep(ctx, k, i));
            weights[i] = static_cast<std::uint8_t>(rank_weight(ctx, cw));
        }
    });
    std::uint8_t minw = 255;
    for (auto w : weights) minw = std::min(minw, w);
    // disjoint supports need w_i + w_j <= n
    if (static_cast<std::size_t>(minw) * 2 > n) {
        res.intersecting = true;
        return res;
    }
    // prefix lists: at_most[t] = indices with w <= t, ascending
    std::vector<std::vector<std::uint32_t>> at_most(n + 1);
    for (std::uint32_t i = 0; i < res.classes; ++i)
        for (std::size_t t = weights[i]; t <= n; ++t) at_most[t].push_back(i);
    const auto& candidates = at_most[n - minw];

    std::vector<SmallRows> bases(res.classes);
    parallel_chunks(candidates.size(), threads, 64, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t t = b; t < e; ++t)
            bases[candidates[t]] = support_rows(ctx, c.encode(point_rep(ctx, k, candidates[t])));
    });

    FirstHit hit;
    struct Found {
        std::uint64_t i = UINT64_MAX, j = UINT64_MAX;
    };
    std::vector<Found> found(1 + candidates.size() / 16);
    std::atomic<std::uint64_t> eliminated{0};
    parallel_chunks(candidates.size(), threads, 16, [&](std::uint64_t chunk, std::uint64_t b, std::uint64_t e) {
        RankScratch scratch;
        std::uint64_t local_elim = 0;
        for (std::uint64_t t = b; t < e && !hit.should_abort(chunk); ++t) {
            std::uint32_t i = candidates[t];
            if (static_cast<std::size_t>(weights[i]) + minw > n) continue;
            const auto& partners = at_most[n - weights[i]];
            auto it = std::upper_bound(partners.begin(), partners.end(), i);
            for (; it != partners.end(); ++it) {
                std::uint32_t j = *it;
                ++local_elim;
                scratch.init(ctx.gf().get(), n);
                scratch.insert_rows(bases[i]);
                scratch.insert_rows(bases[j]);
                if (scratch.count() == weights[i] + weights[j]) { // direct sum: disjoint supports
                    found[chunk] = {i, j};
                    hit.found(chunk);
                    break;
                }
            }
            if (found[chunk].i != UINT64_MAX) break;
        }
        eliminated.fetch_add(local_elim);
    });
    res.pairs_eliminated = eliminated.load();
    std::uint64_t best = hit.best_chunk.load();
    if (best != UINT64_MAX) {
        res.witness = {c.encode(point_rep(ctx, k, found[best].i)), c.encode(point_rep(ctx, k, found[best].j))};
        res.intersecting = false;
    } else {
        res.intersecting = true;
    }
    return res;
}

IntersectingResult is_intersecting_geometric(const RankCode& c, const Caps& caps, unsigned threads) {
    QSystem s = QSystem::from_code(c);
    SpannableResult sp = is_two_spannable(s, caps, threads);
    IntersectingResult res;
    res.method = "geometric";
    res.intersecting = !sp.spannable;
    res.classes = sp.hyperplanes;
    res.pairs_swept = sp.pairs_swept;
    res.pairs_eliminated = sp.pairs_eliminated;
    // for the geometric route the witness pair holds the dual vectors of the
    // spanning hyperplanes, not codewords
    res.witness = sp.witness;
    return res;
}

ComplementaryWeights has_complementary_weights(const QSystem& s, const ExtSubspace& line) {
    require(line.ext_dim() == 2, Errc::bad_dims, "complementary weights need a 2-dimensional subspace");
    const auto& ctx = *s.ctx();
    const std::uint64_t Q = ctx.qm();
    ComplementaryWeights out;
    out.line_weight = weight_in(s, line);
    // the Q+1 points of the line, tagged with their global index for ordering
    std::vector<std::pair<std::uint64_t, ExtVec>> pts;
    pts.reserve(Q + 1);
    const auto& b = line.basis();
    for (std::uint64_t mu = 0; mu < Q; ++mu) {
        ExtVec v(s.k());
        for (std::uint32_t j = 0; j < s.k(); ++j)
            v[j] = ctx.add(b[0][j], ctx.mul(static_cast<std::uint32_t>(mu), b[1][j]));
        normalize_point(ctx, v);
        pts.emplace_back(point_index(ctx, s.k(), v), std::move(v));
    }
    {
        ExtVec v = b[1];
        normalize_point(ctx, v);
        pts.emplace_back(point_index(ctx, s.k(), v), std::move(v));
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    std::vector<std::size_t> w(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) w[i] = point_weight(s, pts[i].second);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (w[i] + w[j] == out.line_weight) {
                out.complementary = true;
                out.points = {pts[i].second, pts[j].second};
                return out;
            }
    return out;
}

namespace {

// Complementarity test for one line of the dual system, given its basis and
// the precomputed point-weight table.
bool line_is_complementary(const QSystem& dual_sys, const std::vector<std::uint8_t>& pw,
                           const std::vector<ExtVec>& basis, RankScratch& scratch,
                           const SmallRows& urows) {
    const auto& ctx = *dual_sys.ctx();
    const std::uint64_t Q = ctx.qm();
    scratch.init(ctx.gf().get(), dual_sys.flat().ambient());
    scratch.insert_rows(urows);
    insert_point_rows(dual_sys, scratch, basis[0]);
    insert_point_rows(dual_sys, scratch, basis[1]);
    std::size_t line_w = 2 * ctx.m() + dual_sys.dim() - scratch.count();
    std::size_t max1 = 0, max2 = 0;
    auto feed = [&](std::uint64_t idx) {
        std::size_t w = pw[idx];
        if (w >= max1) {
            max2 = max1;
            max1 = w;
        } else if (w > max2) {
            max2 = w;
        }
    };
    ExtVec v(dual_sys.k());
    for (std::uint64_t mu = 0; mu < Q; ++mu) {
        for (std::uint32_t j = 0; j < dual_sys.k(); ++j)
            v[j] = ctx.add(basis[0][j], ctx.mul(static_cast<std::uint32_t>(mu), basis[1][j]));
        normalize_point(ctx, v);
        feed(point_index(ctx, dual_sys.k(), v));
    }
    v = basis[1];
    normalize_point(ctx, v);
    feed(point_index(ctx, dual_sys.k(), v));
    return max1 + max2 == line_w;
}

} // namespace

SpannableResult is_two_spannable_via_dual(const QSystem& s, const Caps& caps, unsigned threads) {
    require(s.k() >= 2, Errc::precondition_violated, "2-spannability needs k >= 2");
    const auto& ctx = *s.ctx();
    auto duality = DualityCtx::make(s.ctx(), s.k());
    QSystem dual_sys = QSystem::from_subspace(s.ctx(), s.k(), perp_trace(duality, s.flat()));

    SpannableResult res;
    res.hyperplanes = projective_count(ctx, s.k());
    res.pairs_swept = res.hyperplanes * (res.hyperplanes - 1) / 2;

    auto pw = point_weight_table(dual_sys, caps, threads);
    const SmallRows urows = system_rows(dual_sys);

    std::optional<std::vector<ExtVec>> found_basis;
    if (s.k() == 3) {
        // lines indexed by their dual points; parallel with a deterministic
        // lowest-index merge
        const std::uint64_t nlines = projective_count(ctx, 3);
        require(nlines <= caps.sweep, Errc::enumeration_cap_exceeded, "line sweep exceeds cap");
        FirstHit hit;
        std::vector<std::uint64_t> local(1 + nlines / 512, UINT64_MAX);
        parallel_chunks(nlines, threads, 512, [&](std::uint64_t chunk, std::uint64_t b, std::uint64_t e) {
            RankScratch scratch;
            for (std::uint64_t i = b; i < e && !hit.should_abort(chunk); ++i) {
                auto basis = ext_kernel(ctx, {point_rep(ctx, 3, i)}, 3);
                if (line_is_complementary(dual_sys, pw, basis, scratch, urows)) {
                    local[chunk] = i;
                    hit.found(chunk);
                    break;
                }
            }
        });
        std::uint64_t best = hit.best_chunk.load();
        if (best != UINT64_MAX) found_basis = ext_kernel(ctx, {point_rep(ctx, 3, local[best])}, 3);
    } else {
        RankScratch scratch;
        for_each_ext_subspace(ctx, s.k(), 2, caps.sweep, [&](const std::vector<ExtVec>& basis) {
            if (line_is_complementary(dual_sys, pw, basis, scratch, urows)) {
                found_basis = basis;
                return false;
            }
            return true;
        });
    }
    if (found_basis) {
        auto line = ExtSubspace::from_vectors(s.ctx(), s.k(), *found_basis);
        auto cw = has_complementary_weights(dual_sys, line);
        require(cw.complementary, Errc::validation_error, "complementary-line rescan disagreed (internal)");
        res.spannable = true;
        // the complementary points dualize to the spanning hyperplane pair
        res.witness = *cw.points;
    }
    return res;
}

} // namespace rmint
