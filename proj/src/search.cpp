#include "rmint/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

#include "rmint/parallel.hpp"
#include "rmint/rng.hpp"

namespace rmint {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Projective representatives over the mid field F_q (for dual functionals on
// U's coordinate space): leading-zero blocks, trailing base-q odometer.
std::uint64_t mid_projective_count(std::uint64_t q, std::uint32_t n) {
    std::uint64_t total = 0, power = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::vector<std::uint8_t> mid_point_rep(std::uint64_t q, std::uint32_t n, std::uint64_t index) {
    std::uint64_t block = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) block *= q;
    for (std::uint32_t l = 0; l < n; ++l) {
        if (index < block) {
            std::vector<std::uint8_t> v(n, 0);
            v[l] = 1;
            for (std::uint32_t j = n; j-- > l + 1;) {
                v[j] = static_cast<std::uint8_t>(index % q);
                index /= q;
            }
            return v;
        }
        index -= block;
        block /= q;
    }
    fail(Errc::bad_dims, "mid projective index out of range");
}

std::size_t scattered_score(const QSystem& s, const Caps& caps) {
    auto buckets = point_bucket_counts(s, caps);
    const std::uint32_t q = s.ctx()->q();
    std::size_t bad = 0;
    for (auto b : buckets)
        if (b > q - 1) ++bad;
    return bad;
}

// Solve c * R = w for the coefficient vector c (R has full row rank and w is
// in its row space).
std::vector<std::uint8_t> solve_coordinates(const FqMatrix& r, const std::vector<std::uint8_t>& w) {
    const auto& gf = *r.gf();
    const std::size_t d = r.rows(), n = r.cols();
    // augmented transpose system: A c = w with A = R^T
    FqMatrix aug(r.gf(), n, d + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug.set(i, j, r.get(j, i));
        aug.set(i, d, w[i]);
    }
    std::vector<std::size_t> pivots;
    aug.rref(&pivots);
    std::vector<std::uint8_t> c(d, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        require(pivots[t] < d, Errc::validation_error, "coordinate solve inconsistent (internal)");
        c[pivots[t]] = aug.get(t, d);
    }
    (void)gf;
    return c;
}

} // namespace

std::uint64_t subspace_digest(const FqSubspace& s) {
    std::string bytes = "N=" + std::to_string(s.ambient()) + ";d=" + std::to_string(s.dim()) + ";";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        for (auto v : s.basis().row(r)) bytes += static_cast<char>('0' + v);
        bytes += ';';
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[digest & 0xf];
        digest >>= 4;
    }
    return out;
}

SearchResult search_scattered(const FieldCtxPtr& ctx, std::uint32_t k, std::size_t dim,
                              std::uint64_t budget, std::uint64_t seed, SearchStrategy strategy,
                              const Caps& caps, unsigned threads) {
    require(budget >= 1, Errc::precondition_violated, "budget must be >= 1");
    const std::size_t mk = static_cast<std::size_t>(ctx->m()) * k;
    const auto bound = static_cast<std::size_t>(scattered_bound(ctx->m(), k));
    require(dim <= bound, Errc::bound_violated,
            "scattered dimension " + std::to_string(dim) + " exceeds the mk/2 bound " +
                std::to_string(bound));
    const auto t0 = Clock::now();
    SearchResult res;

    auto certify_and_fill = [&](const FqSubspace& u, std::uint64_t trial) {
        QSystem s = QSystem::from_subspace(ctx, k, u);
        // fresh single-threaded sweep certification, independent of the
        // bucket scoring that produced the hit
        auto cert = is_evasive(s, {1, 1}, caps, 1);
        require(cert.pass, Errc::validation_error, "scattered hit failed re-certification");
        require(u.dim() <= bound, Errc::validation_error, "scattered bound runtime assertion failed");
        res.found = true;
        res.found_trial = trial;
        res.subspace = u;
    };

    if (strategy == SearchStrategy::uniform) {
        FirstHit hit;
        const std::uint64_t chunk = 64;
        std::vector<std::pair<std::uint64_t, FqSubspace>> hits(1 + budget / chunk);
        parallel_chunks(budget, threads, chunk, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e && !hit.should_abort(c); ++i) {
                Rng rng = trial_stream(seed, i);
                FqSubspace u = random_subspace(ctx->gf(), mk, dim, rng.next());
                QSystem s = QSystem::from_subspace(ctx, k, u);
                if (scattered_score(s, caps) == 0) {
                    hits[c] = {i, std::move(u)};
                    hit.found(c);
                    break;
                }
            }
        });
        std::uint64_t best = hit.best_chunk.load();
        if (best != UINT64_MAX) {
            certify_and_fill(hits[best].second, hits[best].first);
            res.trials_used = hits[best].first + 1;
        } else {
            res.trials_used = budget;
        }
        res.wall_ms = ms_since(t0);
        return res;
    }

    // hill climb: restarts with repair moves, sideways moves capped
    const int sideways_cap = 50;
    std::uint64_t evals = 0;
    for (std::uint64_t restart = 0; evals < budget && !res.found; ++restart) {
        Rng rng = trial_stream(seed, restart);
        FqSubspace u = random_subspace(ctx->gf(), mk, dim, rng.next());
        QSystem s = QSystem::from_subspace(ctx, k, u);
        std::size_t score = scattered_score(s, caps);
        ++evals;
        int sideways = 0;
        while (score > 0 && evals < budget && sideways <= sideways_cap) {
            // pick a violating point and evict a basis vector inside it
            auto buckets = point_bucket_counts(s, caps);
            std::vector<std::uint64_t> violators;
            for (std::uint64_t i = 0; i < buckets.size(); ++i)
                if (buckets[i] > ctx->q() - 1) violators.push_back(i);
            std::uint64_t vp = violators[rng.bounded(violators.size())];
            ExtVec rep = point_rep(*ctx, k, vp);
            FqSubspace pflat = ext_flat(*ctx, k, std::span<const ExtVec>(&rep, 1));
            FqSubspace inter = intersect(u, pflat);
            auto w = inter.basis().row(0);
            auto coeff = solve_coordinates(u.basis(), w);
            std::vector<std::size_t> removable;
            for (std::size_t i = 0; i < coeff.size(); ++i)
                if (coeff[i]) removable.push_back(i);
            std::size_t evict = removable[rng.bounded(removable.size())];
            // swap in a random vector outside the bad point's flat
            FqMatrix cand(ctx->gf(), dim, mk);
            for (std::size_t r = 0; r < dim; ++r) cand.set_row(r, u.basis().row(r));
            while (true) {
                std::vector<std::uint8_t> fresh(mk);
                for (auto& x : fresh) x = static_cast<std::uint8_t>(rng.bounded(ctx->q()));
                if (contains(pflat, fresh)) continue;
                cand.set_row(evict, fresh);
                if (cand.rank() == dim) break;
                cand.set_row(evict, u.basis().row(evict));
            }
            FqSubspace next = FqSubspace::from_matrix(std::move(cand));
            QSystem ns = QSystem::from_subspace(ctx, k, next);
            std::size_t nscore = scattered_score(ns, caps);
            ++evals;
            if (nscore <= score) {
                sideways = nscore == score ? sideways + 1 : 0;
                u = std::move(next);
                s = std::move(ns);
                score = nscore;
            } else {
                ++sideways;
            }
        }
        if (score == 0) certify_and_fill(u, restart);
    }
    res.trials_used = evals;
    res.wall_ms = ms_since(t0);
    return res;
}

namespace {

// One random generator-matrix trial; returns rows or nothing if the sample
// was rank deficient / degenerate.
std::optional<std::vector<ExtVec>> sample_generator(const FieldCtx& ctx, std::uint32_t k, std::uint32_t n,
                                                    Rng& rng) {
    std::vector<ExtVec> rows(k, ExtVec(n));
    for (auto& row : rows)
        for (auto& x : row) x = static_cast<std::uint32_t>(rng.bounded(ctx.qm()));
    auto copy = rows;
    if (ext_rref(ctx, copy) != k) return std::nullopt;
    return rows;
}

} // namespace

SearchResult search_intersecting(const FieldCtxPtr& ctx, std::uint32_t k, std::uint32_t n,
                                 std::uint64_t budget, std::uint64_t seed, SearchStrategy strategy,
                                 bool override_not_exists, const Caps& caps, unsigned threads) {
    require(budget >= 1, Errc::precondition_violated, "budget must be >= 1");
    {
        ParamQuery p{ctx->q(), ctx->m(), n, k, std::nullopt};
        auto verdict = classify(p);
        require(verdict.status != Existence::not_exists || override_not_exists, Errc::refused_not_exists,
                "parameters are provably non-existent (" + verdict.reasons.front() +
                    "); pass the override flag for falsification runs");
    }
    const auto t0 = Clock::now();
    SearchResult res;

    auto certify_trial = [&](const std::vector<ExtVec>& rows, std::uint64_t trial) -> bool {
        RankCode c(ctx, rows);
        if (!is_nondegenerate(c)) return false;
        auto geo = is_intersecting_geometric(c, caps, 1);
        if (trial % 100 == 0) {
            auto def = is_intersecting_definitional(c, caps, 1);
            require(def.intersecting == geo.intersecting, Errc::validation_error,
                    "definitional/geometric disagreement at trial " + std::to_string(trial));
        }
        return geo.intersecting;
    };

    if (strategy == SearchStrategy::uniform) {
        FirstHit hit;
        const std::uint64_t chunk = 16;
        std::vector<std::pair<std::uint64_t, std::vector<ExtVec>>> hits(1 + budget / chunk);
        parallel_chunks(budget, threads, chunk, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e && !hit.should_abort(c); ++i) {
                Rng rng = trial_stream(seed, i);
                auto rows = sample_generator(*ctx, k, n, rng);
                if (!rows) continue;
                if (certify_trial(*rows, i)) {
                    hits[c] = {i, std::move(*rows)};
                    hit.found(c);
                    break;
                }
            }
        });
        std::uint64_t best = hit.best_chunk.load();
        if (best != UINT64_MAX) {
            res.found = true;
            res.found_trial = hits[best].first;
            res.generator = hits[best].second;
            res.trials_used = hits[best].first + 1;
            // fresh single-threaded re-certification by both routes
            RankCode c(ctx, *res.generator);
            require(is_intersecting_geometric(c, caps, 1).intersecting &&
                        is_intersecting_definitional(c, caps, 1).intersecting,
                    Errc::validation_error, "intersecting hit failed re-certification");
        } else {
            res.trials_used = budget;
        }
        res.wall_ms = ms_since(t0);
        return res;
    }

    // hill climb on the complementary-line count of the dual system
    auto duality = DualityCtx::make(ctx, k);
    auto score_of = [&](const std::vector<ExtVec>& rows) -> std::size_t {
        RankCode c(ctx, rows);
        if (!is_nondegenerate(c)) return SIZE_MAX;
        QSystem s = QSystem::from_code(c);
        QSystem dual_sys = QSystem::from_subspace(ctx, k, perp_trace(duality, s.flat()));
        std::size_t lines = 0;
        for_each_ext_subspace(*ctx, k, 2, caps.sweep, [&](const std::vector<ExtVec>& basis) {
            auto line = ExtSubspace::from_vectors(ctx, k, basis);
            if (has_complementary_weights(dual_sys, line).complementary) ++lines;
            return true;
        });
        return lines;
    };
    const int sideways_cap = 50;
    std::uint64_t evals = 0;
    for (std::uint64_t restart = 0; evals < budget && !res.found; ++restart) {
        Rng rng = trial_stream(seed, restart);
        auto rows = sample_generator(*ctx, k, n, rng);
        if (!rows) {
            ++evals;
            continue;
        }
        std::size_t score = score_of(*rows);
        ++evals;
        int sideways = 0;
        while (score != 0 && evals < budget && sideways <= sideways_cap) {
            auto next = *rows;
            std::size_t col = rng.bounded(n);
            for (std::uint32_t i = 0; i < k; ++i)
                next[i][col] = static_cast<std::uint32_t>(rng.bounded(ctx->qm()));
            std::size_t nscore = score_of(next);
            ++evals;
            if (nscore <= score) {
                sideways = nscore == score ? sideways + 1 : 0;
                *rows = std::move(next);
                score = nscore;
            } else {
                ++sideways;
            }
        }
        if (score == 0 && certify_trial(*rows, restart)) {
            res.found = true;
            res.found_trial = restart;
            res.generator = *rows;
        }
    }
    res.trials_used = evals;
    res.wall_ms = ms_since(t0);
    return res;
}

SearchResult puncture_scan(const RankCode& c, const Caps& caps, unsigned threads) {
    const auto& ctx = *c.ctx();
    const auto t0 = Clock::now();
    QSystem s = QSystem::from_code(c);
    const std::size_t n = s.dim();
    const std::uint64_t total = mid_projective_count(ctx.q(), static_cast<std::uint32_t>(n));
    require(total <= caps.sweep, Errc::enumeration_cap_exceeded, "puncture scan exceeds cap");

    SearchResult res;
    res.enumerated = total;
    res.candidates.resize(total);
    std::atomic<std::uint64_t> hits{0};
    parallel_chunks(total, threads, 8, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            PunctureCandidate cand;
            cand.index = idx;
            cand.dual_vector = mid_point_rep(ctx.q(), static_cast<std::uint32_t>(n), idx);
            // U' = kernel of the functional, expressed on U's basis
            FqMatrix phi(ctx.gf(), 1, n);
            phi.set_row(0, cand.dual_vector);
            FqMatrix coeffs = kernel(phi); // (n-1) x n
            FqMatrix rows = coeffs.multiplied(s.flat().basis());
            std::vector<ExtVec> gens;
            for (std::size_t r = 0; r < rows.rows(); ++r)
                gens.push_back(unflatten(ctx, rows.row(r), s.k()));
            auto copy = gens;
            cand.spanning = ext_rref(ctx, copy) == s.k();
            if (cand.spanning) {
                // punctured generator: columns are the basis vectors of U'
                std::vector<ExtVec> grows(s.k(), ExtVec(gens.size()));
                for (std::size_t j = 0; j < gens.size(); ++j)
                    for (std::uint32_t i = 0; i < s.k(); ++i) grows[i][j] = gens[j][i];
                RankCode pc(c.ctx(), std::move(grows));
                QSystem ps = QSystem::from_code(pc);
                cand.distance = min_distance_geometric(ps, caps, 1);
                cand.intersecting = is_intersecting_geometric(pc, caps, 1).intersecting;
                if (cand.intersecting) hits.fetch_add(1);
            }
            res.candidates[idx] = std::move(cand);
        }
    });
    res.intersecting_hits = hits.load();
    res.found = res.intersecting_hits > 0;
    res.trials_used = total;
    res.wall_ms = ms_since(t0);
    return res;
}

} // namespace rmint
