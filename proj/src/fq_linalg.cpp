#include "rmint/fq_linalg.hpp"

#include <algorithm>

namespace rmint {

FqMatrix::FqMatrix(GFPtr gf, std::size_t rows, std::size_t cols) : gf_(std::move(gf)), rows_(rows), cols_(cols) {
    if (packed()) {
        wpr_ = (cols_ + 63) / 64;
        words_.assign(rows_ * wpr_, 0);
    } else {
        bytes_.assign(rows_ * cols_, 0);
    }
}

FqMatrix FqMatrix::identity(GFPtr gf, std::size_t n) {
    FqMatrix m(std::move(gf), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(GFPtr gf, std::size_t cols,
                             const std::vector<std::vector<std::uint8_t>>& rows) {
    FqMatrix m(std::move(gf), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, Errc::bad_dims, "row length mismatch");
        m.set_row(r, rows[r]);
    }
    return m;
}

std::uint8_t FqMatrix::get(std::size_t r, std::size_t c) const {
    if (packed()) return (words_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    return bytes_[r * cols_ + c];
}

void FqMatrix::set(std::size_t r, std::size_t c, std::uint8_t v) {
    if (packed()) {
        std::uint64_t mask = 1ull << (c % 64);
        auto& w = words_[r * wpr_ + c / 64];
        w = v ? (w | mask) : (w & ~mask);
    } else {
        bytes_[r * cols_ + c] = v;
    }
}

std::vector<std::uint8_t> FqMatrix::row(std::size_t r) const {
    std::vector<std::uint8_t> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
    return out;
}

void FqMatrix::set_row(std::size_t r, std::span<const std::uint8_t> v) {
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void FqMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (packed()) {
        for (std::size_t w = 0; w < wpr_; ++w) std::swap(words_[a * wpr_ + w], words_[b * wpr_ + w]);
    } else {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(bytes_[a * cols_ + c], bytes_[b * cols_ + c]);
    }
}

void FqMatrix::scale_row(std::size_t r, std::uint8_t c) {
    if (packed()) return; // only scalar is 1
    for (std::size_t j = 0; j < cols_; ++j) bytes_[r * cols_ + j] = gf_->mul(bytes_[r * cols_ + j], c);
}

void FqMatrix::axpy_row(std::size_t dst, std::size_t src, std::uint8_t c) {
    if (c == 0) return;
    if (packed()) {
        for (std::size_t w = 0; w < wpr_; ++w) words_[dst * wpr_ + w] ^= words_[src * wpr_ + w];
    } else {
        for (std::size_t j = 0; j < cols_; ++j)
            bytes_[dst * cols_ + j] = gf_->add(bytes_[dst * cols_ + j], gf_->mul(c, bytes_[src * cols_ + j]));
    }
}

bool FqMatrix::row_is_zero(std::size_t r) const {
    if (packed()) {
        for (std::size_t w = 0; w < wpr_; ++w)
            if (words_[r * wpr_ + w]) return false;
        return true;
    }
    for (std::size_t c = 0; c < cols_; ++c)
        if (bytes_[r * cols_ + c]) return false;
    return true;
}

std::size_t FqMatrix::rref(std::vector<std::size_t>* pivots) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t r = lead; r < rows_; ++r)
            if (get(r, col)) {
                piv = r;
                break;
            }
        if (piv == rows_) continue;
        swap_rows(lead, piv);
        if (!packed()) {
            std::uint8_t v = get(lead, col);
            if (v != 1) scale_row(lead, gf_->inv(v));
        }
        if (packed()) {
            const std::size_t w0 = col / 64;
            const std::uint64_t mask = 1ull << (col % 64);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == lead) continue;
                if (words_[r * wpr_ + w0] & mask)
                    for (std::size_t w = w0; w < wpr_; ++w) words_[r * wpr_ + w] ^= words_[lead * wpr_ + w];
            }
        } else {
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == lead) continue;
                std::uint8_t v = get(r, col);
                if (v) axpy_row(r, lead, gf_->neg(v));
            }
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return lead;
}

std::size_t FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref();
}

FqMatrix FqMatrix::multiplied(const FqMatrix& rhs) const {
    ensure_same_field(rhs);
    require(cols_ == rhs.rows_, Errc::bad_dims, "matrix product shape mismatch");
    FqMatrix out(gf_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            std::uint8_t a = get(i, t);
            if (!a) continue;
            if (packed()) {
                for (std::size_t w = 0; w < out.wpr_; ++w)
                    out.words_[i * out.wpr_ + w] ^= rhs.words_[t * rhs.wpr_ + w];
            } else {
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    std::uint8_t v = gf_->mul(a, rhs.get(t, j));
                    if (v) out.set(i, j, gf_->add(out.get(i, j), v));
                }
            }
        }
    return out;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix out(gf_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, get(r, c));
    return out;
}

bool FqMatrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::uint64_t FqMatrix::row_word(std::size_t r) const {
    require(packed() && cols_ <= 64, Errc::precondition_violated, "row_word requires q=2 and cols<=64");
    return words_[r * wpr_];
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (packed() != o.packed()) return false;
    return packed() ? words_ == o.words_ : bytes_ == o.bytes_;
}

void FqMatrix::ensure_same_field(const FqMatrix& o) const {
    require(gf_ && o.gf_ && *gf_ == *o.gf_, Errc::ambient_mismatch, "field mismatch");
}

FqMatrix kernel(const FqMatrix& m) {
    FqMatrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t rank = work.rref(&pivots);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    FqMatrix out(m.gf(), n - rank, n);
    const auto& gf = *m.gf();
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out.set(k, f, 1);
        for (std::size_t r = 0; r < rank; ++r) out.set(k, pivots[r], gf.neg(work.get(r, f)));
        ++k;
    }
    out.rref();
    return out;
}

FqSubspace FqSubspace::zero(GFPtr gf, std::size_t ambient) {
    FqSubspace s;
    s.gf_ = std::move(gf);
    s.ambient_ = ambient;
    s.basis_ = FqMatrix(s.gf_, 0, ambient);
    return s;
}

FqSubspace FqSubspace::full(GFPtr gf, std::size_t ambient) {
    FqSubspace s;
    s.gf_ = gf;
    s.ambient_ = ambient;
    s.basis_ = FqMatrix::identity(std::move(gf), ambient);
    return s;
}

FqSubspace FqSubspace::from_matrix(FqMatrix generators) {
    FqSubspace s;
    s.gf_ = generators.gf();
    s.ambient_ = generators.cols();
    std::size_t rank = generators.rref();
    FqMatrix basis(s.gf_, rank, s.ambient_);
    for (std::size_t r = 0; r < rank; ++r) basis.set_row(r, generators.row(r));
    s.basis_ = std::move(basis);
    return s;
}

FqSubspace FqSubspace::from_rows(GFPtr gf, std::size_t ambient,
                                 const std::vector<std::vector<std::uint8_t>>& rows) {
    return from_matrix(FqMatrix::from_rows(std::move(gf), ambient, rows));
}

namespace {
void check_compatible(const FqSubspace& a, const FqSubspace& b) {
    require(a.gf() && b.gf() && *a.gf() == *b.gf() && a.ambient() == b.ambient(), Errc::ambient_mismatch,
            "subspace ambient/field mismatch");
}
} // namespace

FqSubspace intersect(const FqSubspace& a, const FqSubspace& b) {
    check_compatible(a, b);
    const std::size_t n = a.ambient();
    // Zassenhaus: rows [A | A], [B | 0]; rows with zero left half carry an
    // intersection basis in their right half.
    FqMatrix big(a.gf(), a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            auto v = a.basis().get(r, c);
            big.set(r, c, v);
            big.set(r, n + c, v);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) big.set(a.dim() + r, c, b.basis().get(r, c));
    big.rref();
    std::vector<std::vector<std::uint8_t>> rows;
    for (std::size_t r = 0; r < big.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (big.get(r, c)) left_zero = false;
        if (!left_zero) continue;
        auto full = big.row(r);
        std::vector<std::uint8_t> right(full.begin() + static_cast<std::ptrdiff_t>(n), full.end());
        bool zero = std::all_of(right.begin(), right.end(), [](std::uint8_t x) { return x == 0; });
        if (!zero) rows.push_back(std::move(right));
    }
    return FqSubspace::from_rows(a.gf(), n, rows);
}

FqSubspace sum(const FqSubspace& a, const FqSubspace& b) {
    check_compatible(a, b);
    FqMatrix stack(a.gf(), a.dim() + b.dim(), a.ambient());
    for (std::size_t r = 0; r < a.dim(); ++r) stack.set_row(r, a.basis().row(r));
    for (std::size_t r = 0; r < b.dim(); ++r) stack.set_row(a.dim() + r, b.basis().row(r));
    return FqSubspace::from_matrix(std::move(stack));
}

bool contains(const FqSubspace& a, std::span<const std::uint8_t> v) {
    require(v.size() == a.ambient(), Errc::ambient_mismatch, "vector length mismatch");
    const auto& gf = *a.gf();
    std::vector<std::uint8_t> work(v.begin(), v.end());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        // pivot column of row r is its first nonzero entry
        std::size_t pc = 0;
        while (pc < a.ambient() && !a.basis().get(r, pc)) ++pc;
        if (pc == a.ambient()) continue;
        std::uint8_t c = work[pc];
        if (c) {
            for (std::size_t j = pc; j < a.ambient(); ++j)
                work[j] = gf.sub(work[j], gf.mul(c, a.basis().get(r, j)));
        }
    }
    return std::all_of(work.begin(), work.end(), [](std::uint8_t x) { return x == 0; });
}

bool contains_subspace(const FqSubspace& a, const FqSubspace& b) {
    for (std::size_t r = 0; r < b.dim(); ++r)
        if (!contains(a, b.basis().row(r))) return false;
    return true;
}

FqSubspace random_subspace(GFPtr gf, std::size_t ambient, std::size_t dim, std::uint64_t seed) {
    require(dim <= ambient, Errc::bad_dims, "subspace dimension exceeds ambient");
    Rng rng(seed);
    const std::uint64_t q = gf->q();
    while (true) {
        FqMatrix m(gf, dim, ambient);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < ambient; ++c)
                m.set(r, c, static_cast<std::uint8_t>(rng.bounded(q)));
        if (m.rank() == dim) return FqSubspace::from_matrix(std::move(m));
    }
}

} // namespace rmint
