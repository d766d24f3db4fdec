#include "rmint/field.hpp"

#include <algorithm>
#include <charconv>

namespace rmint {

FieldSpec field_preset(const std::string& name) {
    if (name == "paper-f64") {
        FieldSpec s;
        s.p = 2;
        s.e = 1;
        s.m = 6;
        s.modulus_qm = {1, 1, 0, 1, 1, 0, 1}; // x^6 + x^4 + x^3 + x + 1
        return s;
    }
    fail(Errc::validation_error, "unknown field preset '" + name + "'");
}

FieldCtxPtr FieldCtx::build(const FieldSpec& spec) {
    require(spec.m >= 1, Errc::bad_dims, "m must be >= 1");
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = spec.p;
    ctx->e_ = spec.e;
    ctx->m_ = spec.m;
    ctx->gf_ = GF::make(spec.p, spec.e, spec.modulus_q);
    ctx->q_ = ctx->gf_->q();

    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < spec.m; ++i) {
        order *= ctx->q_;
        require(order <= (1ull << 31), Errc::table_cap_exceeded,
                "q^m exceeds the supported encoding range (2^31)");
    }
    ctx->order_ = order;

    if (spec.modulus_qm.empty()) {
        ctx->modulus_qm_ = poly::least_irreducible(*ctx->gf_, spec.m);
    } else {
        require(spec.modulus_qm.size() == spec.m + 1 && spec.modulus_qm[spec.m] == 1,
                Errc::reducible_modulus, "modulus_qm must be monic of degree m");
        for (auto c : spec.modulus_qm)
            require(c < ctx->q_, Errc::reducible_modulus, "modulus_qm coefficient out of range");
        require(poly::is_irreducible(*ctx->gf_, spec.modulus_qm), Errc::reducible_modulus,
                "supplied modulus_qm is reducible over F_q");
        ctx->modulus_qm_ = spec.modulus_qm;
    }

    // prime factors of q^m - 1, for order checks
    std::uint64_t n = order - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ctx->qm1_prime_factors_.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ctx->qm1_prime_factors_.push_back(n);

    // least primitive element (full multiplicative order)
    ctx->primitive_ = 0;
    for (std::uint32_t c = 1; c < order; ++c) {
        bool ok = true;
        for (auto l : ctx->qm1_prime_factors_)
            if (ctx->slow_pow(c, (order - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            ctx->primitive_ = c;
            break;
        }
    }
    require(ctx->primitive_ != 0 || order == 2, Errc::validation_error, "no primitive element found");
    if (order == 2) ctx->primitive_ = 1;

    if (order <= spec.table_cap) {
        ctx->exp_.assign(order - 1, 0);
        ctx->log_.assign(order, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i + 1 < order; ++i) {
            ctx->exp_[i] = x;
            require(ctx->log_[x] == 0 && (i == 0 || x != 1), Errc::validation_error,
                    "primitive element does not generate the multiplicative group");
            ctx->log_[x] = static_cast<std::uint32_t>(i);
            x = ctx->slow_mul(x, ctx->primitive_);
        }
        require(x == 1, Errc::validation_error, "primitive order check failed");
    }
    return ctx;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1;
    while (a || b) {
        out += gf_->add(static_cast<std::uint8_t>(a % q_), static_cast<std::uint8_t>(b % q_)) * mult;
        a /= q_;
        b /= q_;
        mult *= q_;
    }
    return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mult = 1;
    while (a) {
        out += gf_->neg(static_cast<std::uint8_t>(a % q_)) * mult;
        a /= q_;
        mult *= q_;
    }
    return out;
}

std::uint32_t FieldCtx::slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    // schoolbook product of digit vectors, reduced mod modulus_qm
    std::vector<std::uint8_t> da(m_), db(m_);
    digits_of(a, da.data());
    digits_of(b, db.data());
    std::vector<std::uint8_t> prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = gf_->add(prod[i + j], gf_->mul(da[i], db[j]));
    }
    for (std::size_t t = prod.size(); t-- > m_;) {
        std::uint8_t lead = prod[t];
        if (!lead) continue;
        prod[t] = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
            prod[t - m_ + i] = gf_->sub(prod[t - m_ + i], gf_->mul(lead, modulus_qm_[i]));
    }
    return from_digits(prod.data());
}

std::uint32_t FieldCtx::slow_pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t r = 1, b = a;
    while (n) {
        if (n & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
        n >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }
    return slow_mul(a, b);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    require(a != 0, Errc::zero_inverse, "inverse of zero");
    if (!exp_.empty()) {
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : order_ - 1 - l];
    }
    return slow_pow(a, order_ - 2);
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::int64_t n) const {
    const std::int64_t g = static_cast<std::int64_t>(order_) - 1;
    if (a == 0) {
        require(n > 0, Errc::zero_inverse, "0^n undefined for n <= 0");
        return 0;
    }
    std::int64_t r = n % g;
    if (r < 0) r += g;
    if (!exp_.empty()) {
        std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % (order_ - 1);
        return exp_[l];
    }
    return slow_pow(a, static_cast<std::uint64_t>(r));
}

std::uint32_t FieldCtx::mul_by_subfield(std::uint32_t a, std::uint8_t c) const {
    if (c == 0 || a == 0) return 0;
    if (c == 1) return a;
    if (p_ == 2 && q_ == 2) return a; // c == 1 is the only nonzero scalar
    std::uint32_t out = 0, mult = 1, x = a;
    while (x) {
        out += gf_->mul(static_cast<std::uint8_t>(x % q_), c) * mult;
        x /= q_;
        mult *= q_;
    }
    return out;
}

std::uint64_t FieldCtx::log(std::uint32_t a) const {
    require(a != 0, Errc::zero_inverse, "log of zero");
    require(!exp_.empty(), Errc::table_cap_exceeded, "log requires table-backed field");
    return log_[a];
}

std::uint32_t FieldCtx::alpha_power(std::uint64_t k) const { return pow(primitive_, static_cast<std::int64_t>(k % (order_ - 1))); }

std::uint8_t FieldCtx::trace_to_q(std::uint32_t a) const {
    std::uint32_t acc = a, x = a;
    for (std::uint32_t i = 1; i < m_; ++i) {
        x = pow(x, q_);
        acc = add(acc, x);
    }
    require(in_subfield(acc), Errc::validation_error, "trace did not land in F_q");
    return static_cast<std::uint8_t>(acc);
}

void FieldCtx::digits_of(std::uint32_t a, std::uint8_t* out) const {
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint8_t>(a % q_);
        a /= q_;
    }
}

std::uint32_t FieldCtx::from_digits(const std::uint8_t* d) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = m_; i-- > 0;) v = v * q_ + d[i];
    return v;
}

FieldElement FieldCtx::element(std::uint32_t v, Level level) const {
    std::uint64_t bound = level == Level::prime ? p_ : level == Level::mid ? q_ : order_;
    require(v < bound, Errc::validation_error, "element encoding out of range for its level");
    return {v, level};
}

FieldElement FieldCtx::arith(FieldElement x, FieldElement y, ArithOp op) const {
    if (op == ArithOp::add || op == ArithOp::mul)
        require(x.level == y.level, Errc::level_mismatch, "operands live at different tower levels");
    auto out = [&](std::uint32_t v) { return FieldElement{v, x.level}; };
    switch (x.level) {
    case Level::prime: {
        std::uint64_t a = x.v, b = y.v;
        switch (op) {
        case ArithOp::add: return out(static_cast<std::uint32_t>((a + b) % p_));
        case ArithOp::mul: return out(static_cast<std::uint32_t>((a * b) % p_));
        case ArithOp::neg: return out(static_cast<std::uint32_t>((p_ - a) % p_));
        case ArithOp::inv: {
            require(a != 0, Errc::zero_inverse, "inverse of zero");
            std::uint64_t r = 1, base = a, n = p_ - 2;
            while (n) {
                if (n & 1) r = r * base % p_;
                base = base * base % p_;
                n >>= 1;
            }
            return out(static_cast<std::uint32_t>(r));
        }
        case ArithOp::pow: {
            std::uint64_t r = 1, base = a % p_, n = y.v % (p_ - 1 == 0 ? 1 : p_ - 1);
            if (a == 0) return out(0);
            while (n) {
                if (n & 1) r = r * base % p_;
                base = base * base % p_;
                n >>= 1;
            }
            return out(static_cast<std::uint32_t>(r));
        }
        }
        break;
    }
    case Level::mid: {
        auto a = static_cast<std::uint8_t>(x.v), b = static_cast<std::uint8_t>(y.v);
        switch (op) {
        case ArithOp::add: return out(gf_->add(a, b));
        case ArithOp::mul: return out(gf_->mul(a, b));
        case ArithOp::neg: return out(gf_->neg(a));
        case ArithOp::inv: return out(gf_->inv(a));
        case ArithOp::pow: return out(a == 0 ? 0 : gf_->pow(a, y.v));
        }
        break;
    }
    case Level::top:
        switch (op) {
        case ArithOp::add: return out(add(x.v, y.v));
        case ArithOp::mul: return out(mul(x.v, y.v));
        case ArithOp::neg: return out(neg(x.v));
        case ArithOp::inv: return out(inv(x.v));
        case ArithOp::pow: return out(pow(x.v, static_cast<std::int64_t>(y.v)));
        }
        break;
    }
    fail(Errc::validation_error, "unreachable arith dispatch");
}

FieldElement FieldCtx::trace(FieldElement x) const {
    require(x.level == Level::top, Errc::level_mismatch, "trace expects a top-field element");
    return {trace_to_q(x.v), Level::mid};
}

std::string FieldCtx::element_to_string(std::uint32_t a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    require(!exp_.empty(), Errc::table_cap_exceeded, "element literals require a table-backed field");
    return "a^" + std::to_string(log_[a]);
}

std::uint32_t FieldCtx::element_from_string(const std::string& lit) const {
    if (lit == "0") return 0;
    if (lit == "1") return 1;
    if (lit == "a") return primitive_;
    if (lit.size() > 2 && lit[0] == 'a' && lit[1] == '^') {
        std::uint64_t k = 0;
        auto [p, ec] = std::from_chars(lit.data() + 2, lit.data() + lit.size(), k);
        require(ec == std::errc() && p == lit.data() + lit.size(), Errc::validation_error,
                "bad element literal '" + lit + "'");
        return alpha_power(k);
    }
    fail(Errc::validation_error, "bad element literal '" + lit + "'");
}

BasisExpansion BasisExpansion::polynomial_basis(const FieldCtxPtr& ctx) {
    std::vector<std::uint32_t> gamma(ctx->m());
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < ctx->m(); ++i) {
        gamma[i] = x;
        x = ctx->mul(x, ctx->primitive());
    }
    return from_elements(ctx, std::move(gamma));
}

BasisExpansion BasisExpansion::from_elements(const FieldCtxPtr& ctx, std::vector<std::uint32_t> gamma) {
    require(gamma.size() == ctx->m(), Errc::bad_dims, "basis must have m elements");
    const std::uint32_t m = ctx->m();
    BasisExpansion b;
    b.gamma_ = std::move(gamma);
    b.to_digits_ = FqMatrix(ctx->gf(), m, m);
    std::vector<std::uint8_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        ctx->digits_of(b.gamma_[i], d.data());
        for (std::uint32_t r = 0; r < m; ++r) b.to_digits_.set(r, i, d[r]);
    }
    require(b.to_digits_.rank() == m, Errc::validation_error, "basis elements are F_q-dependent");
    // invert: rref of [M | I]
    FqMatrix aug(ctx->gf(), m, 2 * m);
    for (std::uint32_t r = 0; r < m; ++r) {
        for (std::uint32_t c = 0; c < m; ++c) aug.set(r, c, b.to_digits_.get(r, c));
        aug.set(r, m + r, 1);
    }
    aug.rref();
    b.from_digits_ = FqMatrix(ctx->gf(), m, m);
    for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c = 0; c < m; ++c) b.from_digits_.set(r, c, aug.get(r, m + c));
    return b;
}

FqMatrix gamma_expand(const FieldCtx& ctx, std::span<const std::uint32_t> v, const BasisExpansion& basis) {
    const std::uint32_t m = ctx.m();
    FqMatrix out(ctx.gf(), m, v.size());
    std::vector<std::uint8_t> d(m), coords(m);
    const auto& inv = basis.from_digits();
    for (std::size_t j = 0; j < v.size(); ++j) {
        ctx.digits_of(v[j], d.data());
        for (std::uint32_t r = 0; r < m; ++r) {
            std::uint8_t acc = 0;
            for (std::uint32_t c = 0; c < m; ++c) acc = ctx.gf()->add(acc, ctx.gf()->mul(inv.get(r, c), d[c]));
            coords[r] = acc;
        }
        for (std::uint32_t r = 0; r < m; ++r) out.set(r, j, coords[r]);
    }
    return out;
}

std::vector<std::uint32_t> gamma_contract(const FieldCtx& ctx, const FqMatrix& m, const BasisExpansion& basis) {
    require(m.rows() == ctx.m(), Errc::bad_dims, "expansion matrix must have m rows");
    std::vector<std::uint32_t> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint32_t acc = 0;
        for (std::uint32_t i = 0; i < ctx.m(); ++i)
            acc = ctx.add(acc, ctx.mul_by_subfield(basis.gamma()[i], m.get(i, j)));
        out[j] = acc;
    }
    return out;
}

} // namespace rmint
