#include "rmint/gf.hpp"

#include <algorithm>

namespace rmint {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Digit helpers on the base-p integer encoding of F_{p^e} elements.
std::uint32_t digits_add(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    if (p == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1;
    while (a || b) {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

std::vector<std::uint8_t> to_coeffs(std::uint32_t p, std::uint32_t e, std::uint32_t v) {
    std::vector<std::uint8_t> c(e, 0);
    for (std::uint32_t i = 0; i < e && v; ++i) {
        c[i] = static_cast<std::uint8_t>(v % p);
        v /= p;
    }
    return c;
}

std::uint32_t from_coeffs(std::uint32_t p, const std::vector<std::uint8_t>& c) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

// Schoolbook multiply of F_{p^e} encodings mod the modulus polynomial over F_p.
std::uint32_t slow_mul(std::uint32_t p, std::uint32_t e, const std::vector<std::uint8_t>& modulus,
                       std::uint32_t a, std::uint32_t b) {
    auto ca = to_coeffs(p, e, a), cb = to_coeffs(p, e, b);
    std::vector<std::uint32_t> prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    // reduce x^t -> -(c_0 + ... + c_{e-1} x^{e-1}) x^{t-e}
    for (std::size_t t = prod.size(); t-- > e;) {
        std::uint32_t lead = prod[t];
        if (!lead) continue;
        prod[t] = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            std::uint32_t s = (lead * (p - modulus[i])) % p;
            prod[t - e + i] = (prod[t - e + i] + s) % p;
        }
    }
    std::vector<std::uint8_t> cc(e);
    for (std::uint32_t i = 0; i < e; ++i) cc[i] = static_cast<std::uint8_t>(prod[i]);
    return from_coeffs(p, cc);
}

} // namespace

std::shared_ptr<const GF> GF::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint8_t> modulus) {
    require(is_prime_u64(p), Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(e >= 1, Errc::bad_dims, "extension degree must be >= 1");
    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < e; ++i) q64 *= p;
    require(q64 <= 256, Errc::precondition_violated, "subfield size q > 256 unsupported");
    const auto q = static_cast<std::uint32_t>(q64);

    auto gf = std::shared_ptr<GF>(new GF());
    gf->p_ = p;
    gf->e_ = e;
    gf->q_ = q;

    if (e == 1) {
        gf->modulus_ = modulus.empty() ? std::vector<std::uint8_t>{0, 1} : std::move(modulus);
        require(gf->modulus_.size() == 2 && gf->modulus_[1] == 1, Errc::reducible_modulus,
                "degree-1 modulus must be monic of degree 1");
    } else {
        // Need GF(p) to validate / search the degree-e modulus.
        auto base = GF::make(p, 1);
        if (modulus.empty()) {
            gf->modulus_ = poly::least_irreducible(*base, e);
        } else {
            require(modulus.size() == e + 1 && modulus[e] == 1, Errc::reducible_modulus,
                    "modulus must be monic of degree e");
            for (auto c : modulus)
                require(c < p, Errc::reducible_modulus, "modulus coefficient out of range");
            require(poly::is_irreducible(*base, modulus), Errc::reducible_modulus,
                    "supplied subfield modulus is reducible");
            gf->modulus_ = std::move(modulus);
        }
    }

    gf->add_.resize((std::size_t)q * q);
    gf->mul_.resize((std::size_t)q * q);
    gf->neg_.resize(q);
    gf->inv_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            gf->add_[(std::size_t)a * q + b] = static_cast<std::uint8_t>(digits_add(p, a, b));
            gf->mul_[(std::size_t)a * q + b] =
                static_cast<std::uint8_t>(slow_mul(p, e, gf->modulus_, a, b));
        }
    for (std::uint32_t a = 0; a < q; ++a) {
        // neg: the additive inverse, found from the add table row.
        for (std::uint32_t b = 0; b < q; ++b)
            if (gf->add_[(std::size_t)a * q + b] == 0) {
                gf->neg_[a] = static_cast<std::uint8_t>(b);
                break;
            }
    }
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (gf->mul_[(std::size_t)a * q + b] == 1) {
                gf->inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
    // least multiplicative generator
    for (std::uint32_t g = 1; g < q; ++g) {
        std::uint32_t x = g, order = 1;
        while (x != 1) {
            x = gf->mul_[(std::size_t)x * q + g];
            ++order;
        }
        if (order == q - 1) {
            gf->generator_ = static_cast<std::uint8_t>(g);
            break;
        }
    }
    return gf;
}

std::uint8_t GF::pow(std::uint8_t a, std::uint64_t n) const {
    std::uint8_t r = 1, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

namespace poly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly add(const GF& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint8_t x = i < a.size() ? a[i] : 0;
        std::uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = f.add(x, y);
    }
    return trim(std::move(r));
}

Poly mul(const GF& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return trim(std::move(r));
}

Poly mod(const GF& f, Poly a, const Poly& m) {
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    const std::uint8_t lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        std::uint8_t c = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly mulmod(const GF& f, const Poly& a, const Poly& b, const Poly& m) {
    return mod(f, mul(f, a, b), m);
}

Poly powmod(const GF& f, Poly base, std::uint64_t n, const Poly& m) {
    Poly r{1};
    base = mod(f, std::move(base), m);
    while (n) {
        if (n & 1) r = mulmod(f, r, base, m);
        base = mulmod(f, base, base, m);
        n >>= 1;
    }
    return r;
}

Poly gcd(const GF& f, Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    if (!a.empty()) {
        std::uint8_t li = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, li);
    }
    return a;
}

bool is_irreducible(const GF& f, const Poly& m) {
    // Rabin: x^{q^d} == x (mod m) and gcd(x^{q^{d/l}} - x, m) = 1 for primes l | d.
    const std::size_t d = m.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    const std::uint64_t q = f.q();
    auto frob_power = [&](std::uint32_t steps) {
        // x^{q^steps} mod m via repeated q-power
        Poly x{0, 1};
        Poly r = x;
        for (std::uint32_t i = 0; i < steps; ++i) r = powmod(f, r, q, m);
        return r;
    };
    Poly x{0, 1};
    Poly top = frob_power(static_cast<std::uint32_t>(d));
    Poly diff = add(f, top, mul(f, {f.neg(1)}, x));
    if (!mod(f, diff, m).empty()) return false;
    for (std::uint32_t l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime_u64(l)) continue;
        Poly mid = frob_power(static_cast<std::uint32_t>(d / l));
        Poly g = gcd(f, add(f, mid, mul(f, {f.neg(1)}, x)), m);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

Poly least_irreducible(const GF& f, std::uint32_t d) {
    const std::uint64_t q = f.q();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < d; ++i) total *= q;
    for (std::uint64_t t = 0; t < total; ++t) {
        Poly m(d + 1, 0);
        std::uint64_t v = t;
        for (std::uint32_t i = 0; i < d; ++i) {
            m[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        m[d] = 1;
        if (is_irreducible(f, m)) return m;
    }
    fail(Errc::reducible_modulus, "no irreducible polynomial found (unreachable)");
}

} // namespace poly

} // namespace rmint
