#include "adskit/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "adskit/groups.hpp"

namespace adskit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) { p = d; break; }
    std::uint64_t alpha = 0, m = n;
    while (m % p == 0) { m /= p; ++alpha; }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, alpha);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

// res = (a * b) mod m over GF(p); m monic of degree deg(m).
Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    std::size_t deg = m.size() - 1;
    std::vector<std::uint64_t> res(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t i = res.size(); i-- > deg;) {
        std::uint64_t c = res[i];
        if (!c) continue;
        res[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            res[i - deg + j] = (res[i - deg + j] + (p - m[j] % p) % p * c) % p;
    }
    Poly out(deg);
    for (std::size_t i = 0; i < deg; ++i) out[i] = std::uint32_t(res[i]);
    return out;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    std::size_t deg = m.size() - 1;
    Poly r(deg, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

int pdeg(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i]) return int(i);
    return -1;
}

// Remainder of a by monic divisor d over GF(p).
Poly pmod(Poly a, const Poly& d, std::uint64_t p) {
    int dd = pdeg(d);
    for (int i = pdeg(a); i >= dd; i = pdeg(a)) {
        std::uint64_t c = a[i];
        for (int j = 0; j <= dd; ++j)
            a[i - dd + j] = std::uint32_t((a[i - dd + j] + (p - d[j] % p) % p * c) % p);
    }
    return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
    std::size_t deg = m.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) { div[i] = std::uint32_t(c % p); c /= p; }
            div[d] = 1;
            if (pdeg(pmod(m, div, p)) < 0) return false;
        }
    }
    return true;
}

bool x_is_primitive(const Poly& m, std::uint64_t p, std::uint64_t q) {
    std::size_t deg = m.size() - 1;
    Poly x(deg, 0);
    if (deg >= 2) x[1] = 1;
    else return false;
    Poly one(deg, 0);
    one[0] = 1;
    if (ppowmod(x, q - 1, m, p) != one) return false;
    for (std::uint64_t r : prime_factors(q - 1))
        if (ppowmod(x, (q - 1) / r, m, p) == one) return false;
    return true;
}

std::uint64_t mulmod_int(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (unsigned __int128)a * b % p;
}

std::uint64_t powmod_int(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_int(r, a, p);
        a = mulmod_int(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::shared_ptr<const FieldCtx>
FieldCtx::make(std::uint64_t p, std::uint64_t alpha, std::uint64_t order_bound,
               std::optional<std::uint64_t> gamma_override) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (alpha == 0) throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < alpha; ++i) {
        if (q > order_bound / p) throw std::invalid_argument("field order exceeds bound");
        q *= p;
    }
    if (q > order_bound) throw std::invalid_argument("field order exceeds bound");

    auto f = std::shared_ptr<FieldCtx>(new FieldCtx());
    f->p_ = p;
    f->alpha_ = alpha;
    f->q_ = q;

    if (alpha == 1) {
        f->modulus_ = {0, 1};  // arithmetic is plain mod p
        auto fs = prime_factors(p - 1);
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < p; ++cand) {
            bool prim = true;
            for (std::uint64_t r : fs)
                if (powmod_int(cand, (p - 1) / r, p) == 1) { prim = false; break; }
            if (prim) { g = cand; break; }
        }
        if (p == 2) g = 1;
        f->gamma_ = g;
    } else {
        Poly chosen;
        bool primitive_found = false;
        Poly least_irreducible;
        std::uint64_t scan = q;  // p^alpha codes for the lower coefficients
        for (std::uint64_t code = 0; code < scan; ++code) {
            Poly m(alpha + 1);
            std::uint64_t c = code;
            for (std::uint64_t i = 0; i < alpha; ++i) { m[i] = std::uint32_t(c % p); c /= p; }
            m[alpha] = 1;
            if (!is_irreducible(m, p)) continue;
            if (least_irreducible.empty()) least_irreducible = m;
            if (x_is_primitive(m, p, q)) {
                chosen = m;
                primitive_found = true;
                break;
            }
        }
        if (!primitive_found) {
            if (least_irreducible.empty())
                throw std::logic_error("no irreducible polynomial found");
            chosen = least_irreducible;
        }
        f->modulus_ = chosen;
        f->gamma_ = primitive_found ? p : 0;  // code of x, or found below
    }

    if (gamma_override) {
        f->gamma_ = *gamma_override;
    }
    f->build_tables();
    return f;
}

std::shared_ptr<const FieldCtx>
FieldCtx::make_q(std::uint64_t q, std::uint64_t order_bound,
                 std::optional<std::uint64_t> gamma_override) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return make(pp->first, pp->second, order_bound, gamma_override);
}

std::vector<std::uint32_t> FieldCtx::digits(std::uint64_t a) const {
    std::vector<std::uint32_t> d(alpha_);
    for (std::uint64_t i = 0; i < alpha_; ++i) { d[i] = std::uint32_t(a % p_); a /= p_; }
    return d;
}

std::uint64_t FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
    if (alpha_ == 1) return (a + b) % p_;
    std::uint64_t out = 0, mult = 1;
    for (std::uint64_t i = 0; i < alpha_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint64_t FieldCtx::neg(std::uint64_t a) const {
    if (alpha_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t out = 0, mult = 1;
    for (std::uint64_t i = 0; i < alpha_; ++i) {
        std::uint64_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(std::uint64_t(dlog_[a]) + dlog_[b]) % (q_ - 1)];
    if (alpha_ == 1) return mulmod_int(a, b, p_);
    return from_digits(pmulmod(digits(a), digits(b), modulus_, p_));
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(unsigned __int128)dlog_[a] * e % (q_ - 1)];
}

std::uint64_t FieldCtx::dlog(std::uint64_t x) const {
    if (x == 0) throw std::domain_error("dlog of zero");
    if (x >= q_) throw std::invalid_argument("element out of range");
    return dlog_[x];
}

void FieldCtx::build_tables() {
    // Raw multiply (no tables yet).
    auto raw_mul = [&](std::uint64_t a, std::uint64_t b) {
        if (a == 0 || b == 0) return std::uint64_t{0};
        if (alpha_ == 1) return mulmod_int(a, b, p_);
        return from_digits(pmulmod(digits(a), digits(b), modulus_, p_));
    };
    auto order_ok = [&](std::uint64_t g) {
        auto powr = [&](std::uint64_t base, std::uint64_t e) {
            std::uint64_t r = 1;
            while (e) {
                if (e & 1) r = raw_mul(r, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            return r;
        };
        if (powr(g, q_ - 1) != 1) return false;
        for (std::uint64_t r : prime_factors(q_ - 1))
            if (powr(g, (q_ - 1) / r) == 1) return false;
        return true;
    };

    if (gamma_ == 0) {
        // Fallback: least primitive element in code order.
        for (std::uint64_t g = 1; g < q_; ++g)
            if (order_ok(g)) { gamma_ = g; break; }
    } else if (!order_ok(gamma_)) {
        throw std::invalid_argument("supplied gamma is not primitive");
    }

    exp_.assign(q_ - 1, 1);
    dlog_.assign(q_, 0);
    for (std::uint64_t i = 1; i < q_ - 1; ++i) exp_[i] = raw_mul(exp_[i - 1], gamma_);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        if (exp_[i] != 1 && dlog_[exp_[i]] != 0)
            throw std::logic_error("gamma order defect while building dlog table");
        dlog_[exp_[i]] = std::uint32_t(i);
    }
}

std::shared_ptr<const GroupCtx> FieldCtx::as_group() const {
    return GroupCtx::field_additive(shared_from_this());
}

}  // namespace adskit
