#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "params.hpp"

namespace hypnp {

namespace detail {

inline std::vector<std::int64_t> prime_factors(std::int64_t x) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            fs.push_back(d);
            while (x % d == 0) x /= d;
        }
    if (x > 1) fs.push_back(x);
    return fs;
}

// Dense polynomial arithmetic over F_p for modulus search; vectors are
// coefficient lists, low degree first.
using Poly = std::vector<std::int64_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    const size_t d = f.size() - 1;  // f monic of degree d
    for (size_t k = c.size(); k-- > d;) {
        const std::int64_t t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (size_t i = 0; i < d; ++i) c[k - d + i] = ((c[k - d + i] - t * f[i]) % p + p) % p;
    }
    c.resize(d);
    return c;
}

inline Poly poly_powmod_xq(const Poly& f, std::int64_t p, int e, Poly base) {
    // base^(p^e) mod f by e rounds of p-th powering (square-and-multiply).
    for (int r = 0; r < e; ++r) {
        Poly acc{1};
        Poly sq = base;
        std::int64_t k = p;
        while (k) {
            if (k & 1) acc = poly_mulmod(acc, sq, f, p);
            sq = poly_mulmod(sq, sq, f, p);
            k >>= 1;
        }
        base = acc;
    }
    return base;
}

inline Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        std::int64_t lead = b.back();
        // inverse of lead mod p
        std::int64_t inv = 1, base = lead % p, k = p - 2;
        while (k) {
            if (k & 1) inv = inv * base % p;
            base = base * base % p;
            k >>= 1;
        }
        Poly r = a;
        while (r.size() >= b.size()) {
            poly_trim(r);
            if (r.size() < b.size()) break;
            std::int64_t t = r.back() * inv % p;
            size_t off = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[off + i] = ((r[off + i] - t * b[i]) % p + p) % p;
        }
        poly_trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    Poly x{0, 1};
    if (d == 1) return true;
    Poly xq = poly_powmod_xq(f, p, d, x);  // x^(p^d) mod f
    poly_trim(xq);
    Poly xt = x;
    poly_trim(xt);
    if (xq != xt) return false;
    for (std::int64_t r : prime_factors(d)) {
        Poly xr = poly_powmod_xq(f, p, d / static_cast<int>(r), x);
        // gcd(x^(p^(d/r)) - x, f) must be constant
        Poly diff = xr;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

/// F_{p^degree} with elements packed as base-p integer codes; optional
/// exp/log/trace tables for fields small enough to enumerate.
class FqField {
public:
    std::int64_t p = 0;
    int degree = 1;
    std::int64_t q = 0;
    std::vector<std::int64_t> modulus;  // monic, low degree first, size degree+1
    std::int64_t generator = 0;

    FqField() = default;

    static FqField make(std::int64_t p, int degree, bool with_tables,
                        std::int64_t table_budget = 1000000) {
        if (p < 2 || degree < 1 || degree > 16) throw invalid_shape_error("bad field parameters");
        FqField F;
        F.p = p;
        F.degree = degree;
        F.q = 1;
        for (int i = 0; i < degree; ++i) {
            if (F.q > (std::int64_t(1) << 56) / p) throw resource_error("field size overflows");
            F.q *= p;
        }
        if (with_tables && F.q > table_budget) throw resource_error("field enumeration budget exceeded");
        F.modulus = F.find_modulus();
        F.generator = F.find_generator();
        if (with_tables) F.build_tables();
        return F;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0, mul = 1;
        for (int i = 0; i < degree; ++i) {
            r += (a % p + b % p) % p * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        return r;
    }

    std::int64_t neg(std::int64_t a) const {
        std::int64_t r = 0, mul = 1;
        for (int i = 0; i < degree; ++i) {
            r += (p - a % p) % p * mul;
            a /= p;
            mul *= p;
        }
        return r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        std::int64_t ca[16], cb[16];
        std::int64_t cc[31] = {0};
        for (int i = 0; i < degree; ++i) {
            ca[i] = a % p;
            a /= p;
            cb[i] = b % p;
            b /= p;
        }
        for (int i = 0; i < degree; ++i) {
            if (!ca[i]) continue;
            for (int j = 0; j < degree; ++j) cc[i + j] += ca[i] * cb[j];
        }
        for (int k = 2 * degree - 2; k >= degree; --k) {
            std::int64_t t = cc[k] % p;
            if (!t) continue;
            for (int i = 0; i < degree; ++i) cc[k - degree + i] -= t * modulus[i];
        }
        std::int64_t r = 0, mulp = 1;
        for (int i = 0; i < degree; ++i) {
            r += ((cc[i] % p + p) % p) * mulp;
            mulp *= p;
        }
        return r;
    }

    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1;
        std::int64_t modexp = q - 1;
        e %= modexp;
        if (e < 0) e += modexp;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Trace to the prime field, returned as an integer in [0,p).
    std::int64_t trace_to_prime(std::int64_t x) const {
        std::int64_t acc = x;
        std::int64_t fr = x;
        for (int i = 1; i < degree; ++i) {
            fr = pow_raw(fr, p);
            acc = add(acc, fr);
        }
        if (acc >= p) throw std::logic_error("trace not in prime field");
        return acc;
    }

    bool has_tables() const { return !exp_.empty(); }
    /// g^l for 0 <= l < q-1.
    std::int64_t exp_of(std::int64_t l) const { return exp_[static_cast<size_t>(l)]; }
    /// Discrete log base the canonical generator; x != 0.
    std::int64_t log_of(std::int64_t x) const {
        std::int64_t l = log_[static_cast<size_t>(x)];
        if (l < 0) throw std::domain_error("log of zero");
        return l;
    }
    /// Trace of g^l to F_p, from the precomputed table.
    std::int64_t trace_of_log(std::int64_t l) const { return tr_[static_cast<size_t>(l)]; }
    const std::vector<std::int64_t>& trace_table() const { return tr_; }

    /// Evaluate a polynomial with coefficients in [0,p) (viewed as
    /// constants of this field) at the element x.
    std::int64_t eval_prime_poly(const std::vector<std::int64_t>& coeffs, std::int64_t x) const {
        std::int64_t acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i] % p);
        return acc;
    }

private:
    std::vector<std::int64_t> exp_, log_, tr_;

    std::int64_t pow_raw(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::vector<std::int64_t> find_modulus() const {
        // Smallest monic irreducible in lexicographic order of the
        // coefficient code (c_0 + c_1 p + ...).
        if (degree == 1) return {0, 1};  // y: root 0, field = F_p
        std::int64_t codes = 1;
        for (int i = 0; i < degree; ++i) codes *= p;
        for (std::int64_t code = 1; code < codes; ++code) {
            detail::Poly f(degree + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < degree; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[degree] = 1;
            if (detail::is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::int64_t find_generator() const {
        auto fs = detail::prime_factors(q - 1);
        const std::int64_t start = (degree == 1) ? 2 : p;
        for (std::int64_t g = start; g < q; ++g) {
            bool ok = true;
            for (auto r : fs)
                if (pow_raw(g, (q - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw std::logic_error("no generator found");
    }

    void build_tables() {
        exp_.resize(static_cast<size_t>(q - 1));
        log_.assign(static_cast<size_t>(q), -1);
        tr_.resize(static_cast<size_t>(q - 1));
        std::int64_t x = 1;
        for (std::int64_t l = 0; l < q - 1; ++l) {
            exp_[static_cast<size_t>(l)] = x;
            log_[static_cast<size_t>(x)] = l;
            x = mul(x, generator);
        }
        if (x != 1) throw std::logic_error("generator order mismatch");
        // Traces via Frobenius in log coordinates: Tr(g^l) = sum of the
        // constant parts of g^{l p^i}; accumulate element-wise instead.
        for (std::int64_t l = 0; l < q - 1; ++l) {
            std::int64_t acc = exp_[static_cast<size_t>(l)];
            std::int64_t lp = l;
            for (int i = 1; i < degree; ++i) {
                lp = static_cast<std::int64_t>((__int128)lp * p % (q - 1));
                acc = add(acc, exp_[static_cast<size_t>(lp)]);
            }
            if (acc >= p) throw std::logic_error("trace not in prime field");
            tr_[static_cast<size_t>(l)] = acc;
        }
    }
};

/// Public constructor matching the documented interface.
inline FqField build_field(std::int64_t p, int degree, std::int64_t table_budget = 1000000) {
    return FqField::make(p, degree, true, table_budget);
}

}  // namespace hypnp
