#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fq.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace hypnp {

/// Truncated arithmetic in W = Z_p[zeta_{q-1}][pi] / (pi^{p-1} + p),
/// to pi-adic precision M. Elements are grids c[i][j], 0 <= i < p-1
/// (pi power), 0 <= j < s (unramified basis power), with row i carried
/// modulo p^{ceil((M-i)/(p-1))}.
struct PadicRing {
    std::int64_t p = 0;
    int s = 1;
    int M = 1;
    std::vector<std::int64_t> unram_modulus;  // monic, size s+1, coeffs in [0,p)
    int K0 = 0;
    std::vector<std::uint64_t> ppow;  // p^0 .. p^K0

    static PadicRing make(std::int64_t p, int s, int M,
                          std::vector<std::int64_t> unram_modulus = {}) {
        if (p < 3) throw invalid_shape_error("ring requires an odd prime");
        if (s < 1 || M < 1) throw invalid_shape_error("bad ring parameters");
        PadicRing R;
        R.p = p;
        R.s = s;
        R.M = M;
        if (unram_modulus.empty()) {
            if (s != 1) throw invalid_shape_error("unramified modulus required for s > 1");
            unram_modulus = {0, 1};
        }
        if (static_cast<int>(unram_modulus.size()) != s + 1 || unram_modulus[s] != 1)
            throw invalid_shape_error("unramified modulus must be monic of degree s");
        R.unram_modulus = std::move(unram_modulus);
        R.K0 = (M + static_cast<int>(p) - 2) / (static_cast<int>(p) - 1);
        std::uint64_t pk = 1;
        R.ppow.push_back(pk);
        for (int i = 0; i < R.K0; ++i) {
            if (pk > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(p))
                throw resource_error("requested precision exceeds coefficient width");
            pk *= static_cast<std::uint64_t>(p);
            R.ppow.push_back(pk);
        }
        return R;
    }

    int rows() const { return static_cast<int>(p) - 1; }
    /// Row-i coefficient modulus exponent at element precision `prec`.
    int krow(int i, int prec) const {
        int k = (prec - i + static_cast<int>(p) - 2) / (static_cast<int>(p) - 1);
        if (k < 0) k = 0;
        if (k > K0) k = K0;
        return k;
    }
};

struct PadicElement {
    const PadicRing* R = nullptr;
    int prec = 0;
    std::vector<std::uint64_t> c;  // rows() * s, row-major

    std::uint64_t& at(int i, int j) { return c[static_cast<size_t>(i) * R->s + j]; }
    std::uint64_t at(int i, int j) const { return c[static_cast<size_t>(i) * R->s + j]; }
};

namespace detail {

inline std::uint64_t smod128(__int128 v, std::uint64_t m) {
    if (m == 1) return 0;
    __int128 r = v % static_cast<__int128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

inline void check_same_ring(const PadicElement& a, const PadicElement& b) {
    if (a.R != b.R) throw std::invalid_argument("ring mismatch");
}

}  // namespace detail

inline PadicElement padic_zero(const PadicRing& R, int prec = -1) {
    PadicElement x;
    x.R = &R;
    x.prec = (prec < 0) ? R.M : prec;
    x.c.assign(static_cast<size_t>(R.rows()) * R.s, 0);
    return x;
}

inline void canonicalize(PadicElement& x) {
    for (int i = 0; i < x.R->rows(); ++i) {
        std::uint64_t pk = x.R->ppow[static_cast<size_t>(x.R->krow(i, x.prec))];
        for (int j = 0; j < x.R->s; ++j) x.at(i, j) = (pk == 1) ? 0 : x.at(i, j) % pk;
    }
}

inline PadicElement padic_from_int(const PadicRing& R, const Int& v, int prec = -1) {
    PadicElement x = padic_zero(R, prec);
    Int pk = Int(x.R->ppow[static_cast<size_t>(R.krow(0, x.prec))]);
    if (pk != 0) {
        Int r = v % pk;
        if (r < 0) r += pk;
        x.at(0, 0) = static_cast<std::uint64_t>(r);
    }
    return x;
}

inline PadicElement padic_one(const PadicRing& R, int prec = -1) { return padic_from_int(R, 1, prec); }

/// The uniformizer pi.
inline PadicElement padic_pi(const PadicRing& R, int prec = -1) {
    PadicElement x = padic_zero(R, prec);
    if (R.p > 2 && R.krow(1, x.prec) > 0) x.at(1, 0) = 1;
    return x;
}

inline PadicElement add(const PadicElement& a, const PadicElement& b) {
    detail::check_same_ring(a, b);
    PadicElement r = padic_zero(*a.R, std::min(a.prec, b.prec));
    for (int i = 0; i < r.R->rows(); ++i) {
        std::uint64_t pk = r.R->ppow[static_cast<size_t>(r.R->krow(i, r.prec))];
        for (int j = 0; j < r.R->s; ++j)
            r.at(i, j) = (pk == 1) ? 0 : (a.at(i, j) % pk + b.at(i, j) % pk) % pk;
    }
    return r;
}

inline PadicElement neg(const PadicElement& a) {
    PadicElement r = padic_zero(*a.R, a.prec);
    for (int i = 0; i < r.R->rows(); ++i) {
        std::uint64_t pk = r.R->ppow[static_cast<size_t>(r.R->krow(i, r.prec))];
        for (int j = 0; j < r.R->s; ++j) {
            std::uint64_t v = (pk == 1) ? 0 : a.at(i, j) % pk;
            r.at(i, j) = v ? pk - v : 0;
        }
    }
    return r;
}

inline PadicElement sub(const PadicElement& a, const PadicElement& b) { return add(a, neg(b)); }

inline PadicElement mul(const PadicElement& a, const PadicElement& b) {
    detail::check_same_ring(a, b);
    const PadicRing& R = *a.R;
    const int rp = R.rows(), s = R.s, w = 2 * s - 1;
    PadicElement r = padic_zero(R, std::min(a.prec, b.prec));
    const std::uint64_t pK0 = R.ppow[static_cast<size_t>(R.K0)];
    std::vector<__int128> acc(static_cast<size_t>(rp) * w, 0);
    for (int i1 = 0; i1 < rp; ++i1)
        for (int j1 = 0; j1 < s; ++j1) {
            const std::uint64_t ca = a.at(i1, j1);
            if (!ca) continue;
            for (int i2 = 0; i2 < rp; ++i2) {
                const int i = i1 + i2;
                for (int j2 = 0; j2 < s; ++j2) {
                    const std::uint64_t cb = b.at(i2, j2);
                    if (!cb) continue;
                    std::uint64_t m = static_cast<std::uint64_t>(
                        static_cast<unsigned __int128>(ca) * cb % pK0);
                    if (i < rp) {
                        acc[static_cast<size_t>(i) * w + j1 + j2] += m;
                    } else {  // pi^{p-1} -> -p
                        std::uint64_t t = static_cast<std::uint64_t>(
                            static_cast<unsigned __int128>(m) * static_cast<std::uint64_t>(R.p) %
                            pK0);
                        acc[static_cast<size_t>(i - rp) * w + j1 + j2] -= t;
                    }
                }
            }
        }
    // Reduce the unramified degree modulo the (monic, small-coefficient)
    // modulus u(y).
    for (int i = 0; i < rp; ++i) {
        for (int jd = w - 1; jd >= s; --jd) {
            __int128 t = acc[static_cast<size_t>(i) * w + jd];
            if (t == 0) continue;
            acc[static_cast<size_t>(i) * w + jd] = 0;
            // keep magnitudes bounded before cascading
            std::uint64_t tm = detail::smod128(t, pK0);
            for (int k = 0; k < s; ++k)
                acc[static_cast<size_t>(i) * w + jd - s + k] -=
                    static_cast<__int128>(tm) * R.unram_modulus[static_cast<size_t>(k)];
        }
        std::uint64_t pk = R.ppow[static_cast<size_t>(R.krow(i, r.prec))];
        for (int j = 0; j < s; ++j)
            r.at(i, j) = detail::smod128(acc[static_cast<size_t>(i) * w + j], pk);
    }
    return r;
}

/// r += k * x for an integer scalar k, in place (precision of r kept).
inline void add_scaled(PadicElement& r, const PadicElement& x, std::int64_t k) {
    detail::check_same_ring(r, x);
    const PadicRing& R = *r.R;
    for (int i = 0; i < R.rows(); ++i) {
        std::uint64_t pk = R.ppow[static_cast<size_t>(R.krow(i, r.prec))];
        if (pk == 1) continue;
        std::uint64_t kr = detail::smod128(k, pk);
        if (!kr) continue;
        for (int j = 0; j < R.s; ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(x.at(i, j)) * kr % pk);
            r.at(i, j) = (r.at(i, j) + t) % pk;
        }
    }
}

inline bool is_zero_to_precision(const PadicElement& a) {
    for (int i = 0; i < a.R->rows(); ++i) {
        std::uint64_t pk = a.R->ppow[static_cast<size_t>(a.R->krow(i, a.prec))];
        for (int j = 0; j < a.R->s; ++j)
            if (pk != 1 && a.at(i, j) % pk != 0) return false;
    }
    return true;
}

/// pi-adic valuation, or nullopt when the element vanishes to its
/// stated precision.
inline std::optional<int> ord_pi(const PadicElement& a) {
    const PadicRing& R = *a.R;
    std::optional<int> best;
    for (int i = 0; i < R.rows(); ++i) {
        std::uint64_t pk = R.ppow[static_cast<size_t>(R.krow(i, a.prec))];
        if (pk == 1) continue;
        for (int j = 0; j < R.s; ++j) {
            std::uint64_t v = a.at(i, j) % pk;
            if (!v) continue;
            int vp = 0;
            while (v % static_cast<std::uint64_t>(R.p) == 0) {
                v /= static_cast<std::uint64_t>(R.p);
                ++vp;
            }
            int cand = i + (static_cast<int>(R.p) - 1) * vp;
            if (!best || cand < *best) best = cand;
        }
    }
    return best;
}

/// ord_q = ord_pi / (s (p-1)); throws when zero to precision.
inline Rat ord_q(const PadicElement& a) {
    auto v = ord_pi(a);
    if (!v) throw precision_error("element is zero to working precision");
    return Rat(Int(*v), Int(a.R->s * (a.R->p - 1)));
}

inline bool equal_to_precision(const PadicElement& a, const PadicElement& b) {
    return is_zero_to_precision(sub(a, b));
}

namespace detail {

// Arithmetic in the unramified subring Z_p[y]/(u(y)) mod p^K0, used by
// Teichmueller lifting and unit inversion.
using UPoly = std::vector<std::uint64_t>;

inline UPoly umul(const PadicRing& R, const UPoly& a, const UPoly& b) {
    const int s = R.s;
    const std::uint64_t pK0 = R.ppow[static_cast<size_t>(R.K0)];
    std::vector<__int128> acc(static_cast<size_t>(2 * s - 1), 0);
    for (int i = 0; i < s; ++i) {
        if (!a[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < s; ++j)
            acc[static_cast<size_t>(i + j)] +=
                static_cast<__int128>(smod128(static_cast<unsigned __int128>(a[static_cast<size_t>(i)]) *
                                                  b[static_cast<size_t>(j)] % pK0,
                                              pK0));
    }
    for (int jd = 2 * s - 2; jd >= s; --jd) {
        __int128 t = acc[static_cast<size_t>(jd)];
        if (t == 0) continue;
        acc[static_cast<size_t>(jd)] = 0;
        std::uint64_t tm = smod128(t, pK0);
        for (int k = 0; k < s; ++k)
            acc[static_cast<size_t>(jd - s + k)] -=
                static_cast<__int128>(tm) * R.unram_modulus[static_cast<size_t>(k)];
    }
    UPoly r(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) r[static_cast<size_t>(j)] = smod128(acc[static_cast<size_t>(j)], pK0);
    return r;
}

// Inverse of a unit of F_p[y]/(u mod p), coefficients in [0,p).
inline UPoly residue_inverse(const PadicRing& R, const UPoly& a0) {
    const std::int64_t p = R.p;
    const int s = R.s;
    auto inv_mod_p = [p](std::int64_t v) {
        std::int64_t r = 1, b = ((v % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    if (s == 1) {
        std::int64_t v = static_cast<std::int64_t>(a0[0]) % p;
        if (v == 0) throw std::domain_error("not a unit");
        return UPoly{static_cast<std::uint64_t>(inv_mod_p(v))};
    }
    // extended Euclid in F_p[y]
    std::vector<std::int64_t> r0(R.unram_modulus.begin(), R.unram_modulus.end());
    std::vector<std::int64_t> r1(s, 0);
    for (int j = 0; j < s; ++j) r1[static_cast<size_t>(j)] = static_cast<std::int64_t>(a0[static_cast<size_t>(j)]) % p;
    std::vector<std::int64_t> t0{0}, t1{1};
    auto deg = [](const std::vector<std::int64_t>& f) {
        int d = static_cast<int>(f.size()) - 1;
        while (d >= 0 && f[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    while (deg(r1) > 0) {
        // r0 = q r1 + r2
        std::vector<std::int64_t> rem = r0, qpoly(static_cast<size_t>(std::max(0, deg(r0) - deg(r1)) + 1), 0);
        int d1 = deg(r1);
        std::int64_t linv = inv_mod_p(r1[static_cast<size_t>(d1)]);
        for (int d = deg(rem); d >= d1; d = deg(rem)) {
            std::int64_t coef = rem[static_cast<size_t>(d)] * linv % p;
            qpoly[static_cast<size_t>(d - d1)] = coef;
            for (int i = 0; i <= d1; ++i)
                rem[static_cast<size_t>(d - d1 + i)] =
                    ((rem[static_cast<size_t>(d - d1 + i)] - coef * r1[static_cast<size_t>(i)]) % p + p) % p;
        }
        // t2 = t0 - q t1
        std::vector<std::int64_t> t2(std::max(t0.size(), qpoly.size() + t1.size()), 0);
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < qpoly.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j)
                t2[i + j] = ((t2[i + j] - qpoly[i] * t1[j]) % p + p) % p;
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    int d1 = deg(r1);
    if (d1 < 0) throw std::domain_error("not a unit");
    std::int64_t scale = inv_mod_p(r1[static_cast<size_t>(d1)]);  // make remainder 1
    UPoly out(static_cast<size_t>(s), 0);
    for (size_t i = 0; i < t1.size() && i < static_cast<size_t>(s); ++i)
        out[i] = static_cast<std::uint64_t>(t1[i] * scale % p);
    return out;
}

inline PadicElement embed_row0(const PadicRing& R, const UPoly& a, int prec) {
    PadicElement x = padic_zero(R, prec);
    std::uint64_t pk = R.ppow[static_cast<size_t>(R.krow(0, prec))];
    for (int j = 0; j < R.s; ++j) x.at(0, j) = (pk == 1) ? 0 : a[static_cast<size_t>(j)] % pk;
    return x;
}

}  // namespace detail

/// Teichmueller lift of x in F_q; the field must use the ring's
/// unramified modulus.
inline PadicElement teichmuller(const PadicRing& R, const FqField& base, std::int64_t x_code) {
    if (base.p != R.p || base.degree != R.s) throw std::invalid_argument("field/ring mismatch");
    for (int i = 0; i <= R.s; ++i)
        if (base.modulus[static_cast<size_t>(i)] != R.unram_modulus[static_cast<size_t>(i)])
            throw std::invalid_argument("field/ring modulus mismatch");
    if (x_code == 0) throw std::domain_error("teichmuller of zero");
    detail::UPoly t(static_cast<size_t>(R.s), 0);
    std::int64_t c = x_code;
    for (int j = 0; j < R.s; ++j) {
        t[static_cast<size_t>(j)] = static_cast<std::uint64_t>(c % R.p);
        c /= R.p;
    }
    const std::int64_t q = base.q;
    for (int it = 0; it <= R.K0; ++it) {
        // t <- t^q, gaining one p-adic digit per round
        detail::UPoly acc{t};
        detail::UPoly r(static_cast<size_t>(R.s), 0);
        r[0] = 1;
        std::int64_t e = q;
        while (e) {
            if (e & 1) r = detail::umul(R, r, acc);
            acc = detail::umul(R, acc, acc);
            e >>= 1;
        }
        t = std::move(r);
    }
    return detail::embed_row0(R, t, R.M);
}

/// Inverse of a unit (Hensel lifting from the residue field).
inline PadicElement inverse(const PadicElement& x) {
    const PadicRing& R = *x.R;
    detail::UPoly a0(static_cast<size_t>(R.s));
    for (int j = 0; j < R.s; ++j) a0[static_cast<size_t>(j)] = x.at(0, j) % static_cast<std::uint64_t>(R.p);
    PadicElement v = detail::embed_row0(R, detail::residue_inverse(R, a0), x.prec);
    PadicElement two = padic_from_int(R, 2, x.prec);
    int iters = 2;
    for (int m = 1; m < x.prec; m *= 2) ++iters;
    for (int it = 0; it < iters; ++it) v = mul(v, sub(two, mul(x, v)));
    if (!equal_to_precision(mul(x, v), padic_one(R, x.prec)))
        throw std::domain_error("not a unit to working precision");
    return v;
}

inline PadicElement padic_pow(PadicElement a, std::int64_t e) {
    PadicElement r = padic_one(*a.R, a.prec);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

/// The primitive p-th root of unity with zeta_p = 1 + pi mod pi^2.
/// Computed by Hensel iteration on H(U) = Phi(1+pi U)/pi^{p-1}, whose
/// derivative is a unit at U = 1.
inline PadicElement zeta_p(const PadicRing& R) {
    if (R.M < 2) throw precision_error("zeta_p needs precision >= 2");
    const std::int64_t p = R.p;
    // H(U) = sum_{k=1}^{p-1} (-C(p,k)/p) pi^{k-1} U^{k-1} + U^{p-1}
    std::vector<PadicElement> coef;  // degree 0 .. p-1
    PadicElement pi = padic_pi(R);
    PadicElement pipow = padic_one(R);
    Int binom = 1;  // C(p,k)
    for (std::int64_t k = 1; k <= p - 1; ++k) {
        binom = binom * (p - k + 1) / k;
        coef.push_back(mul(padic_from_int(R, -(binom / p)), pipow));
        pipow = mul(pipow, pi);
    }
    coef.push_back(padic_one(R));
    // derivative coefficients
    std::vector<PadicElement> dcoef;
    for (std::int64_t d = 1; d <= p - 1; ++d) dcoef.push_back(mul(padic_from_int(R, d), coef[static_cast<size_t>(d)]));
    auto horner = [&R](const std::vector<PadicElement>& cs, const PadicElement& u) {
        PadicElement acc = padic_zero(R, u.prec);
        for (size_t i = cs.size(); i-- > 0;) acc = add(mul(acc, u), cs[i]);
        return acc;
    };
    PadicElement u = padic_one(R);
    int iters = 2;
    for (int m = 1; m < R.M; m *= 2) ++iters;
    for (int it = 0; it < iters; ++it)
        u = sub(u, mul(horner(coef, u), inverse(horner(dcoef, u))));
    PadicElement z = add(padic_one(R), mul(pi, u));
    if (!equal_to_precision(padic_pow(z, p), padic_one(R)))
        throw std::logic_error("zeta_p iteration failed to converge");
    return z;
}

/// psi(t) = zeta_p^t for t in F_p.
inline PadicElement psi_value(const PadicRing& R, const PadicElement& zeta, std::int64_t t) {
    return padic_pow(zeta, ((t % R.p) + R.p) % R.p);
}

/// Exact division by a small integer k (the element must be divisible;
/// precision drops by (p-1) per factor of p in k).
inline PadicElement div_exact_int(const PadicElement& x, std::int64_t k) {
    if (k == 0) throw std::domain_error("division by zero");
    const PadicRing& R = *x.R;
    PadicElement r = x;
    std::int64_t ku = k;
    bool negate = false;
    if (ku < 0) {
        ku = -ku;
        negate = true;
    }
    int v = 0;
    while (ku % R.p == 0) {
        ku /= R.p;
        ++v;
    }
    if (ku != 1) r = mul(r, inverse(padic_from_int(R, ku, r.prec)));
    for (int t = 0; t < v; ++t) {
        PadicElement y = padic_zero(R, r.prec - (static_cast<int>(R.p) - 1));
        if (y.prec < 1) throw precision_error("precision exhausted dividing by p");
        for (int i = 0; i < R.rows(); ++i) {
            std::uint64_t pk = R.ppow[static_cast<size_t>(R.krow(i, r.prec))];
            for (int j = 0; j < R.s; ++j) {
                std::uint64_t c = (pk == 1) ? 0 : r.at(i, j) % pk;
                if (c % static_cast<std::uint64_t>(R.p) != 0)
                    throw precision_error("non-integral division by p");
                y.at(i, j) = c / static_cast<std::uint64_t>(R.p);
            }
        }
        canonicalize(y);
        r = std::move(y);
    }
    return negate ? neg(r) : r;
}

/// Gauss sum G(psi, omega^{-k}) = sum_{x in F_q^*} psi(Tr x) omega(x)^{-k},
/// evaluated in W; the field must carry tables and match the ring.
inline PadicElement gauss_sum(const PadicRing& R, const FqField& base, std::int64_t k) {
    if (!base.has_tables()) throw std::invalid_argument("field tables required");
    const std::int64_t qm1 = base.q - 1;
    k = ((k % qm1) + qm1) % qm1;
    PadicElement zeta = zeta_p(R);
    PadicElement mu = teichmuller(R, base, base.generator);
    // counts on (additive value, multiplicative class)
    std::vector<std::int64_t> cnt(static_cast<size_t>(R.p) * static_cast<size_t>(qm1), 0);
    for (std::int64_t l = 0; l < qm1; ++l) {
        std::int64_t t = base.trace_of_log(l);
        std::int64_t e = static_cast<std::int64_t>((__int128)(qm1 - k) * l % qm1);
        ++cnt[static_cast<size_t>(t) * static_cast<size_t>(qm1) + static_cast<size_t>(e)];
    }
    PadicElement acc = padic_zero(R);
    PadicElement zt = padic_one(R);
    for (std::int64_t t = 0; t < R.p; ++t) {
        PadicElement me = zt;
        for (std::int64_t e = 0; e < qm1; ++e) {
            std::int64_t c = cnt[static_cast<size_t>(t) * static_cast<size_t>(qm1) + static_cast<size_t>(e)];
            if (c) add_scaled(acc, me, c);
            if (e + 1 < qm1) me = mul(me, mu);
        }
        if (t + 1 < R.p) zt = mul(zt, zeta);
    }
    return acc;
}

}  // namespace hypnp
