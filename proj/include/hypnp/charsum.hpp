#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fq.hpp"
#include "padic.hpp"
#include "params.hpp"

namespace hypnp {

struct SumBudgets {
    std::int64_t field_elements = 1000000;   // per enumerated field
    double tuple_limit = 2.5e8;              // direct summation loop
    double kernel_build_limit = 3e8;         // per staged kernel pass
    std::size_t kernel_bytes = std::size_t(1) << 31;
    double direct_build_limit = 6e6;         // threshold for unstaged kernel build
};

namespace detail {

inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        std::int64_t qd = g / a1;
        g -= qd * a1;
        std::swap(g, a1);
        x -= qd * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("not invertible");
    return ((x % m) + m) % m;
}

}  // namespace detail

/// Per-extension data for F_{q^e}: trace table indexed by discrete log
/// of the canonical generator g_e, and the class twist delta with
/// Nm(g_e) = gamma^delta in the base field.
struct ExtData {
    int e = 1;
    std::int64_t Q = 0;  // q^e - 1
    std::vector<std::int64_t> tr;
    std::int64_t delta = 1;
    std::int64_t delta_inv = 1;
};

/// Everything needed to evaluate hypergeometric sums over F_{q^e},
/// e = 1..emax, coherently in one p-adic ring: compatible extension
/// fields, Dwork's zeta_p, and the Teichmueller root mu of the base
/// generator.
class SumContext {
public:
    std::int64_t p = 0;
    int s = 1;
    std::int64_t q = 0;
    int emax = 1;
    FqField base;
    std::vector<ExtData> exts;
    PadicRing ring;
    PadicElement zeta;                // zeta_p
    std::vector<PadicElement> zpow;   // zeta^t, t < p
    std::vector<PadicElement> mupow;  // mu^E, E < q-1
    SumBudgets budgets;

    static SumContext make(std::int64_t p, int s, int emax, int precision,
                           SumBudgets budgets = {}) {
        SumContext ctx;
        ctx.p = p;
        ctx.s = s;
        ctx.emax = emax;
        ctx.budgets = budgets;
        ctx.base = build_field(p, s, budgets.field_elements);
        ctx.q = ctx.base.q;
        if (ctx.q - 1 > 200000) throw resource_error("base field too large for root-of-unity tables");
        ctx.ring = PadicRing::make(p, s, precision,
                                   std::vector<std::int64_t>(ctx.base.modulus.begin(),
                                                             ctx.base.modulus.end()));
        ctx.build_extensions();
        ctx.zeta = zeta_p(ctx.ring);
        ctx.zpow.push_back(padic_one(ctx.ring));
        for (std::int64_t t = 1; t < p; ++t) ctx.zpow.push_back(mul(ctx.zpow.back(), ctx.zeta));
        PadicElement mu = teichmuller(ctx.ring, ctx.base, ctx.base.generator);
        ctx.mupow.push_back(padic_one(ctx.ring));
        for (std::int64_t k = 1; k < ctx.q - 1; ++k) ctx.mupow.push_back(mul(ctx.mupow.back(), mu));
        return ctx;
    }

    /// p-adic value of a (additive t, multiplicative class E) count grid.
    PadicElement evaluate_counts(const std::vector<std::int64_t>& counts) const {
        const std::int64_t r = q - 1;
        PadicElement acc = padic_zero(ring);
        for (std::int64_t t = 0; t < p; ++t)
            for (std::int64_t E = 0; E < r; ++E) {
                std::int64_t c = counts[static_cast<size_t>(t * r + E)];
                if (!c) continue;
                add_scaled(acc, mul(zpow[static_cast<size_t>(t)], mupow[static_cast<size_t>(E)]), c);
            }
        return acc;
    }

private:
    void build_extensions() {
        const std::int64_t r = q - 1;
        if (s == 1) {
            for (int e = 1; e <= emax; ++e) {
                ExtData X;
                X.e = e;
                if (e == 1) {
                    X.Q = r;
                    X.tr.resize(static_cast<size_t>(r));
                    for (std::int64_t l = 0; l < r; ++l) X.tr[static_cast<size_t>(l)] = base.exp_of(l);
                    X.delta = 1;
                } else {
                    FqField F = build_field(p, e, budgets.field_elements);
                    X.Q = F.q - 1;
                    X.tr = F.trace_table();
                    std::int64_t nu = X.Q / r;
                    std::int64_t nm = F.exp_of(nu);  // Nm(g_e), a prime-field constant
                    if (nm >= p) throw std::logic_error("norm left the base field");
                    X.delta = base.log_of(nm);
                }
                X.delta_inv = detail::inv_mod(X.delta, r);
                exts.push_back(std::move(X));
            }
            return;
        }
        // s > 1: build all extensions as subfields of one master field so
        // the norm-compatibility g_e^{nu_e} = g_1 holds by construction.
        std::int64_t L = 1;
        for (int e = 1; e <= emax; ++e) L = std::lcm(L, static_cast<std::int64_t>(e));
        L *= s;
        FqField M = FqField::make(p, static_cast<int>(L), false);
        std::int64_t big = 1;  // p^L - 1 via the field size
        big = M.q - 1;
        std::int64_t g1_exp = big / r;
        std::int64_t g1 = M.pow(M.generator, g1_exp);
        // embed the standalone base field: smallest j with u(g1^j) = 0
        std::int64_t j0 = -1;
        {
            std::int64_t x = 1;
            for (std::int64_t j = 0; j < r; ++j) {
                if (M.eval_prime_poly(base.modulus, x) == 0) {
                    j0 = j;
                    break;
                }
                x = M.mul(x, g1);
            }
        }
        if (j0 <= 0) throw std::logic_error("base modulus has no usable root in master field");
        std::int64_t delta = detail::inv_mod(j0, r);
        for (int e = 1; e <= emax; ++e) {
            ExtData X;
            X.e = e;
            std::int64_t Qe = 1;
            for (int i = 0; i < s * e; ++i) Qe *= p;
            Qe -= 1;
            X.Q = Qe;
            if (Qe + 1 > budgets.field_elements) throw resource_error("field enumeration budget exceeded");
            std::int64_t ge = M.pow(M.generator, big / Qe);
            std::vector<std::int64_t> els(static_cast<size_t>(Qe));
            std::int64_t x = 1;
            for (std::int64_t l = 0; l < Qe; ++l) {
                els[static_cast<size_t>(l)] = x;
                x = M.mul(x, ge);
            }
            X.tr.resize(static_cast<size_t>(Qe));
            for (std::int64_t l = 0; l < Qe; ++l) {
                std::int64_t acc = els[static_cast<size_t>(l)];
                std::int64_t lp = l;
                for (int i = 1; i < s * e; ++i) {
                    lp = static_cast<std::int64_t>((__int128)lp * p % Qe);
                    acc = M.add(acc, els[static_cast<size_t>(lp)]);
                }
                if (acc >= p) throw std::logic_error("extension trace not in prime field");
                X.tr[static_cast<size_t>(l)] = acc;
            }
            X.delta = delta;
            X.delta_inv = detail::inv_mod(delta, r);
            exts.push_back(std::move(X));
        }
    }
};

struct SumValue {
    std::vector<std::int64_t> counts;  // p x (q-1): coefficients on zeta^t mu^E
    PadicElement padic;
};

/// Direct evaluation of CHyp_{(n,m)}(chi;rho)(a) over F_{q^ext}:
/// enumerate the free variables x_2..x_n, y_1..y_m by discrete log and
/// solve x_1 from the product constraint. The fiber is given by its
/// base-field discrete log la (a = gamma^la).
inline SumValue hyp_sum(const SumContext& ctx, const CharParams& cp, std::int64_t la, int ext) {
    if (cp.p != ctx.p || cp.s != ctx.s) throw std::invalid_argument("context mismatch");
    if (ext < 1 || ext > ctx.emax) throw std::invalid_argument("extension degree out of range");
    const int n = cp.n(), m = cp.m();
    if (n < 1) throw invalid_shape_error("need n >= 1");
    const ExtData& X = ctx.exts[static_cast<size_t>(ext - 1)];
    const std::int64_t Q = X.Q, r = ctx.q - 1, p = ctx.p;
    la = ((la % r) + r) % r;
    const int Fv = n + m - 1;
    double cost = 1;
    for (int i = 0; i < Fv; ++i) cost *= static_cast<double>(Q);
    if (cost > ctx.budgets.tuple_limit) throw resource_error("summation budget exceeded");

    std::vector<std::int64_t> a_mod(static_cast<size_t>(n)), b_mod(static_cast<size_t>(m));
    for (int i = 0; i < n; ++i) a_mod[static_cast<size_t>(i)] = ((cp.a_exps[static_cast<size_t>(i)] % r) + r) % r;
    for (int j = 0; j < m; ++j) b_mod[static_cast<size_t>(j)] = ((cp.b_exps[static_cast<size_t>(j)] % r) + r) % r;

    const std::int64_t nu = Q / r;
    const std::int64_t base_l1 = static_cast<std::int64_t>(
        (__int128)nu * ((X.delta_inv * la) % r) % Q);

    SumValue out;
    out.counts.assign(static_cast<size_t>(p * r), 0);

    // var v: 0..n-2 are x_2..x_n (sign +1 on trace, -1 on constraint,
    // exponent a_{v+1}); n-1..n+m-2 are y_j (signs flipped, exponent -b_j).
    std::vector<std::int64_t> logv(static_cast<size_t>(Fv), 0);
    std::int64_t sc = 0;  // sum m_j - sum l_i mod Q
    std::int64_t st = 0;  // sum tr(x_i, i>=2) - sum tr(y_j) mod p
    std::int64_t se = 0;  // sum a_i l_i - sum b_j m_j (i>=2) mod r
    auto var_contrib = [&](int v, std::int64_t l, int sign) {
        const bool xv = v < n - 1;
        std::int64_t tc = X.tr[static_cast<size_t>(l)];
        if (xv) {
            sc = ((sc - sign * l) % Q + Q) % Q;
            st = ((st + sign * tc) % p + p) % p;
            se = ((se + sign * ((a_mod[static_cast<size_t>(v + 1)] * l) % r)) % r + r) % r;
        } else {
            sc = ((sc + sign * l) % Q + Q) % Q;
            st = ((st - sign * tc) % p + p) % p;
            se = ((se - sign * ((b_mod[static_cast<size_t>(v - (n - 1))] * l) % r)) % r + r) % r;
        }
    };
    for (int v = 0; v < Fv; ++v) var_contrib(v, 0, +1);

    const std::int64_t a1 = a_mod[0];
    while (true) {
        const std::int64_t l1 = (base_l1 + sc) % Q;
        const std::int64_t t = (X.tr[static_cast<size_t>(l1)] + st) % p;
        const std::int64_t E = (X.delta * ((a1 * (l1 % r) + se) % r)) % r;
        ++out.counts[static_cast<size_t>(t * r + E)];
        int v = 0;
        while (v < Fv) {
            var_contrib(v, logv[static_cast<size_t>(v)], -1);
            if (++logv[static_cast<size_t>(v)] == Q) logv[static_cast<size_t>(v)] = 0;
            var_contrib(v, logv[static_cast<size_t>(v)], +1);
            if (logv[static_cast<size_t>(v)] != 0) break;
            ++v;
        }
        if (v == Fv) break;
    }
    out.padic = ctx.evaluate_counts(out.counts);
    return out;
}

/// Gauss sum over F_{q^ext} for the character omega^{-k} composed with
/// the norm: G(psi o Tr, omega^{-k} o Nm).
inline PadicElement gauss_sum_ext(const SumContext& ctx, std::int64_t k, int ext) {
    const ExtData& X = ctx.exts[static_cast<size_t>(ext - 1)];
    const std::int64_t r = ctx.q - 1;
    k = ((k % r) + r) % r;
    std::vector<std::int64_t> counts(static_cast<size_t>(ctx.p * r), 0);
    for (std::int64_t l = 0; l < X.Q; ++l) {
        std::int64_t t = X.tr[static_cast<size_t>(l)];
        std::int64_t E = (X.delta * (((r - k) * (l % r)) % r)) % r;
        ++counts[static_cast<size_t>(t * r + E)];
    }
    return ctx.evaluate_counts(counts);
}

/// Both sides of the resonant reduction for tuples with
/// chi_n = rho_m = 1:
///   CHyp_{(n,m)}(a) = q CHyp_{(n-1,m-1)}(chi';rho')(a)
///                     - prod_j rho_j(-1) prod G(psi,chi_i) prod G(psi,rho_j^{-1});
/// the rho_j(-1) factors arise from sum_y psi(-y) rho_j^{-1}(y)
/// = rho_j(-1) G(psi, rho_j^{-1}).
inline bool resonant_decomposition_check(const SumContext& ctx, const CharParams& cp,
                                         std::int64_t la, int ext = 1) {
    const int n = cp.n(), m = cp.m();
    if (m < 1) throw std::invalid_argument("decomposition requires m >= 1");
    const std::int64_t r = ctx.q - 1;
    if (cp.a_exps[static_cast<size_t>(n - 1)] % r != 0 || cp.b_exps[static_cast<size_t>(m - 1)] % r != 0)
        throw std::invalid_argument("decomposition requires trivial chi_n and rho_m");
    PadicElement lhs = hyp_sum(ctx, cp, la, ext).padic;

    CharParams inner = cp;
    inner.a_exps.pop_back();
    inner.b_exps.pop_back();
    std::int64_t qext = 1;
    for (int i = 0; i < ext; ++i) qext *= ctx.q;
    PadicElement rhs = mul(padic_from_int(ctx.ring, qext), hyp_sum(ctx, inner, la, ext).padic);

    PadicElement prod = padic_one(ctx.ring);
    for (int i = 0; i < n - 1; ++i)
        prod = mul(prod, gauss_sum_ext(ctx, -cp.a_exps[static_cast<size_t>(i)], ext));
    // rho_j(-1) over F_{q^ext} is omega(Nm(-1))^{b_j} = (-1)^{b_j ext}
    int sign = 1;
    for (int j = 0; j < m - 1; ++j) {
        std::int64_t b = ((cp.b_exps[static_cast<size_t>(j)] % r) + r) % r;
        prod = mul(prod, gauss_sum_ext(ctx, b, ext));
        if ((b * ext) % 2 != 0) sign = -sign;
    }
    if (sign > 0)
        rhs = sub(rhs, prod);
    else
        rhs = add(rhs, prod);
    return equal_to_precision(lhs, rhs);
}

/// Complex embedding of a count grid (any fixed embedding; only the
/// modulus is consumed by the archimedean smoke test).
inline std::complex<double> complex_value(const SumContext& ctx, const SumValue& v) {
    const std::int64_t r = ctx.q - 1;
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> acc = 0;
    for (std::int64_t t = 0; t < ctx.p; ++t)
        for (std::int64_t E = 0; E < r; ++E) {
            std::int64_t c = v.counts[static_cast<size_t>(t * r + E)];
            if (!c) continue;
            double ang = tau * (static_cast<double>(t) / static_cast<double>(ctx.p) +
                                static_cast<double>(E) / static_cast<double>(r));
            acc += static_cast<double>(c) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    return acc;
}

/// Shared class-table kernel: one pass over the free-variable logs per
/// (shape, extension) serves every character tuple and fiber. Counts are
/// aggregated on (fiber-independent constraint residue, partial trace,
/// per-variable classes mod q-1) and folded per fiber.
class SweepKernel {
public:
    int n = 0, m = 0, e = 1;
    std::int64_t Q = 0, r = 0, p = 0;
    int Fv = 0;
    std::int64_t rF = 1;

    static SweepKernel build(const SumContext& ctx, int n, int m, int e) {
        SweepKernel K;
        K.n = n;
        K.m = m;
        K.e = e;
        K.p = ctx.p;
        K.r = ctx.q - 1;
        const ExtData& X = ctx.exts[static_cast<size_t>(e - 1)];
        K.Q = X.Q;
        K.Fv = n + m - 1;
        for (int i = 0; i < K.Fv; ++i) K.rF *= K.r;

        const std::int64_t nu = K.Q / K.r;
        if (K.Fv == 0) {
            // rank-1 shape: x_1 is forced, nothing to tabulate
            K.solo_tr.resize(static_cast<size_t>(K.r));
            K.solo_lam.resize(static_cast<size_t>(K.r));
            for (std::int64_t la = 0; la < K.r; ++la) {
                std::int64_t l1 = static_cast<std::int64_t>((__int128)nu * ((X.delta_inv * la) % K.r) % K.Q);
                K.solo_tr[static_cast<size_t>(la)] = X.tr[static_cast<size_t>(l1)];
                K.solo_lam[static_cast<size_t>(la)] = (X.delta * (l1 % K.r)) % K.r;
            }
            return K;
        }

        // build U[(c' * p + tau0) * rF + kappa]
        double ucells = static_cast<double>(K.Q) * static_cast<double>(K.p) * static_cast<double>(K.rF);
        if (ucells * 4 > static_cast<double>(ctx.budgets.kernel_bytes))
            throw resource_error("kernel table budget exceeded");
        std::vector<std::uint32_t> U(static_cast<size_t>(ucells), 0);

        double direct_cost = 1;
        for (int i = 0; i < K.Fv; ++i) direct_cost *= static_cast<double>(K.Q);
        auto classify = [&X, &K](std::int64_t l) { return (X.delta * (l % K.r)) % K.r; };
        if (K.Fv == 1 || direct_cost <= ctx.budgets.direct_build_limit) {
            if (direct_cost > ctx.budgets.kernel_build_limit)
                throw resource_error("kernel build budget exceeded");
            std::vector<std::int64_t> logv(static_cast<size_t>(K.Fv), 0);
            while (true) {
                std::int64_t sc = 0, st = 0, kappa = 0;
                for (int v = 0; v < K.Fv; ++v) {
                    std::int64_t l = logv[static_cast<size_t>(v)];
                    if (v < n - 1) {
                        sc -= l;
                        st += X.tr[static_cast<size_t>(l)];
                    } else {
                        sc += l;
                        st -= X.tr[static_cast<size_t>(l)];
                    }
                    kappa = kappa * K.r + classify(l);
                }
                sc = ((sc % K.Q) + K.Q) % K.Q;
                st = ((st % K.p) + K.p) % K.p;
                ++U[static_cast<size_t>((sc * K.p + st) * K.rF + kappa)];
                int v = K.Fv - 1;  // fastest digit = least significant kappa digit
                while (v >= 0) {
                    if (++logv[static_cast<size_t>(v)] < K.Q) break;
                    logv[static_cast<size_t>(v)] = 0;
                    --v;
                }
                if (v < 0) break;
            }
        } else {
            // staged: tabulate vars 1..Fv-1 then expand var 0 (x_2)
            double stage1 = direct_cost / static_cast<double>(K.Q);
            std::int64_t rFlow = K.rF / K.r;
            double stage2 = static_cast<double>(K.Q) * static_cast<double>(K.Q) *
                            static_cast<double>(K.p) * static_cast<double>(rFlow);
            if (stage1 > ctx.budgets.kernel_build_limit || stage2 > ctx.budgets.kernel_build_limit)
                throw resource_error("kernel build budget exceeded");
            std::vector<std::uint32_t> S(static_cast<size_t>(K.Q) * static_cast<size_t>(K.p) *
                                             static_cast<size_t>(rFlow),
                                         0);
            std::vector<std::int64_t> logv(static_cast<size_t>(K.Fv - 1), 0);
            while (true) {
                std::int64_t sc = 0, st = 0, kappa = 0;
                for (int v = 1; v < K.Fv; ++v) {
                    std::int64_t l = logv[static_cast<size_t>(v - 1)];
                    if (v < n - 1) {
                        sc -= l;
                        st += X.tr[static_cast<size_t>(l)];
                    } else {
                        sc += l;
                        st -= X.tr[static_cast<size_t>(l)];
                    }
                    kappa = kappa * K.r + classify(l);
                }
                sc = ((sc % K.Q) + K.Q) % K.Q;
                st = ((st % K.p) + K.p) % K.p;
                ++S[static_cast<size_t>((sc * K.p + st) * rFlow + kappa)];
                int v = K.Fv - 2;
                while (v >= 0) {
                    if (++logv[static_cast<size_t>(v)] < K.Q) break;
                    logv[static_cast<size_t>(v)] = 0;
                    --v;
                }
                if (v < 0) break;
            }
            // var 0 is x_2 (n >= 2 whenever Fv >= 2 and m < n; otherwise y_1)
            const bool xvar = (n >= 2);
            for (std::int64_t l = 0; l < K.Q; ++l) {
                const std::int64_t lam = classify(l);
                const std::int64_t tc = X.tr[static_cast<size_t>(l)];
                for (std::int64_t cpp = 0; cpp < K.Q; ++cpp) {
                    std::int64_t sc = xvar ? (cpp - l) : (cpp + l);
                    sc = ((sc % K.Q) + K.Q) % K.Q;
                    for (std::int64_t tau = 0; tau < K.p; ++tau) {
                        std::int64_t st = xvar ? (tau + tc) : (tau - tc + K.p);
                        st %= K.p;
                        std::uint32_t* dst =
                            &U[static_cast<size_t>((sc * K.p + st) * K.rF + lam * rFlow)];
                        const std::uint32_t* src = &S[static_cast<size_t>((cpp * K.p + tau) * rFlow)];
                        for (std::int64_t kk = 0; kk < rFlow; ++kk) dst[kk] += src[kk];
                    }
                }
            }
        }

        // fold fibers: T[la][t][kappa]
        K.T.assign(static_cast<size_t>(K.r) * static_cast<size_t>(K.p) * static_cast<size_t>(K.rF), 0);
        for (std::int64_t la = 0; la < K.r; ++la) {
            std::int64_t base_l1 = static_cast<std::int64_t>((__int128)nu * ((X.delta_inv * la) % K.r) % K.Q);
            std::uint64_t* Trow = &K.T[static_cast<size_t>(la) * static_cast<size_t>(K.p) *
                                       static_cast<size_t>(K.rF)];
            for (std::int64_t cc = 0; cc < K.Q; ++cc) {
                std::int64_t t0 = X.tr[static_cast<size_t>((base_l1 + cc) % K.Q)];
                for (std::int64_t tau = 0; tau < K.p; ++tau) {
                    std::int64_t t = (tau + t0) % K.p;
                    const std::uint32_t* src = &U[static_cast<size_t>((cc * K.p + tau) * K.rF)];
                    std::uint64_t* dst = &Trow[static_cast<size_t>(t * K.rF)];
                    for (std::int64_t kk = 0; kk < K.rF; ++kk) dst[kk] += src[kk];
                }
            }
        }
        // class digits and the forced lambda_1 per (fiber, kappa)
        K.digits.assign(static_cast<size_t>(K.Fv) * static_cast<size_t>(K.rF), 0);
        for (std::int64_t kap = 0; kap < K.rF; ++kap) {
            std::int64_t c = kap;
            for (int v = K.Fv - 1; v >= 0; --v) {
                K.digits[static_cast<size_t>(v) * static_cast<size_t>(K.rF) + kap] =
                    static_cast<std::int16_t>(c % K.r);
                c /= K.r;
            }
        }
        K.lam1.assign(static_cast<size_t>(K.r) * static_cast<size_t>(K.rF), 0);
        for (std::int64_t la = 0; la < K.r; ++la)
            for (std::int64_t kap = 0; kap < K.rF; ++kap) {
                std::int64_t acc = (static_cast<std::int64_t>(e % K.r) * la) % K.r;
                for (int v = 0; v < K.Fv; ++v) {
                    std::int64_t d = K.digits[static_cast<size_t>(v) * static_cast<size_t>(K.rF) + kap];
                    if (v < n - 1)
                        acc -= d;
                    else
                        acc += d;
                }
                K.lam1[static_cast<size_t>(la) * static_cast<size_t>(K.rF) + kap] =
                    static_cast<std::int16_t>(((acc % K.r) + K.r) % K.r);
            }
        return K;
    }

    /// Count grid for one character tuple at one fiber.
    std::vector<std::int64_t> query(const std::vector<std::int64_t>& a_exps,
                                    const std::vector<std::int64_t>& b_exps,
                                    std::int64_t la) const {
        std::vector<std::int64_t> counts(static_cast<size_t>(p * r), 0);
        std::vector<std::int64_t> a_mod(a_exps), b_mod(b_exps);
        for (auto& v : a_mod) v = ((v % r) + r) % r;
        for (auto& v : b_mod) v = ((v % r) + r) % r;
        if (Fv == 0) {
            std::int64_t t = solo_tr[static_cast<size_t>(la)];
            std::int64_t E = (a_mod[0] * solo_lam[static_cast<size_t>(la)]) % r;
            counts[static_cast<size_t>(t * r + E)] = 1;
            return counts;
        }
        const std::uint64_t* Trow =
            &T[static_cast<size_t>(la) * static_cast<size_t>(p) * static_cast<size_t>(rF)];
        const std::int16_t* lam1row = &lam1[static_cast<size_t>(la) * static_cast<size_t>(rF)];
        for (std::int64_t kap = 0; kap < rF; ++kap) {
            std::int64_t E = a_mod[0] * lam1row[kap];
            for (int v = 0; v < Fv; ++v) {
                std::int64_t d = digits[static_cast<size_t>(v) * static_cast<size_t>(rF) + kap];
                if (v < n - 1)
                    E += a_mod[static_cast<size_t>(v + 1)] * d;
                else
                    E += (r - b_mod[static_cast<size_t>(v - (n - 1))]) * d;
            }
            E %= r;
            for (std::int64_t t = 0; t < p; ++t) {
                std::uint64_t c = Trow[static_cast<size_t>(t * rF + kap)];
                if (c) counts[static_cast<size_t>(t * r + E)] += static_cast<std::int64_t>(c);
            }
        }
        return counts;
    }

private:
    std::vector<std::uint64_t> T;
    std::vector<std::int16_t> digits;
    std::vector<std::int16_t> lam1;
    std::vector<std::int64_t> solo_tr, solo_lam;
};

}  // namespace hypnp
