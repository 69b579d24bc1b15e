#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "charsum.hpp"
#include "hodge.hpp"
#include "params.hpp"
#include "polygon.hpp"

namespace hypnp {

/// pi-adic working precision: enough for coefficient valuations up to
/// ceil(sum theta) plus Newton-identity division losses and a guard.
inline int default_precision(const HypParams& hp, std::int64_t p, int s) {
    Rat st(0);
    for (const auto& t : theta(hp)) st += t;
    Int ceil_st = rat_floor(st);
    if (ceil_st < st) ceil_st += 1;
    int M = s * static_cast<int>(p - 1) *
            (static_cast<int>(ceil_st) + hp.n + 2);
    if (p <= hp.n) {
        int vp = 0;  // ord_p(n!)
        for (std::int64_t pk = p; pk <= hp.n; pk *= p) vp += hp.n / static_cast<int>(pk);
        M += s * static_cast<int>(p - 1) * (vp + 1);
    }
    return M;
}

/// Worst-case precision for a whole sweep shape (sum theta <= n(n+m-1)).
inline int sweep_precision(std::int64_t p, int s, int n, int m) {
    int M = s * static_cast<int>(p - 1) * (n * (n + m - 1) + n + 2);
    if (p <= n) {
        int vp = 0;
        for (std::int64_t pk = p; pk <= n; pk *= p) vp += n / static_cast<int>(pk);
        M += s * static_cast<int>(p - 1) * (vp + 1);
    }
    return M;
}

/// Elementary symmetric functions e_1..e_n from the power sums
/// t_j = eps * N_j via Newton's identities.
inline std::vector<PadicElement> newton_charpoly(const PadicRing& R,
                                                 const std::vector<PadicElement>& traces,
                                                 int eps) {
    const int n = static_cast<int>(traces.size());
    std::vector<PadicElement> t;
    for (const auto& N : traces) t.push_back(eps < 0 ? neg(N) : N);
    std::vector<PadicElement> e;
    e.push_back(padic_one(R));
    for (int k = 1; k <= n; ++k) {
        PadicElement acc = padic_zero(R);
        for (int i = 1; i <= k; ++i) {
            PadicElement term = mul(e[static_cast<size_t>(k - i)], t[static_cast<size_t>(i - 1)]);
            if (i % 2 == 1)
                acc = add(acc, term);
            else
                acc = sub(acc, term);
        }
        e.push_back(div_exact_int(acc, k));
    }
    e.erase(e.begin());
    return e;
}

/// e_1..e_n of the fiberwise Frobenius at a = gamma^la.
inline std::vector<PadicElement> char_poly(const SumContext& ctx, const CharParams& cp,
                                           std::int64_t la) {
    const int n = cp.n(), m = cp.m();
    std::vector<PadicElement> traces;
    for (int j = 1; j <= n; ++j) traces.push_back(hyp_sum(ctx, cp, la, j).padic);
    const int eps = ((n + m - 1) % 2 == 0) ? +1 : -1;
    return newton_charpoly(ctx.ring, traces, eps);
}

/// Lower hull of (k, ords[k]); all ordinates known.
inline Polygon newton_polygon(const std::vector<Rat>& ords) { return Polygon::lower_hull(ords); }

/// Hull where some coefficients vanish to precision: such a point only
/// carries the lower bound ords >= bound, and is admissible when the
/// bound keeps it on or above the hull of the known points.
inline Polygon newton_polygon_bounded(const std::vector<std::optional<Rat>>& ords,
                                      const std::vector<Rat>& bounds) {
    const int n = static_cast<int>(ords.size()) - 1;
    if (!ords[0] || !ords[static_cast<size_t>(n)])
        throw precision_error("polygon endpoint vanishes to working precision");
    // hull over known points, tracked by abscissa
    std::vector<std::pair<int, Rat>> pts;
    for (int k = 0; k <= n; ++k)
        if (ords[static_cast<size_t>(k)]) pts.emplace_back(k, *ords[static_cast<size_t>(k)]);
    std::vector<std::pair<int, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            Rat cross = Rat(b.first - a.first) * (pt.second - a.second) -
                        Rat(pt.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    auto hull_height = [&hull](int k) {
        for (size_t i = 1; i < hull.size(); ++i)
            if (k <= hull[i].first) {
                const auto& a = hull[i - 1];
                const auto& b = hull[i];
                return a.second + (b.second - a.second) * Rat(k - a.first) / Rat(b.first - a.first);
            }
        return hull.back().second;
    };
    std::vector<Rat> slopes;
    for (size_t i = 1; i < hull.size(); ++i) {
        Rat sl = (hull[i].second - hull[i - 1].second) / Rat(hull[i].first - hull[i - 1].first);
        for (int k = hull[i - 1].first; k < hull[i].first; ++k) slopes.push_back(sl);
    }
    for (int k = 0; k <= n; ++k)
        if (!ords[static_cast<size_t>(k)] && bounds[static_cast<size_t>(k)] < hull_height(k))
            throw precision_error("vanishing coefficient could cut the hull; raise precision");
    return Polygon::from_slopes(std::move(slopes));
}

struct FrobeniusReport {
    CharParams params;
    std::int64_t point_log = 0;
    std::int64_t point_code = 0;
    std::vector<std::optional<Rat>> trace_ords;     // ord_q N_j, j = 1..n
    int epsilon = 1;
    std::vector<std::optional<Rat>> charpoly_ords;  // ord_q e_k, k = 0..n
    Polygon newton_polygon;
    Polygon hodge_polygon;
    std::string verdict;  // ordinary | newton-above-hodge | precision-fail
    bool resonant = false;
    bool experimental = false;
    int precision_used = 0;
    std::string note;
};

/// Assemble the fiberwise report from already-computed traces.
inline FrobeniusReport assemble_report(const SumContext& ctx, const CharParams& cp,
                                       std::int64_t la,
                                       const std::vector<PadicElement>& traces) {
    const int n = cp.n(), m = cp.m();
    FrobeniusReport rep;
    rep.params = cp;
    rep.point_log = la;
    rep.point_code = ctx.base.exp_of(la);
    rep.epsilon = ((n + m - 1) % 2 == 0) ? +1 : -1;
    rep.precision_used = ctx.ring.M;
    HypParams hp = cp.to_hyp_params();
    rep.resonant = !is_nonresonant(hp);
    AsHodgeResult ah = as_hodge_polygon(hp, Int(ctx.p), ctx.s);
    rep.hodge_polygon = ah.polygon;
    rep.experimental = ah.experimental;
    for (const auto& N : traces)
        rep.trace_ords.push_back(is_zero_to_precision(N) ? std::optional<Rat>{}
                                                         : std::optional<Rat>{ord_q(N)});
    try {
        std::vector<PadicElement> e = newton_charpoly(ctx.ring, traces, rep.epsilon);
        std::vector<std::optional<Rat>> ords;
        std::vector<Rat> bounds;
        ords.emplace_back(Rat(0));
        bounds.emplace_back(Rat(0));
        const Int norm = Int(ctx.s) * Int(ctx.p - 1);
        for (const auto& ek : e) {
            if (is_zero_to_precision(ek))
                ords.emplace_back(std::nullopt);
            else
                ords.emplace_back(ord_q(ek));
            bounds.emplace_back(Rat(Int(ek.prec), norm));
        }
        rep.charpoly_ords = ords;
        rep.newton_polygon = newton_polygon_bounded(ords, bounds);
        // sign-convention guard: endpoints must coincide (Thm 4.4 scope: s = 1)
        if (ctx.s == 1 && !rep.resonant && ords[static_cast<size_t>(n)] &&
            *ords[static_cast<size_t>(n)] != rep.hodge_polygon.height(n))
            throw std::logic_error("sign convention violated: ord(e_n) != sum theta");
        if (rep.newton_polygon == rep.hodge_polygon) {
            rep.verdict = "ordinary";
        } else {
            rep.verdict = "newton-above-hodge";
            if (ctx.s == 1 && !rep.resonant &&
                !rep.newton_polygon.lies_on_or_above(rep.hodge_polygon))
                throw std::logic_error("Newton polygon below Hodge polygon: implementation bug");
        }
    } catch (const precision_error& ex) {
        rep.verdict = "precision-fail";
        rep.note = ex.what();
    }
    return rep;
}

/// Full pipeline at one fiber via direct summation.
inline FrobeniusReport compare(const SumContext& ctx, const CharParams& cp, std::int64_t la) {
    std::vector<PadicElement> traces;
    for (int j = 1; j <= cp.n(); ++j) traces.push_back(hyp_sum(ctx, cp, la, j).padic);
    return assemble_report(ctx, cp, la, traces);
}

/// Batch verification over all non-resonant tuples with orders dividing
/// p-1 and all fibers, for all shapes n <= nmax, m <= min(mmax, n-1);
/// s = 1. Shared class tables make the tuple sweep cheap.
inline std::vector<FrobeniusReport> sweep(std::int64_t p, int nmax, int mmax,
                                          SumBudgets budgets = {},
                                          int precision_override = 0) {
    std::vector<FrobeniusReport> rows;
    int M = precision_override;
    if (M <= 0)
        for (int n = 1; n <= nmax; ++n)
            for (int m = 0; m <= std::min(mmax, n - 1); ++m)
                M = std::max(M, sweep_precision(p, 1, n, m));
    SumContext ctx = SumContext::make(p, 1, nmax, M, budgets);
    const std::int64_t r = p - 1;

    for (int n = 1; n <= nmax; ++n) {
        for (int m = 0; m <= std::min(mmax, n - 1); ++m) {
            std::vector<SweepKernel> kernels;
            for (int e = 1; e <= n; ++e) kernels.push_back(SweepKernel::build(ctx, n, m, e));
            // nondecreasing exponent tuples
            std::vector<std::int64_t> a(static_cast<size_t>(n), 0), b(static_cast<size_t>(m), 0);
            auto advance = [&r](std::vector<std::int64_t>& v) {
                int i = static_cast<int>(v.size()) - 1;
                while (i >= 0 && v[static_cast<size_t>(i)] == r - 1) --i;
                if (i < 0) return false;
                std::int64_t nv = v[static_cast<size_t>(i)] + 1;
                for (size_t j = static_cast<size_t>(i); j < v.size(); ++j) v[j] = nv;
                return true;
            };
            bool more_a = true;
            while (more_a) {
                std::fill(b.begin(), b.end(), 0);
                bool more_b = true;
                while (more_b) {
                    bool resonant = false;
                    for (auto ai : a)
                        for (auto bj : b)
                            if (ai == bj) resonant = true;
                    if (!resonant) {
                        CharParams cp;
                        cp.p = p;
                        cp.s = 1;
                        cp.a_exps = a;
                        cp.b_exps = b;
                        for (std::int64_t la = 0; la < r; ++la) {
                            std::vector<PadicElement> traces;
                            for (int e = 1; e <= n; ++e)
                                traces.push_back(ctx.evaluate_counts(
                                    kernels[static_cast<size_t>(e - 1)].query(a, b, la)));
                            rows.push_back(assemble_report(ctx, cp, la, traces));
                        }
                    }
                    more_b = !b.empty() && advance(b);
                    if (b.empty()) more_b = false;
                }
                more_a = advance(a);
            }
        }
    }
    return rows;
}

}  // namespace hypnp
