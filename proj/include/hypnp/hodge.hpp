#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "params.hpp"
#include "polygon.hpp"

namespace hypnp {

/// Irregular Hodge numbers theta(k), k = 1..n:
/// theta(k) = (n-m) alpha_k + #{i : beta_i < alpha_k} + (n-k)
///            - sum(alpha) + sum(beta).
inline std::vector<Rat> theta(const HypParams& p) {
    Rat sum_a(0), sum_b(0);
    for (const auto& x : p.alpha) sum_a += x;
    for (const auto& x : p.beta) sum_b += x;
    std::vector<Rat> th;
    th.reserve(p.n);
    for (int k = 1; k <= p.n; ++k) {
        const Rat& ak = p.alpha[k - 1];
        int below = 0;
        for (const auto& b : p.beta)
            if (b < ak) ++below;
        th.push_back(Rat(p.n - p.m) * ak + Rat(below) + Rat(p.n - k) - sum_a + sum_b);
    }
    return th;
}

inline Polygon irregular_hodge_polygon(const HypParams& p) {
    return Polygon::from_slopes(theta(p));
}

/// Multiset identity {theta(k)} = {n+m-1 - theta_bar(k)} for the
/// conjugate parameters.
inline bool duality_pairing(const HypParams& p) {
    auto th = theta(p);
    auto th_bar = theta(conjugate(p));
    const Rat top(p.n + p.m - 1);
    for (auto& x : th_bar) x = top - x;
    std::sort(th.begin(), th.end());
    std::sort(th_bar.begin(), th_bar.end());
    return th == th_bar;
}

struct AsHodgeResult {
    Polygon polygon;
    /// Sorted theta multiset of each Frobenius-orbit member.
    std::vector<std::vector<Rat>> orbit_thetas;
    bool resonant_warning = false;
    /// Orbit averaging for s > 1 extrapolates the weight/theta
    /// identification beyond the s = 1 case; treat with care.
    bool experimental = false;
};

/// Hodge polygon with Frobenius-orbit averaging: slopes are the
/// entrywise averages of the sorted theta multisets along the orbit
/// p, p^2, ..., p^s of the parameters.
inline AsHodgeResult as_hodge_polygon(const HypParams& p, const Int& prime, int s) {
    Int qm1 = 1;
    for (int i = 0; i < s; ++i) qm1 *= prime;
    qm1 -= 1;
    if (common_denominator(p) == 0 || qm1 % common_denominator(p) != 0)
        throw std::invalid_argument("parameter denominators must divide prime^s - 1");

    AsHodgeResult res;
    res.resonant_warning = !is_nonresonant(p);
    res.experimental = (s > 1);
    HypParams cur = p;
    std::vector<Rat> acc(p.n, Rat(0));
    for (int i = 0; i < s; ++i) {
        auto th = theta(cur);
        std::sort(th.begin(), th.end());
        for (int k = 0; k < p.n; ++k) acc[k] += th[k];
        res.orbit_thetas.push_back(std::move(th));
        cur = frobenius_twist(cur, prime);
    }
    for (auto& x : acc) x /= Rat(s);
    res.polygon = Polygon::from_slopes(std::move(acc));
    return res;
}

}  // namespace hypnp
