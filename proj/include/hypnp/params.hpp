#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace hypnp {

struct invalid_shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Defining data of a hypergeometric connection: two nondecreasing
/// sequences of rationals in [0,1) with |alpha| >= |beta|.
struct HypParams {
    int n = 0;
    int m = 0;
    std::vector<Rat> alpha;
    std::vector<Rat> beta;
};

/// Canonicalize raw parameter sequences: reduce each entry to its
/// fractional part, sort, and label the longer sequence alpha.
inline HypParams normalize(std::vector<Rat> alpha_raw, std::vector<Rat> beta_raw) {
    if (alpha_raw.size() < beta_raw.size()) std::swap(alpha_raw, beta_raw);
    HypParams p;
    p.alpha.reserve(alpha_raw.size());
    p.beta.reserve(beta_raw.size());
    for (const auto& x : alpha_raw) p.alpha.push_back(frac_part(x));
    for (const auto& x : beta_raw) p.beta.push_back(frac_part(x));
    std::sort(p.alpha.begin(), p.alpha.end());
    std::sort(p.beta.begin(), p.beta.end());
    p.n = static_cast<int>(p.alpha.size());
    p.m = static_cast<int>(p.beta.size());
    if (p.n < 1) throw invalid_shape_error("need at least one alpha parameter");
    return p;
}

inline bool is_nonresonant(const HypParams& p) {
    for (const auto& a : p.alpha)
        for (const auto& b : p.beta)
            if (a == b) return false;
    return true;
}

/// Dual parameters (alpha-bar, beta-bar): alpha-bar_k = 0 for k <= t,
/// 1 - alpha_{n+t+1-k} for k > t, where t = #{k : alpha_k = 0};
/// beta-bar_k = 1 - beta_k, reduced mod Z.
inline HypParams conjugate(const HypParams& p) {
    std::vector<Rat> a, b;
    int t = 0;
    while (t < p.n && p.alpha[t] == 0) ++t;
    for (int k = 1; k <= p.n; ++k) {
        if (k <= t)
            a.push_back(Rat(0));
        else
            a.push_back(Rat(1) - p.alpha[p.n + t - k]);  // 0-based index n+t+1-k
    }
    for (const auto& x : p.beta) b.push_back(frac_part(Rat(1) - x));
    return normalize(std::move(a), std::move(b));
}

/// Multiply every parameter by `prime` mod Z (the action on character
/// exponents induced by d -> pd mod q-1).
inline HypParams frobenius_twist(const HypParams& p, const Int& prime) {
    std::vector<Rat> a, b;
    for (const auto& x : p.alpha) a.push_back(frac_part(Rat(prime) * x));
    for (const auto& x : p.beta) b.push_back(frac_part(Rat(prime) * x));
    return normalize(std::move(a), std::move(b));
}

/// Least common denominator of all parameters.
inline Int common_denominator(const HypParams& p) {
    Int d = 1;
    auto fold = [&d](const std::vector<Rat>& v) {
        for (const auto& x : v) d = boost::multiprecision::lcm(d, rat_den(x));
    };
    fold(p.alpha);
    fold(p.beta);
    return d;
}

/// Multiplicative character data over F_q, q = p^s: chi_i = omega^{a_i},
/// rho_j = omega^{b_j} for the Teichmueller character omega.
struct CharParams {
    std::int64_t p = 0;
    int s = 1;
    std::vector<std::int64_t> a_exps;
    std::vector<std::int64_t> b_exps;

    int n() const { return static_cast<int>(a_exps.size()); }
    int m() const { return static_cast<int>(b_exps.size()); }
    std::int64_t q() const {
        std::int64_t r = 1;
        for (int i = 0; i < s; ++i) r *= p;
        return r;
    }
    HypParams to_hyp_params() const {
        std::vector<Rat> a, b;
        const Int qm1 = q() - 1;
        for (auto e : a_exps) a.emplace_back(Int(e), qm1);
        for (auto e : b_exps) b.emplace_back(Int(e), qm1);
        return normalize(std::move(a), std::move(b));
    }
};

/// Exponents of a normalized HypParams with denominators dividing q-1.
inline CharParams char_params_from(const HypParams& hp, std::int64_t p, int s) {
    CharParams cp;
    cp.p = p;
    cp.s = s;
    const Int qm1 = cp.q() - 1;
    auto to_exp = [&qm1](const Rat& x) {
        Rat e = x * Rat(qm1);
        if (rat_den(e) != 1)
            throw std::invalid_argument("parameter denominator does not divide q-1");
        return static_cast<std::int64_t>(rat_num(e));
    };
    for (const auto& x : hp.alpha) cp.a_exps.push_back(to_exp(x));
    for (const auto& x : hp.beta) cp.b_exps.push_back(to_exp(x));
    return cp;
}

}  // namespace hypnp
