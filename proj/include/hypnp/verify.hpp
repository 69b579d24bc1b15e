#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "charsum.hpp"
#include "frobenius.hpp"
#include "hodge.hpp"
#include "params.hpp"
#include "polytope.hpp"

namespace hypnp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline HypParams sample_params(std::mt19937_64& rng, int max_total, int max_den,
                               bool alpha1_zero) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total - 1));
        int mcap = std::min(n, max_total - n);
        int m = static_cast<int>(rng() % static_cast<std::uint64_t>(mcap + 1));
        std::vector<Rat> a, b;
        for (int i = 0; i < n; ++i) {
            if (i == 0 && alpha1_zero) {
                a.emplace_back(0);
                continue;
            }
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den));
            a.emplace_back(Int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d))), Int(d));
        }
        for (int j = 0; j < m; ++j) {
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den));
            b.emplace_back(Int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d))), Int(d));
        }
        HypParams hp = normalize(std::move(a), std::move(b));
        if (!is_nonresonant(hp)) continue;
        if (alpha1_zero && hp.alpha[0] != 0) continue;
        if (alpha1_zero && hp.m > hp.n) continue;
        return hp;
    }
    throw std::logic_error("sampling failed to produce admissible parameters");
}

}  // namespace detail

/// Criterion 1: Newton = Hodge over the full desk-scale sweep.
inline CheckResult check_newton_equals_hodge(const SumBudgets& budgets) {
    CheckResult res{"newton-equals-hodge-sweep", true, ""};
    int total = 0, ordinary = 0;
    for (std::int64_t p : {3, 5, 7}) {
        auto rows = sweep(p, 3, 2, budgets);
        for (const auto& r : rows) {
            ++total;
            if (r.verdict == "ordinary")
                ++ordinary;
            else
                res.pass = false;
        }
    }
    res.detail = std::to_string(ordinary) + "/" + std::to_string(total) + " fibers ordinary";
    return res;
}

/// Criterion 2: Kloosterman slopes {0,...,n-1} everywhere.
inline CheckResult check_kloosterman(const SumBudgets& budgets) {
    CheckResult res{"kloosterman-ordinary", true, ""};
    int fibers = 0;
    for (std::int64_t p : {5, 7, 11}) {
        for (int n : {2, 3}) {
            CharParams cp;
            cp.p = p;
            cp.s = 1;
            cp.a_exps.assign(static_cast<size_t>(n), 0);
            HypParams hp = cp.to_hyp_params();
            SumContext ctx = SumContext::make(p, 1, n, default_precision(hp, p, 1), budgets);
            std::vector<Rat> expect;
            for (int k = 0; k < n; ++k) expect.emplace_back(k);
            Polygon want = Polygon::from_slopes(expect);
            for (std::int64_t la = 0; la < p - 1; ++la) {
                FrobeniusReport rep = compare(ctx, cp, la);
                ++fibers;
                if (rep.verdict != "ordinary" || rep.newton_polygon != want) res.pass = false;
            }
        }
    }
    res.detail = std::to_string(fibers) + " fibers checked";
    return res;
}

/// Criterion 3: ord_q G(psi, omega^{-k}) = k/(p-1).
inline CheckResult check_stickelberger() {
    CheckResult res{"stickelberger", true, ""};
    int cases = 0;
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        FqField F = build_field(p, 1);
        PadicRing R = PadicRing::make(p, 1, 3 * static_cast<int>(p - 1));
        for (std::int64_t k = 0; k <= p - 2; ++k) {
            ++cases;
            if (ord_q(gauss_sum(R, F, k)) != Rat(Int(k), Int(p - 1))) res.pass = false;
        }
    }
    res.detail = std::to_string(cases) + " Gauss sums checked";
    return res;
}

/// Criterion 4: multiset {n+m-1 - weight(g_{r,l})} = multiset {theta(k)}.
inline CheckResult check_weight_theta(std::uint64_t seed) {
    CheckResult res{"weight-theta-identity", true, ""};
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 200; ++it) {
        HypParams hp = detail::sample_params(rng, 8, 24, true);
        Int d = common_denominator(hp);
        auto basis = basis_exponents(hp, static_cast<std::int64_t>(d));
        std::vector<Rat> lhs, rhs = theta(hp);
        for (const auto& be : basis) lhs.push_back(Rat(hp.n + hp.m - 1) - be.weight);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) {
            res.pass = false;
            break;
        }
    }
    res.detail = "200 samples";
    return res;
}

/// Criterion 5: multiset {theta} = {n+m-1 - theta-bar}.
inline CheckResult check_duality(std::uint64_t seed) {
    CheckResult res{"duality", true, ""};
    std::mt19937_64 rng(seed + 1);
    for (int it = 0; it < 500; ++it) {
        HypParams hp = detail::sample_params(rng, 8, 24, false);
        if (!duality_pairing(hp)) {
            res.pass = false;
            break;
        }
    }
    res.detail = "500 samples";
    return res;
}

/// Criterion 6: alpha=(0,0,0,0), beta=(1/5,...,4/5) has slopes (2,3,4,5).
inline CheckResult check_remark_ii() {
    CheckResult res{"remark-ii-hodge", true, ""};
    HypParams hp = normalize({Rat(0), Rat(0), Rat(0), Rat(0)},
                             {Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)});
    Polygon got = irregular_hodge_polygon(hp);
    Polygon want = Polygon::from_slopes({Rat(2), Rat(3), Rat(4), Rat(5)});
    res.pass = (got == want);
    res.detail = "slopes " + [&got] {
        std::string s;
        for (const auto& x : got.slopes()) s += rat_str(x) + " ";
        return s;
    }();
    return res;
}

/// Criterion 7: section-4.2 decomposition identity in W.
inline CheckResult check_resonant_decomposition(const SumBudgets& budgets) {
    CheckResult res{"resonant-decomposition", true, ""};
    int cases = 0;
    for (std::int64_t p : {3, 5, 7}) {
        SumContext ctx = SumContext::make(p, 1, 1, 8 * static_cast<int>(p - 1), budgets);
        const std::int64_t r = p - 1;
        struct Shape {
            std::vector<std::int64_t> a, b;
        };
        std::vector<Shape> shapes = {
            {{0, 0}, {0}},          {{1 % r, 0}, {0}},
            {{0, 0, 0}, {0}},       {{1 % r, (2 % r), 0}, {0}},
            {{0, 0, 0}, {0, 0}},    {{1 % r, (2 % r), 0}, {1 % r, 0}},
        };
        for (const auto& sh : shapes) {
            CharParams cp;
            cp.p = p;
            cp.s = 1;
            cp.a_exps = sh.a;
            cp.b_exps = sh.b;
            for (std::int64_t la = 0; la < r; ++la) {
                ++cases;
                if (!resonant_decomposition_check(ctx, cp, la, 1)) res.pass = false;
            }
        }
    }
    res.detail = std::to_string(cases) + " identities checked";
    return res;
}

/// Criterion 8: closed-form volume equals the lattice-count estimate.
inline CheckResult check_volume_oracle() {
    CheckResult res{"volume-oracle", true, ""};
    int cases = 0;
    for (auto [n, m] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 0}}) {
        for (std::int64_t d : {1, 2}) {
            ++cases;
            FacetSystem fs = build_facets(n, m, d);
            if (lattice_count_volume_check(fs, fs.dim() + 3) != volume(n, m, d)) res.pass = false;
        }
    }
    res.detail = std::to_string(cases) + " shapes checked";
    return res;
}

/// Criterion 9: facet invariant factors all equal p-1.
inline CheckResult check_wan_certificates() {
    CheckResult res{"wan-certificates", true, ""};
    int cases = 0;
    for (std::int64_t p : {3, 5, 7})
        for (auto [n, m] : std::vector<std::pair<int, int>>{
                 {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1}, {3, 1}, {4, 1}, {3, 2}}) {
            ++cases;
            if (!wan_certificate_holds(n, m, p)) res.pass = false;
        }
    res.detail = std::to_string(cases) + " certificates checked";
    return res;
}

/// Criterion 10: weight subadditivity, the Newton-above-Hodge guard,
/// and precision stability of reported polygons.
inline CheckResult check_property_suites(std::uint64_t seed, const SumBudgets& budgets) {
    CheckResult res{"property-suites", true, ""};
    std::mt19937_64 rng(seed + 2);

    // weight subadditivity, 1000 samples
    int done = 0;
    while (done < 1000) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        if (n + m - 1 < 1) continue;
        std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 3);
        FacetSystem fs = build_facets(n, m, d);
        const int N = fs.dim();
        auto sample_point = [&]() {
            LatticePoint q(static_cast<size_t>(N));
            for (int i = 0; i < N; ++i)
                q[static_cast<size_t>(i)] = static_cast<std::int64_t>(rng() % (10 * d + 1)) - 5 * d;
            return q;
        };
        LatticePoint q1 = sample_point(), q2 = sample_point();
        if (!in_cone(fs, q1) || !in_cone(fs, q2)) continue;
        LatticePoint sum(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) sum[static_cast<size_t>(i)] = q1[static_cast<size_t>(i)] + q2[static_cast<size_t>(i)];
        if (weight(fs, sum) > weight(fs, q1) + weight(fs, q2)) {
            res.pass = false;
            res.detail = "subadditivity violated";
            return res;
        }
        ++done;
    }

    // precision stability: 20 resampled compare runs (this also
    // re-exercises the Newton-above-Hodge assertion; any violation
    // throws and fails the criterion)
    for (int it = 0; it < 20; ++it) {
        const std::int64_t primes[] = {3, 5, 7};
        std::int64_t p = 0;
        int n = 0, m = 0;
        while (true) {
            p = primes[rng() % 3];
            n = 1 + static_cast<int>(rng() % 3);
            m = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            // keep the direct-summation cost of the deepest trace small
            double qn = 1;
            for (int i = 0; i < n; ++i) qn *= static_cast<double>(p);
            double cost = 1;
            for (int i = 0; i < n + m - 1; ++i) cost *= qn - 1;
            if (cost <= 4e6) break;
        }
        const std::int64_t r = p - 1;
        CharParams cp;
        cp.p = p;
        cp.s = 1;
        bool resonant = true;
        while (resonant) {
            cp.a_exps.clear();
            cp.b_exps.clear();
            for (int i = 0; i < n; ++i) cp.a_exps.push_back(static_cast<std::int64_t>(rng() % r));
            for (int j = 0; j < m; ++j) cp.b_exps.push_back(static_cast<std::int64_t>(rng() % r));
            resonant = false;
            for (auto a : cp.a_exps)
                for (auto b : cp.b_exps)
                    if (a == b) resonant = true;
        }
        std::int64_t la = static_cast<std::int64_t>(rng() % r);
        HypParams hp = cp.to_hyp_params();
        int M = default_precision(hp, p, 1);
        SumContext c1 = SumContext::make(p, 1, n, M, budgets);
        SumContext c2 = SumContext::make(p, 1, n, M + 3 * static_cast<int>(r), budgets);
        FrobeniusReport r1 = compare(c1, cp, la);
        FrobeniusReport r2 = compare(c2, cp, la);
        if (r1.verdict != r2.verdict || r1.newton_polygon != r2.newton_polygon) {
            res.pass = false;
            res.detail = "polygon changed under raised precision";
            return res;
        }
    }
    res.detail = "1000 subadditivity samples, 20 stability runs, no guard violations";
    return res;
}

inline std::vector<CheckResult> run_acceptance(std::uint64_t seed, SumBudgets budgets = {}) {
    std::vector<CheckResult> out;
    auto guard = [&out](auto&& fn, const char* name) {
        try {
            out.push_back(fn());
        } catch (const std::exception& ex) {
            out.push_back({name, false, std::string("exception: ") + ex.what()});
        }
    };
    guard([&] { return check_newton_equals_hodge(budgets); }, "newton-equals-hodge-sweep");
    guard([&] { return check_kloosterman(budgets); }, "kloosterman-ordinary");
    guard([] { return check_stickelberger(); }, "stickelberger");
    guard([&] { return check_weight_theta(seed); }, "weight-theta-identity");
    guard([&] { return check_duality(seed); }, "duality");
    guard([] { return check_remark_ii(); }, "remark-ii-hodge");
    guard([&] { return check_resonant_decomposition(budgets); }, "resonant-decomposition");
    guard([] { return check_volume_oracle(); }, "volume-oracle");
    guard([] { return check_wan_certificates(); }, "wan-certificates");
    guard([&] { return check_property_suites(seed, budgets); }, "property-suites");
    return out;
}

}  // namespace hypnp
