#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge.hpp"
#include "params.hpp"
#include "rational.hpp"
#include "smith.hpp"

namespace hypnp {

using LatticePoint = std::vector<std::int64_t>;

struct not_in_cone_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Facet description of the Newton polytope of the hypergeometric
/// Laurent polynomial: integer functionals h_k with h_k(x) <= d (upper
/// facets) and g(x) >= 0 (cone facets). Coordinates are
/// (u_2..u_n, v_1..v_m), ambient dimension N = n+m-1.
struct FacetSystem {
    int n = 0, m = 0;
    std::int64_t d = 1;
    std::vector<std::vector<std::int64_t>> upper;
    std::vector<std::vector<std::int64_t>> cone;

    int dim() const { return n + m - 1; }
};

inline FacetSystem build_facets(int n, int m, std::int64_t d) {
    if (n < 1 || m < 0 || n < m || d < 1) throw invalid_shape_error("need n >= m >= 0, n >= 1, d >= 1");
    const int N = n + m - 1;
    if (N <= 0) throw invalid_shape_error("ambient dimension n+m-1 must be positive");
    FacetSystem fs;
    fs.n = n;
    fs.m = m;
    fs.d = d;

    std::vector<std::int64_t> hsum(N, 1);  // h_{n+1} = sum u_i + sum v_j
    fs.upper.push_back(hsum);
    if (n > m) {
        for (int i0 = 0; i0 < n - 1; ++i0) {  // h_{i0+2} = hsum - (n-m) u_{i0+2}
            auto h = hsum;
            h[i0] -= (n - m);
            fs.upper.push_back(std::move(h));
        }
    }
    if (m > 0) {
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < m; ++j) {  // u_i + v_j >= 0
                std::vector<std::int64_t> g(N, 0);
                g[i] = 1;
                g[n - 1 + j] = 1;
                fs.cone.push_back(std::move(g));
            }
        for (int j = 0; j < m; ++j) {  // v_j >= 0
            std::vector<std::int64_t> g(N, 0);
            g[n - 1 + j] = 1;
            fs.cone.push_back(std::move(g));
        }
    }
    return fs;
}

inline std::int64_t dot(const std::vector<std::int64_t>& f, const LatticePoint& q) {
    std::int64_t acc = 0;
    for (size_t i = 0; i < f.size(); ++i) acc += f[i] * q[i];
    return acc;
}

inline bool in_cone(const FacetSystem& fs, const LatticePoint& q) {
    for (const auto& g : fs.cone)
        if (dot(g, q) < 0) return false;
    return true;
}

/// Minimal w >= 0 with q in w * Delta, as max of upper facet values / d.
inline Rat weight(const FacetSystem& fs, const LatticePoint& q) {
    if (static_cast<int>(q.size()) != fs.dim()) throw invalid_shape_error("point dimension mismatch");
    if (!in_cone(fs, q)) throw not_in_cone_error("point violates a cone facet");
    std::int64_t best = 0;
    for (const auto& h : fs.upper) best = std::max(best, dot(h, q));
    return Rat(Int(best), Int(fs.d));
}

struct BasisExponent {
    int r = 0;
    int ell = 0;
    LatticePoint point;
    Rat weight;
};

/// The n monomial exponents g_{r,l} spanning the twisted de Rham
/// cohomology, tagged with their weights. Requires alpha_1 = 0 and d a
/// common denominator of all parameters.
inline std::vector<BasisExponent> basis_exponents(const HypParams& p, std::int64_t d) {
    if (p.alpha.empty() || p.alpha[0] != 0)
        throw std::invalid_argument("basis exponents require alpha_1 = 0");
    if (!is_nonresonant(p)) throw std::invalid_argument("basis exponents require non-resonant parameters");
    const Int cd = common_denominator(p);
    if (d < 1 || Int(d) % cd != 0)
        throw std::invalid_argument("d must be a common denominator of all parameters");
    const int n = p.n, m = p.m;

    auto scaled = [&](const Rat& x) {
        return static_cast<std::int64_t>(rat_num(x * Rat(d)));
    };
    std::vector<std::int64_t> a(n), b(m);
    for (int i = 0; i < n; ++i) a[i] = scaled(p.alpha[i]);
    for (int j = 0; j < m; ++j) b[j] = scaled(p.beta[j]);

    // s_0 = 1, s_r = #{i : alpha_i < beta_r}, s_{m+1} = n+1 (1-based).
    std::vector<int> s(m + 2);
    s[0] = 1;
    for (int r = 1; r <= m; ++r) {
        int cnt = 0;
        for (int i = 0; i < n; ++i)
            if (p.alpha[i] < p.beta[r - 1]) ++cnt;
        s[r] = cnt;
    }
    s[m + 1] = n + 1;

    const bool trivial_dim = (n + m - 1 == 0);
    FacetSystem fs;
    if (!trivial_dim) fs = build_facets(n, m, d);

    std::vector<BasisExponent> out;
    for (int r = 0; r <= m; ++r) {
        for (int ell = 1; ell <= s[r + 1] - s[r]; ++ell) {
            BasisExponent be;
            be.r = r;
            be.ell = ell;
            const int cut = s[r] + ell;  // x_i keeps a_i for i < cut, a_i - d from i = cut on
            for (int i = 2; i <= n; ++i)
                be.point.push_back(i <= cut - 1 ? a[i - 1] : a[i - 1] - d);
            for (int j = 1; j <= m; ++j)
                be.point.push_back(j <= r ? d - b[j - 1] : 2 * d - b[j - 1]);
            be.weight = trivial_dim ? Rat(0) : weight(fs, be.point);
            out.push_back(std::move(be));
        }
    }
    return out;
}

/// Closed-form volume d^{n+m-1} n / (n+m-1)!.
inline Rat volume(int n, int m, std::int64_t d) {
    const int N = n + m - 1;
    if (N < 1) throw invalid_shape_error("need n+m-1 >= 1");
    Int num = 1;
    for (int i = 0; i < N; ++i) num *= d;
    num *= n;
    Int fact = 1;
    for (int i = 2; i <= N; ++i) fact *= i;
    return Rat(num, fact);
}

/// Ehrhart-style oracle: counts lattice points of k * Delta for
/// k = 0..scale_max and recovers the leading coefficient by finite
/// differences. Test-only cross-check of the closed form.
inline Rat lattice_count_volume_check(const FacetSystem& fs, int scale_max) {
    const int N = fs.dim();
    if (N > 4) throw resource_error("lattice enumeration limited to dimension <= 4");
    if (scale_max < N + 1) throw std::invalid_argument("scale_max must exceed the dimension");
    const std::int64_t box = fs.d * scale_max;
    double cells = 1;
    for (int i = 0; i < N; ++i) cells *= static_cast<double>(2 * box + 1);
    if (cells > 5e8) throw resource_error("lattice enumeration budget exceeded");

    std::vector<Int> counts(scale_max + 1, Int(0));
    LatticePoint q(N, -box);
    while (true) {
        if (in_cone(fs, q)) {
            std::int64_t top = 0;
            for (const auto& h : fs.upper) top = std::max(top, dot(h, q));
            // q lies in k*Delta iff top <= k*d (cone part already holds)
            std::int64_t kmin = (top + fs.d - 1) / fs.d;
            if (top <= 0) kmin = 0;
            for (std::int64_t k = kmin; k <= scale_max; ++k) ++counts[static_cast<size_t>(k)];
        }
        int pos = 0;
        while (pos < N && q[pos] == box) q[pos++] = -box;
        if (pos == N) break;
        ++q[pos];
    }

    // N-th finite difference of the Ehrhart polynomial = N! * volume.
    std::vector<Rat> diff;
    for (int k = scale_max - N; k <= scale_max; ++k) diff.emplace_back(counts[static_cast<size_t>(k)]);
    for (int lvl = 0; lvl < N; ++lvl)
        for (size_t i = diff.size() - 1; i > 0; --i) diff[i] -= diff[i - 1];
    Int fact = 1;
    for (int i = 2; i <= N; ++i) fact *= i;
    return diff.back() / Rat(fact);
}

struct WanFacetGroup {
    int facet_index = 0;  // index into FacetSystem::upper for d = 1
    std::vector<Int> invariant_factors;
};

/// Vertices of Delta(f_a) scaled by p-1 (i.e. every variable raised to
/// the (p-1)-st power), grouped by the upper facet they saturate; the
/// invariant factors of each vertex matrix describe the facet's
/// diagonal-solution group.
inline std::vector<WanFacetGroup> wan_facet_groups(int n, int m, std::int64_t p) {
    if (!(n > m)) throw invalid_shape_error("facet groups defined for n > m");
    const int N = n + m - 1;
    if (N < 1) throw invalid_shape_error("ambient dimension must be positive");
    FacetSystem fs = build_facets(n, m, 1);

    std::vector<LatticePoint> verts;
    for (int i = 0; i < n - 1; ++i) {  // P_i
        LatticePoint v(N, 0);
        v[i] = p - 1;
        verts.push_back(std::move(v));
    }
    for (int j = 0; j < m; ++j) {  // Q_j
        LatticePoint v(N, 0);
        v[n - 1 + j] = p - 1;
        verts.push_back(std::move(v));
    }
    {
        LatticePoint v(N, 0);  // R
        for (int i = 0; i < n - 1; ++i) v[i] = -(p - 1);
        for (int j = 0; j < m; ++j) v[n - 1 + j] = p - 1;
        verts.push_back(std::move(v));
    }

    std::vector<WanFacetGroup> out;
    for (size_t fi = 0; fi < fs.upper.size(); ++fi) {
        std::vector<std::vector<Int>> mat;
        for (const auto& v : verts)
            if (dot(fs.upper[fi], v) == (p - 1) * fs.d) {
                std::vector<Int> row(v.begin(), v.end());
                mat.push_back(std::move(row));
            }
        if (static_cast<int>(mat.size()) != N)
            throw std::logic_error("facet vertex count mismatch (facet enumeration bug)");
        WanFacetGroup g;
        g.facet_index = static_cast<int>(fi);
        g.invariant_factors = smith_invariant_factors(std::move(mat));
        out.push_back(std::move(g));
    }
    return out;
}

inline bool wan_certificate_holds(int n, int m, std::int64_t p) {
    for (const auto& g : wan_facet_groups(n, m, p))
        for (const auto& f : g.invariant_factors)
            if (f != p - 1) return false;
    return true;
}

}  // namespace hypnp
