#pragma once

#include <cstdlib>
#include <vector>

#include "rational.hpp"

namespace hypnp {

/// Invariant factors (Smith normal form diagonal) of a square integer
/// matrix, nonnegative, in divisibility order. Intended for the small
/// vertex matrices arising from polytope facets.
inline std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<Int> factors;
    int r = 0;
    while (r < n) {
        // Find a nonzero pivot in the trailing block.
        int pi = -1, pj = -1;
        for (int i = r; i < n && pi < 0; ++i)
            for (int j = r; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[r], a[pi]);
        for (int i = r; i < n; ++i) std::swap(a[i][r], a[i][pj]);

        // Clear row and column r with Euclidean steps until stable.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = r + 1; i < n; ++i) {
                if (a[i][r] == 0) continue;
                if (a[r][r] == 0 || abs(a[i][r]) < abs(a[r][r])) std::swap(a[r], a[i]);
                Int q = a[i][r] / a[r][r];
                for (int j = r; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][r] != 0) dirty = true;
            }
            for (int j = r + 1; j < n; ++j) {
                if (a[r][j] == 0) continue;
                if (a[r][r] == 0 || abs(a[r][j]) < abs(a[r][r]))
                    for (int i = r; i < n; ++i) std::swap(a[i][r], a[i][j]);
                Int q = a[r][j] / a[r][r];
                for (int i = r; i < n; ++i) a[i][j] -= q * a[i][r];
                if (a[r][j] != 0) dirty = true;
            }
        }
        ++r;
    }
    for (int i = 0; i < n; ++i) factors.push_back(abs(a[i][i]));
    // Enforce divisibility d_1 | d_2 | ... with gcd/lcm sweeps.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (factors[i] == 0 && factors[j] == 0) continue;
            Int g = boost::multiprecision::gcd(factors[i], factors[j]);
            Int l = (g == 0) ? Int(0) : factors[i] / g * factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    return factors;
}

}  // namespace hypnp
