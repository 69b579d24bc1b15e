#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hypnp {

/// Convex polygon in the plane, stored as the nondecreasing multiset of
/// its segment slopes; the vertex chain starts at the origin.
class Polygon {
public:
    Polygon() = default;

    static Polygon from_slopes(std::vector<Rat> slopes) {
        std::sort(slopes.begin(), slopes.end());
        Polygon poly;
        poly.slopes_ = std::move(slopes);
        return poly;
    }

    /// Lower convex hull of points (k, ords[k]), k = 0..n, read off as
    /// n slopes with multiplicity. A missing ordinate means the point is
    /// only known to lie at height >= bound; the hull must stay valid
    /// without it (checked by the caller via lower_bound_ok).
    static Polygon lower_hull(const std::vector<Rat>& ords) {
        const int n = static_cast<int>(ords.size()) - 1;
        if (n < 0) throw std::invalid_argument("empty ordinate list");
        // Monotone chain over x = 0..n.
        std::vector<std::pair<int, Rat>> hull;
        for (int k = 0; k <= n; ++k) {
            std::pair<int, Rat> pt{k, ords[k]};
            while (hull.size() >= 2) {
                const auto& a = hull[hull.size() - 2];
                const auto& b = hull[hull.size() - 1];
                // cross((b-a), (pt-a)) >= 0 keeps the chain convex from below
                Rat cross = Rat(b.first - a.first) * (pt.second - a.second) -
                            Rat(pt.first - a.first) * (b.second - a.second);
                if (cross <= 0)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(std::move(pt));
        }
        std::vector<Rat> slopes;
        for (size_t i = 1; i < hull.size(); ++i) {
            Rat slope = (hull[i].second - hull[i - 1].second) /
                        Rat(hull[i].first - hull[i - 1].first);
            for (int r = hull[i - 1].first; r < hull[i].first; ++r) slopes.push_back(slope);
        }
        return from_slopes(std::move(slopes));
    }

    const std::vector<Rat>& slopes() const { return slopes_; }
    int length() const { return static_cast<int>(slopes_.size()); }

    /// Vertex chain (k, sum of first k slopes), k = 0..n.
    std::vector<std::pair<int, Rat>> vertices() const {
        std::vector<std::pair<int, Rat>> v;
        Rat acc(0);
        v.emplace_back(0, acc);
        for (int k = 0; k < length(); ++k) {
            acc += slopes_[k];
            v.emplace_back(k + 1, acc);
        }
        return v;
    }

    /// Height of the polygon at integer abscissa k.
    Rat height(int k) const {
        Rat acc(0);
        for (int i = 0; i < k && i < length(); ++i) acc += slopes_[i];
        return acc;
    }

    bool operator==(const Polygon& o) const { return slopes_ == o.slopes_; }
    bool operator!=(const Polygon& o) const { return !(*this == o); }

    /// True iff this polygon lies on or above `other` at every integer
    /// abscissa (same length required).
    bool lies_on_or_above(const Polygon& other) const {
        if (length() != other.length()) return false;
        Rat a(0), b(0);
        for (int k = 0; k < length(); ++k) {
            a += slopes_[k];
            b += other.slopes_[k];
            if (a < b) return false;
        }
        return true;
    }

private:
    std::vector<Rat> slopes_;
};

}  // namespace hypnp
