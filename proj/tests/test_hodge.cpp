#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypnp/hodge.hpp"
#include "hypnp/params.hpp"
#include "hypnp/polygon.hpp"

using namespace hypnp;

TEST_CASE("theta for alpha=(0,1/2)") {
    HypParams hp = normalize({Rat(0), Rat(1, 2)}, {});
    auto th = theta(hp);
    REQUIRE(th.size() == 2);
    CHECK(th[0] == Rat(1, 2));
    CHECK(th[1] == Rat(1, 2));
}

TEST_CASE("theta for the Airy-type family alpha=0^4, beta=(1/5..4/5)") {
    HypParams hp = normalize({Rat(0), Rat(0), Rat(0), Rat(0)},
                             {Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)});
    Polygon got = irregular_hodge_polygon(hp);
    CHECK(got == Polygon::from_slopes({Rat(2), Rat(3), Rat(4), Rat(5)}));
}

TEST_CASE("Kloosterman Hodge slopes are 0..n-1") {
    for (int n = 2; n <= 4; ++n) {
        HypParams hp = normalize(std::vector<Rat>(static_cast<size_t>(n), Rat(0)), {});
        std::vector<Rat> want;
        for (int k = 0; k < n; ++k) want.emplace_back(k);
        CHECK(irregular_hodge_polygon(hp) == Polygon::from_slopes(want));
    }
}

TEST_CASE("polygon helpers") {
    Polygon poly = Polygon::lower_hull({Rat(0), Rat(0), Rat(1)});
    CHECK(poly == Polygon::from_slopes({Rat(0), Rat(1)}));
    Polygon half = Polygon::lower_hull({Rat(0), Rat(1, 2), Rat(1)});
    CHECK(half == Polygon::from_slopes({Rat(1, 2), Rat(1, 2)}));
    CHECK(half.height(2) == Rat(1));
    CHECK(poly.lies_on_or_above(poly));
    CHECK(!poly.lies_on_or_above(half));  // 0 < 1/2 at k = 1
    CHECK(half.lies_on_or_above(poly));
    auto v = half.vertices();
    REQUIRE(v.size() == 3);
    CHECK(v[1].second == Rat(1, 2));
}

TEST_CASE("duality holds for sampled non-resonant parameters") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 100; ++it) {
        std::vector<Rat> a, b;
        int n = 1 + static_cast<int>(rng() % 4);
        int m = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        for (int i = 0; i < n; ++i) {
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 12);
            a.emplace_back(Int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d))), Int(d));
        }
        for (int j = 0; j < m; ++j) {
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 12);
            b.emplace_back(Int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d))), Int(d));
        }
        HypParams hp = normalize(std::move(a), std::move(b));
        if (!is_nonresonant(hp)) continue;
        CHECK(duality_pairing(hp));
    }
}

TEST_CASE("orbit-averaged polygon for alpha=(0,1/8), p=3, s=2") {
    HypParams hp = normalize({Rat(0), Rat(1, 8)}, {});
    AsHodgeResult res = as_hodge_polygon(hp, 3, 2);
    CHECK(res.polygon == Polygon::from_slopes({Rat(1, 4), Rat(3, 4)}));
    CHECK(res.experimental);
    REQUIRE(res.orbit_thetas.size() == 2);
    CHECK(res.orbit_thetas[0] == std::vector<Rat>{Rat(1, 8), Rat(7, 8)});
    CHECK(res.orbit_thetas[1] == std::vector<Rat>{Rat(3, 8), Rat(5, 8)});
    CHECK_THROWS_AS(as_hodge_polygon(hp, 3, 1), std::invalid_argument);  // 8 does not divide 2
}
