#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypnp/params.hpp"
#include "hypnp/polytope.hpp"

using namespace hypnp;

TEST_CASE("facet systems") {
    FacetSystem fs = build_facets(2, 1, 2);
    CHECK(fs.dim() == 2);
    REQUIRE(fs.upper.size() == 2);   // h_sum and one skewed facet
    CHECK(fs.cone.size() == 2);      // u_2 + v_1 >= 0, v_1 >= 0
    CHECK_THROWS_AS(build_facets(1, 2, 1), invalid_shape_error);
    CHECK_THROWS_AS(build_facets(2, 0, 0), invalid_shape_error);
    CHECK_THROWS_AS(build_facets(1, 0, 1), invalid_shape_error);  // N = 0
}

TEST_CASE("weights of sample points") {
    FacetSystem fs21 = build_facets(2, 1, 2);
    CHECK(weight(fs21, {1, 1}) == Rat(1));
    FacetSystem fs20 = build_facets(2, 0, 2);
    CHECK(weight(fs20, {-1}) == Rat(1, 2));
    CHECK(weight(fs20, {0}) == Rat(0));
    CHECK_THROWS_AS(weight(fs21, {0, -1}), not_in_cone_error);
    CHECK_THROWS_AS(weight(fs21, {0}), invalid_shape_error);
}

TEST_CASE("basis exponents for alpha=(0,1/2)") {
    HypParams hp = normalize({Rat(0), Rat(1, 2)}, {});
    auto basis = basis_exponents(hp, 2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].point == LatticePoint{-1});
    CHECK(basis[0].weight == Rat(1, 2));
    CHECK(basis[1].point == LatticePoint{1});
    CHECK(basis[1].weight == Rat(1, 2));
    CHECK_THROWS_AS(basis_exponents(normalize({Rat(1, 2)}, {}), 2), std::invalid_argument);
    CHECK_THROWS_AS(basis_exponents(hp, 3), std::invalid_argument);
}

TEST_CASE("closed-form volume") {
    CHECK(volume(2, 0, 1) == Rat(2));
    CHECK(volume(2, 2, 1) == Rat(1, 3));
    CHECK(volume(3, 0, 2) == Rat(4 * 3, 2));  // d^2 * n / 2!
}

TEST_CASE("lattice-count oracle matches the closed form") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}}) {
        FacetSystem fs = build_facets(n, m, 1);
        CHECK(lattice_count_volume_check(fs, fs.dim() + 3) == volume(n, m, 1));
    }
}

TEST_CASE("facet group invariant factors") {
    auto groups = wan_facet_groups(2, 1, 3);
    REQUIRE(groups.size() == 2);
    for (const auto& g : groups) {
        REQUIRE(g.invariant_factors.size() == 2);
        CHECK(g.invariant_factors[0] == 2);
        CHECK(g.invariant_factors[1] == 2);
    }
    CHECK(wan_certificate_holds(3, 0, 5));
    CHECK(wan_certificate_holds(3, 2, 7));
    CHECK_THROWS_AS(wan_facet_groups(2, 2, 3), invalid_shape_error);
}
