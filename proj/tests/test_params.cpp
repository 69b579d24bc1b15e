#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypnp/hodge.hpp"
#include "hypnp/params.hpp"
#include "hypnp/rational.hpp"

using namespace hypnp;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-2") == Rat(-2));
    CHECK(rat_str(Rat(1, 2)) == "1/2");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("x/y"), std::invalid_argument);
    auto l = parse_rat_list("0,1/2,2/3");
    REQUIRE(l.size() == 3);
    CHECK(l[1] == Rat(1, 2));
    CHECK(parse_rat_list("").empty());
}

TEST_CASE("frac_part and floor") {
    CHECK(frac_part(Rat(7, 3)) == Rat(1, 3));
    CHECK(frac_part(Rat(-1, 3)) == Rat(2, 3));
    CHECK(rat_floor(Rat(-1, 3)) == -1);
    CHECK(rat_floor(Rat(5, 2)) == 2);
}

TEST_CASE("normalize sorts, reduces, and keeps alpha the longer list") {
    HypParams hp = normalize({Rat(3, 2), Rat(0)}, {Rat(-1, 4), Rat(1, 3), Rat(1, 5)});
    // beta was longer, so it becomes alpha
    CHECK(hp.n == 3);
    CHECK(hp.m == 2);
    CHECK(hp.alpha == std::vector<Rat>{Rat(1, 5), Rat(1, 3), Rat(3, 4)});
    CHECK(hp.beta == std::vector<Rat>{Rat(0), Rat(1, 2)});
    CHECK_THROWS_AS(normalize({}, {}), invalid_shape_error);
}

TEST_CASE("non-resonance detection") {
    CHECK(is_nonresonant(normalize({Rat(0), Rat(1, 2)}, {Rat(1, 3)})));
    CHECK(!is_nonresonant(normalize({Rat(0), Rat(1, 2)}, {Rat(1, 2)})));
}

TEST_CASE("conjugate parameters") {
    // alpha = (0, 1/2): t = 1, alpha-bar = (0, 1/2); beta empty
    HypParams hp = normalize({Rat(0), Rat(1, 2)}, {});
    HypParams c = conjugate(hp);
    CHECK(c.alpha == std::vector<Rat>{Rat(0), Rat(1, 2)});
    CHECK(c.beta.empty());

    // alpha = (0, 1/3, 2/3) -> t = 1, bar = (0, 1/3, 2/3)
    HypParams h2 = normalize({Rat(0), Rat(1, 3), Rat(2, 3)}, {Rat(1, 4)});
    HypParams c2 = conjugate(h2);
    CHECK(c2.alpha == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(2, 3)});
    CHECK(c2.beta == std::vector<Rat>{Rat(3, 4)});

    // non-trivial: alpha = (1/5, 2/5), no zero entries -> t = 0,
    // bar = (1 - 2/5, 1 - 1/5) sorted = (3/5, 4/5)
    HypParams h3 = normalize({Rat(1, 5), Rat(2, 5)}, {});
    CHECK(conjugate(h3).alpha == std::vector<Rat>{Rat(3, 5), Rat(4, 5)});
}

TEST_CASE("frobenius twist") {
    HypParams hp = normalize({Rat(0), Rat(1, 8)}, {});
    HypParams tw = frobenius_twist(hp, 3);
    CHECK(tw.alpha == std::vector<Rat>{Rat(0), Rat(3, 8)});
    CHECK(common_denominator(hp) == 8);
}

TEST_CASE("character parameter round trip") {
    CharParams cp;
    cp.p = 5;
    cp.s = 1;
    cp.a_exps = {0, 2};
    cp.b_exps = {};
    CHECK(cp.q() == 5);
    HypParams hp = cp.to_hyp_params();
    CHECK(hp.alpha == std::vector<Rat>{Rat(0), Rat(1, 2)});
    CharParams back = char_params_from(hp, 5, 1);
    CHECK(back.a_exps == std::vector<std::int64_t>{0, 2});
    CHECK_THROWS_AS(char_params_from(normalize({Rat(1, 3)}, {}), 5, 1), std::invalid_argument);
}
