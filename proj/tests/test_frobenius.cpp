#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "hypnp/frobenius.hpp"
#include "hypnp/json_io.hpp"
#include "hypnp/params.hpp"
#include "hypnp/svg.hpp"

using namespace hypnp;

TEST_CASE("bounded Newton polygon handles vanishing coefficients") {
    // points (0,0), (2,1) known, (1,?) only bounded below
    std::vector<std::optional<Rat>> ords{Rat(0), std::nullopt, Rat(1)};
    std::vector<Rat> bounds{Rat(0), Rat(2), Rat(2)};
    Polygon poly = newton_polygon_bounded(ords, bounds);
    CHECK(poly == Polygon::from_slopes({Rat(1, 2), Rat(1, 2)}));
    // a bound below the hull is inconclusive
    std::vector<Rat> weak{Rat(0), Rat(1, 4), Rat(2)};
    CHECK_THROWS_AS(newton_polygon_bounded(ords, weak), precision_error);
    // missing endpoint is always fatal
    std::vector<std::optional<Rat>> noend{Rat(0), Rat(1, 2), std::nullopt};
    CHECK_THROWS_AS(newton_polygon_bounded(noend, bounds), precision_error);
}

TEST_CASE("newton identities recover elementary symmetric functions") {
    // eigenvalues 2 and 3 in Z_5[pi]: N_j = 2^j + 3^j, eps = +1 for n+m-1 even;
    // here pick eps = +1 directly.
    PadicRing R = PadicRing::make(5, 1, 16);
    std::vector<PadicElement> traces{padic_from_int(R, 5), padic_from_int(R, 13)};
    auto e = newton_charpoly(R, traces, +1);
    REQUIRE(e.size() == 2);
    CHECK(is_zero_to_precision(sub(e[0], padic_from_int(R, 5))));   // 2+3
    CHECK(is_zero_to_precision(sub(e[1], padic_from_int(R, 6))));   // 2*3
}

TEST_CASE("compare: alpha=(0,1/2) at p=5 is ordinary with slopes 1/2,1/2") {
    CharParams cp;
    cp.p = 5;
    cp.s = 1;
    cp.a_exps = {0, 2};
    HypParams hp = cp.to_hyp_params();
    SumContext ctx = SumContext::make(5, 1, 2, default_precision(hp, 5, 1));
    for (std::int64_t la = 0; la < 4; ++la) {
        FrobeniusReport rep = compare(ctx, cp, la);
        CHECK(rep.verdict == "ordinary");
        CHECK(rep.newton_polygon == Polygon::from_slopes({Rat(1, 2), Rat(1, 2)}));
        CHECK(rep.hodge_polygon == rep.newton_polygon);
        CHECK(rep.epsilon == -1);  // n+m-1 = 1 odd
    }
}

TEST_CASE("Kloosterman n=2 at p=7: slopes 0,1 everywhere") {
    CharParams cp;
    cp.p = 7;
    cp.s = 1;
    cp.a_exps = {0, 0};
    SumContext ctx = SumContext::make(7, 1, 2, default_precision(cp.to_hyp_params(), 7, 1));
    Polygon want = Polygon::from_slopes({Rat(0), Rat(1)});
    for (std::int64_t la = 0; la < 6; ++la) {
        FrobeniusReport rep = compare(ctx, cp, la);
        CHECK(rep.verdict == "ordinary");
        CHECK(rep.newton_polygon == want);
    }
}

TEST_CASE("small sweep is everywhere ordinary and serializes") {
    auto rows = sweep(3, 2, 1);
    CHECK(!rows.empty());
    for (const auto& r : rows) {
        CHECK(r.verdict == "ordinary");
        json j = report_json(r);
        CHECK(j.at("verdict") == "ordinary");
        std::string csv = report_csv_row(r);
        CHECK(csv.find("ordinary") != std::string::npos);
    }
}

TEST_CASE("json round trip and svg rendering") {
    HypParams hp = normalize({Rat(0), Rat(1, 2)}, {Rat(1, 3)});
    json j = params_json(hp);
    HypParams back = params_from_json(j);
    CHECK(back.alpha == hp.alpha);
    CHECK(back.beta == hp.beta);
    Polygon poly = irregular_hodge_polygon(hp);
    std::string svg = polygons_svg({{poly, "#123456"}});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}
