#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypnp/fq.hpp"
#include "hypnp/padic.hpp"
#include "hypnp/params.hpp"

using namespace hypnp;

TEST_CASE("finite field basics") {
    FqField F = build_field(5, 2);
    CHECK(F.q == 25);
    // exp/log consistency
    for (std::int64_t l = 0; l < F.q - 1; ++l) CHECK(F.log_of(F.exp_of(l)) == l);
    // generator order and trace additivity on a few samples
    CHECK(F.pow(F.generator, F.q - 1) == 1);
    for (std::int64_t x = 1; x < F.q; ++x)
        for (std::int64_t y = 1; y < F.q; ++y)
            if (x < 6 && y < 6)
                CHECK(F.trace_to_prime(F.add(x, y)) ==
                      (F.trace_to_prime(x) + F.trace_to_prime(y)) % 5);
}

TEST_CASE("valuations of p and pi") {
    PadicRing R = PadicRing::make(5, 1, 12);
    CHECK(ord_pi(padic_pi(R)) == 1);
    CHECK(ord_pi(padic_from_int(R, 5)) == 4);
    CHECK(ord_q(padic_from_int(R, 5)) == Rat(1));
    CHECK(ord_q(padic_pi(R)) == Rat(1, 4));
    CHECK(is_zero_to_precision(padic_from_int(R, 0)));
    CHECK_THROWS_AS(ord_q(padic_zero(R)), precision_error);
}

TEST_CASE("(1+pi)^p matches the binomial expansion") {
    PadicRing R = PadicRing::make(3, 1, 8);
    PadicElement x = add(padic_one(R), padic_pi(R));
    PadicElement lhs = padic_pow(x, 3);
    // (1+pi)^3 = 1 + 3 pi + 3 pi^2 + pi^3, with pi^2 = -3
    PadicElement pi = padic_pi(R);
    PadicElement rhs = padic_one(R);
    rhs = add(rhs, mul(padic_from_int(R, 3), pi));
    rhs = add(rhs, mul(padic_from_int(R, 3), mul(pi, pi)));
    rhs = add(rhs, mul(pi, mul(pi, pi)));
    CHECK(equal_to_precision(lhs, rhs));
}

TEST_CASE("teichmuller is multiplicative and reduces to the argument") {
    for (auto [p, s] : std::vector<std::pair<std::int64_t, int>>{{5, 1}, {3, 2}, {7, 2}}) {
        FqField F = build_field(p, s);
        PadicRing R = PadicRing::make(p, s, 3 * static_cast<int>(p - 1),
                                      std::vector<std::int64_t>(F.modulus.begin(), F.modulus.end()));
        std::vector<PadicElement> tei;
        tei.push_back(padic_zero(R));  // placeholder for 0
        for (std::int64_t x = 1; x < F.q; ++x) tei.push_back(teichmuller(R, F, x));
        for (std::int64_t x = 1; x < F.q; ++x) {
            // omega(x)^q = omega(x)
            CHECK(equal_to_precision(padic_pow(tei[static_cast<size_t>(x)], F.q),
                                     tei[static_cast<size_t>(x)]));
            // residue is x: row 0 mod p reproduces the base-p digits
            std::int64_t c = x;
            for (int j = 0; j < s; ++j) {
                CHECK(tei[static_cast<size_t>(x)].at(0, j) % static_cast<std::uint64_t>(p) ==
                      static_cast<std::uint64_t>(c % p));
                c /= p;
            }
            for (std::int64_t y = 1; y < F.q; ++y)
                CHECK(equal_to_precision(mul(tei[static_cast<size_t>(x)], tei[static_cast<size_t>(y)]),
                                         tei[static_cast<size_t>(F.mul(x, y))]));
        }
    }
}

TEST_CASE("unit inversion and exact division") {
    PadicRing R = PadicRing::make(5, 1, 12);
    PadicElement x = add(padic_from_int(R, 2), padic_pi(R));
    CHECK(equal_to_precision(mul(x, inverse(x)), padic_one(R)));
    PadicElement y = mul(padic_from_int(R, 15), x);
    PadicElement q = div_exact_int(y, 15);
    CHECK(q.prec == x.prec - 4);  // one factor of 5 costs p-1 digits
    CHECK(is_zero_to_precision(sub(q, x)));
    CHECK_THROWS_AS(div_exact_int(padic_one(R), 5), precision_error);
    CHECK_THROWS_AS(ord_q(sub(x, x)), precision_error);
}

TEST_CASE("zeta_p properties") {
    for (std::int64_t p : {3, 5, 7}) {
        PadicRing R = PadicRing::make(p, 1, 4 * static_cast<int>(p - 1));
        PadicElement z = zeta_p(R);
        CHECK(equal_to_precision(padic_pow(z, p), padic_one(R)));
        CHECK(ord_pi(sub(z, padic_one(R))) == 1);
        // 1 + zeta + ... + zeta^{p-1} = 0
        PadicElement acc = padic_zero(R);
        for (std::int64_t t = 0; t < p; ++t) acc = add(acc, psi_value(R, z, t));
        CHECK(is_zero_to_precision(acc));
    }
}

TEST_CASE("Gauss sums over the prime field") {
    FqField F = build_field(7, 1);
    PadicRing R = PadicRing::make(7, 1, 18);
    // trivial character: sum over units of psi is -1
    CHECK(equal_to_precision(gauss_sum(R, F, 0), padic_from_int(R, -1)));
    for (std::int64_t k = 1; k <= 5; ++k) {
        PadicElement g = gauss_sum(R, F, k);
        CHECK(ord_q(g) == Rat(Int(k), Int(6)));  // Stickelberger
    }
}

TEST_CASE("Gauss sum over an extension via tables") {
    FqField F = build_field(3, 2);
    PadicRing R = PadicRing::make(3, 2, 8,
                                  std::vector<std::int64_t>(F.modulus.begin(), F.modulus.end()));
    CHECK(equal_to_precision(gauss_sum(R, F, 0), padic_from_int(R, -1)));
    CHECK(ord_q(gauss_sum(R, F, 1)) == Rat(1, 4));  // digit sum 1 over s(p-1) = 4
}
