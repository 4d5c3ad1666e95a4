#include <doctest.h>

#include "petersson/errors.hpp"
#include "petersson/qexp.hpp"

using namespace petersson;

TEST_CASE("eisenstein q-expansions") {
    QExp e4 = eisenstein_qexp(4, 4);
    CHECK(e4.a(0) == Rat(1));
    CHECK(e4.a(1) == Rat(240));
    CHECK(e4.a(2) == Rat(2160));
    QExp e6 = eisenstein_qexp(6, 2);
    CHECK(e6.a(1) == Rat(-504));
    CHECK(eisenstein_qexp(8, 2).a(1) == Rat(480));
    CHECK(eisenstein_qexp(12, 1).a(0) == Rat(1));
}

TEST_CASE("E4^2 = E8") {
    QExp sq = qexp_mul(eisenstein_qexp(4, 50), eisenstein_qexp(4, 50));
    QExp e8 = eisenstein_qexp(8, 50);
    CHECK(sq.weight == 8);
    for (std::size_t n = 0; n < 50; ++n) CHECK(sq.a(n) == e8.a(n));
}

TEST_CASE("delta expansion") {
    QExp d = delta_qexp(12);
    CHECK(d.a(0) == Rat(0));
    CHECK(d.a(1) == Rat(1));
    CHECK(d.a(2) == Rat(-24));
    CHECK(d.a(3) == Rat(252));
    CHECK(d.a(4) == Rat(-1472));
    CHECK(d.a(5) == Rat(4830));
    CHECK(d.a(6) == Rat(-6048));
    CHECK(d.a(11) == Rat(534612));
    CHECK(d.cuspidal);
    CHECK_THROWS_AS((void)d.a(12), PrecisionError);
}

TEST_CASE("victor miller cusp bases") {
    CHECK(cusp_basis(12, 8).size() == 1);
    CHECK(cusp_basis(14, 8).empty());
    CHECK(cusp_basis(16, 8).size() == 1);
    auto b24 = cusp_basis(24, 8);
    REQUIRE(b24.size() == 2);
    // echelon: leading exponents 1 and 2
    CHECK(b24[0].a(1) == Rat(1));
    CHECK(b24[0].a(2) == Rat(0));
    CHECK(b24[1].a(1) == Rat(0));
    CHECK(b24[1].a(2) == Rat(1));
    // weight-12 basis is Delta itself
    auto b12 = cusp_basis(12, 8);
    QExp d = delta_qexp(8);
    for (std::size_t n = 0; n < 8; ++n) CHECK(b12[0].a(n) == d.a(n));
}

TEST_CASE("g_f") {
    QExp d = delta_qexp(10);
    CHECK(g_f(d, 1) == Rat(1));
    CHECK(g_f(d, 4) == Rat(-1473));  // tau(4) - tau(1)
    CHECK(g_f(d, 7) == d.a(7));
    CHECK_THROWS_AS((void)g_f(d, 10), PrecisionError);
}

TEST_CASE("alpha_m") {
    QExp e4 = eisenstein_qexp(4, 6);
    CHECK(alpha_m(e4, 4, 1, 1) == Rat(240));
    QExp d = delta_qexp(10);
    // t = 1: alpha = g_f(m)/g_k(m)
    CHECK(alpha_m(d, 12, 4, 1) == g_f(d, 4) / Rat(g_k(12, 4)));
    // t = 2, m = 4: g(1)/g(1) - g(4)/g(4) pattern
    CHECK(alpha_m(d, 12, 4, 2) == g_f(d, 1) / Rat(g_k(12, 1)) - g_f(d, 4) / Rat(g_k(12, 4)));
    CHECK_THROWS(alpha_m(d, 12, 4, 3));
}

TEST_CASE("alpha_m moebius inversion") {
    // alpha_m(t) = sum_{l|t} mu(t/l) h(l) with h(l) = g_f(m/l^2)/g_k(m/l^2),
    // so summing over divisors t | T recovers h(T).
    QExp d = delta_qexp(101);
    for (uint64_t m = 1; m <= 100; ++m)
        for (uint64_t T = 1; T * T <= m; ++T) {
            if (m % (T * T) != 0) continue;
            Rat sum(0);
            for (uint64_t t : divisors(T)) sum += alpha_m(d, 12, m, t);
            CHECK(sum == g_f(d, m / (T * T)) / Rat(g_k(12, m / (T * T))));
        }
}

TEST_CASE("qexp json round trip") {
    QExp d = delta_qexp(6);
    QExp back = qexp_from_json(qexp_to_json(d));
    CHECK(back == d);
    CHECK(back.cuspidal);
}
