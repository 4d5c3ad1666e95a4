#include <doctest.h>

#include "petersson/errors.hpp"
#include "petersson/klingen.hpp"
#include "petersson/repno.hpp"

using namespace petersson;

TEST_CASE("script E at m = 1 is a_f(1) E_{k,1}") {
    QExp d = delta_qexp(4);
    JacExp e1 = jac_eis_1(12, 6);
    for (auto* route : {&script_E_via_E2e, &script_E_via_ekmfor, &script_E_via_e2E}) {
        JacExp r = (*route)(d, 1, 6);
        for (const auto& [key, val] : r.classes())
            CHECK(val == e1.class_at(key.D, (int64_t)key.rho));
    }
}

TEST_CASE("three routes agree at m = 4 and 9") {
    QExp d = delta_qexp(12);
    for (uint64_t m : {4ull, 9ull}) {
        JacExp a = script_E_via_E2e(d, m, 5);
        JacExp b = script_E_via_ekmfor(d, m, 5);
        JacExp c = script_E_via_e2E(d, m, 5);
        for (const auto& [key, val] : a.classes()) {
            auto itb = b.classes().find(key);
            if (itb != b.classes().end()) CHECK(val == itb->second);
            auto itc = c.classes().find(key);
            if (itc != c.classes().end()) CHECK(val == itc->second);
        }
        CHECK(b.prec() >= 5);
        CHECK(c.prec() >= 5);
    }
}

TEST_CASE("squarefree m collapses ekmfor to a_f(m) E_{k,m}") {
    QExp d = delta_qexp(8);
    for (uint64_t m : {2ull, 5ull, 6ull}) {
        JacExp r = script_E_via_ekmfor(d, m, 4);
        JacExp e = jac_eis_m(12, m, 4);
        for (const auto& [key, val] : r.classes())
            CHECK(val == d.a(m) * e.class_at(key.D, (int64_t)key.rho));
    }
}

TEST_CASE("zero cusp form gives the zero expansion") {
    QExp z(12, 8, true);
    JacExp r = script_E_via_E2e(z, 4, 4);
    for (const auto& [key, val] : r.classes()) {
        (void)key;
        CHECK(val.is_zero());
    }
}

TEST_CASE("genasy main term, weight 4") {
    QExp e4 = eisenstein_qexp(4, 8);
    // With PhiF = E_4 = theta^1(E8) the main term must reproduce a_2^4(T).
    for (const BinQF& T : {BinQF{1, 1, 1}, BinQF{1, 0, 1}, BinQF{2, 1, 1}, BinQF{3, 2, 2}}) {
        Rat main = genasy_main_term(e4, T, 4);
        CHECK(main == Rat(Int((unsigned long)rep_number(builtin_e8(), T))));
    }
    // m prime: single t = 1 term.
    BinQF Tp{3, 1, 3};
    CHECK(genasy_main_term(e4, Tp, 4) ==
          c_k_constant(4).inv() * alpha_m(e4, 4, 3, 1) * a2k(Tp, 4));
}

TEST_CASE("genasy precision guard") {
    QExp e4 = eisenstein_qexp(4, 3);
    CHECK_THROWS_AS((void)genasy_main_term(e4, BinQF{4, 0, 4}, 4), PrecisionError);
}

TEST_CASE("route-tagged json") {
    QExp d = delta_qexp(6);
    JacExp r = script_E_via_E2e(d, 4, 3);
    std::string j = script_E_to_json(r, "E2e");
    CHECK(j.find("\"route\":\"E2e\"") != std::string::npos);
    CHECK(j.find("\"coeffs\"") != std::string::npos);
}
