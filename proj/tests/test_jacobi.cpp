#include <doctest.h>

#include "petersson/errors.hpp"
#include "petersson/hecke.hpp"
#include "petersson/jacobi.hpp"

using namespace petersson;

TEST_CASE("E_{4,1} frozen coefficients") {
    JacExp e = jac_eis_1(4, 3);
    CHECK(e.c(0, 0) == Rat(1));
    CHECK(e.c(1, 1) == Rat(56));
    CHECK(e.c(1, -1) == Rat(56));
    CHECK(e.c(1, 0) == Rat(126));
    CHECK(e.c(1, 2) == Rat(1));  // degenerate, D = 0
    CHECK(e.c(2, 1) == Rat(576));
    CHECK(e.c(2, 0) == Rat(756));
    CHECK(e.c(2, 2) == Rat(126));
}

TEST_CASE("E_{6,1} frozen coefficients") {
    JacExp e = jac_eis_1(6, 2);
    CHECK(e.c(1, 1) == Rat(-88));
    CHECK(e.c(1, 0) == Rat(-330));
}

TEST_CASE("class storage invariants") {
    JacExp e = jac_eis_1(12, 8);
    e.check_invariants();
    // (D, r mod 2m) dependence: same class, different representatives
    CHECK(e.c(1, 1) == e.c(3, -3));  // D = 3 both
    CHECK(e.c(1, 0) == e.c(2, 2));   // D = 4 both
    CHECK_THROWS_AS((void)e.c(9, 0), PrecisionError);
    JacExp z(12, 1, 1);
    CHECK_THROWS_AS(z.check_invariants(), InvariantViolation);
}

TEST_CASE("jac_eis_m basics") {
    // m = 1 is jac_eis_1 unchanged
    JacExp a = jac_eis_m(12, 1, 5), b = jac_eis_1(12, 5);
    for (const auto& [key, val] : b.classes()) CHECK(a.class_at(key.D, (int64_t)key.rho) == val);
    // prime index constant term: g_k(p)^{-1} sigma_{k-1}(p) = 1
    CHECK(jac_eis_m(12, 3, 2).c(0, 0) == Rat(1));
    // degenerate profile for m = 4, k = 12: 1 at r = 0 mod 8, else 0
    JacExp e4 = jac_eis_m(12, 4, 3);
    CHECK(e4.c(1, 4) == Rat(0));  // degenerate slot with r = 4 mod 8
    CHECK(e4.class_at(0, 0) == Rat(1));
    CHECK(e4.class_at(0, 4) == Rat(0));
    CHECK(e4.c(4, 8) == Rat(1));  // same class as (0,0): r = 0 mod 8
    e4.check_invariants();
}

TEST_CASE("eis_degenerate cases") {
    CHECK(eis_degenerate(12, 4, 1, 4) == Rat(1));      // b=2, 2s=2 = 0 mod 2
    CHECK(eis_degenerate(12, 9, 1, 6) == Rat(1, 2));   // b=3, 2s=2 not 0 mod 3
    CHECK(eis_degenerate(12, 5, 0, 1) == Rat(0));
    CHECK(eis_degenerate(12, 1, 0, 2) == Rat(1));
}

TEST_CASE("siegel_fj normalization") {
    // e_{k,1} = c_k E_{k,1}
    JacExp e = siegel_fj(4, 1, 3);
    JacExp j = jac_eis_1(4, 3);
    Rat ck = c_k_constant(4);
    CHECK(ck == Rat(240));
    for (const auto& [key, val] : j.classes())
        CHECK(e.class_at(key.D, (int64_t)key.rho) == ck * val);
    // a_2^4((1,1,1)) = 240 * 56, a_2^4((1,0,1)) = 240 * 126
    CHECK(e.c(1, 1) == Rat(13440));
    CHECK(e.c(1, 0) == Rat(30240));
}

TEST_CASE("siegel_fj equals c_k E_{k,1}|V_N") {
    // The empirical normalization bridging the Fourier-Jacobi coefficients of
    // the Siegel Eisenstein series and the index-raised E_{k,1}.
    for (unsigned k : {4u, 12u})
        for (uint64_t N : {1ull, 2ull, 3ull, 4ull, 6ull}) {
            JacExp lhs = siegel_fj(k, N, 4);
            JacExp rhs = jac_scale(c_k_constant(k), apply_V(jac_eis_1(k, 4 * N), N));
            for (const auto& [key, val] : lhs.classes()) {
                auto other = rhs.classes().find(key);
                if (other != rhs.classes().end()) CHECK(val == other->second);
            }
        }
}

TEST_CASE("theta decomposition round trip") {
    JacExp e = jac_eis_m(12, 1, 20);
    ThetaComponents tc = theta_decompose(e);
    CHECK(tc.component.size() == 2);
    JacExp back = theta_reassemble(tc);
    CHECK(back.prec() == e.prec());
    for (const auto& [key, val] : e.classes()) CHECK(back.class_at(key.D, (int64_t)key.rho) == val);

    // index-4 case with nontrivial folding
    JacExp e4 = jac_eis_m(12, 4, 6);
    ThetaComponents t4 = theta_decompose(e4);
    CHECK(t4.component.size() == 8);
    // evenness: h_mu = h_{2m-mu}
    for (uint64_t mu = 1; mu < 4; ++mu) CHECK(t4.component[mu] == t4.component[8 - mu]);
    JacExp back4 = theta_reassemble(t4);
    for (const auto& [key, val] : e4.classes()) CHECK(back4.class_at(key.D, (int64_t)key.rho) == val);
}

TEST_CASE("theta components of E_{4,1} are H(3, D)/zeta(-5)") {
    JacExp e = jac_eis_1(4, 6);
    ThetaComponents tc = theta_decompose(e);
    Rat z = cohen_H(3, 0);
    for (const auto& [D, c] : tc.component[0]) CHECK(c == cohen_H(3, (uint64_t)D) / z);
    for (const auto& [D, c] : tc.component[1]) CHECK(c == cohen_H(3, (uint64_t)D) / z);
}

TEST_CASE("is_cuspidal") {
    CHECK_FALSE(is_cuspidal(jac_eis_1(10, 4)));
    JacExp zero(10, 1, 3);
    zero.set_class(0, 0, Rat(0));
    zero.set_class(3, 1, Rat(5));
    zero.set_class(4, 0, Rat(7));
    zero.set_class(7, 1, Rat(0));
    zero.set_class(8, 0, Rat(1));
    zero.set_class(11, 1, Rat(0));
    CHECK(is_cuspidal(zero));
}

TEST_CASE("jacexp json round trip") {
    JacExp e = jac_eis_m(12, 2, 4);
    JacExp back = jacexp_from_json(jacexp_to_json(e));
    CHECK(back.weight() == e.weight());
    CHECK(back.index() == e.index());
    CHECK(back.prec() == e.prec());
    for (const auto& [key, val] : e.classes()) CHECK(back.class_at(key.D, (int64_t)key.rho) == val);
}

TEST_CASE("write-time consistency check") {
    JacExp e(12, 1, 1);
    e.set_class(0, 0, Rat(1));
    CHECK_THROWS_AS(e.set_class(0, 0, Rat(2)), InvariantViolation);
    CHECK_NOTHROW(e.set_class(0, 0, Rat(1)));
}
