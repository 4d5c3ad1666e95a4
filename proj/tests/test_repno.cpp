#include <doctest.h>

#include "petersson/jacobi.hpp"
#include "petersson/klingen.hpp"
#include "petersson/repno.hpp"

using namespace petersson;

TEST_CASE("a2k frozen values at weight 4") {
    CHECK(a2k(BinQF{1, 0, 1}, 4) == Rat(30240));
    CHECK(a2k(BinQF{1, 1, 1}, 4) == Rat(13440));
    CHECK(a2k(BinQF{1, 1, 1}, 8) == Rat(Int((unsigned long)rep_number(builtin_e8e8(), BinQF{1, 1, 1}))));
}

TEST_CASE("a2k class function on swapped representatives, det(2T) <= 100") {
    // c(n,r) of e_{k,m} and c(m,r) of e_{k,n} sit in the same GL2(Z) class.
    for (const BinQF& T : reduced_forms_up_to(100)) {
        if (T.n == T.m) continue;
        JacExp swapped = siegel_fj(4, (uint64_t)T.n, (std::size_t)T.m + 1);
        CHECK(swapped.c(T.m, T.r) == a2k(T, 4));
    }
}

TEST_CASE("a2k is a class function") {
    // Computed at an unreduced representative through a different Jacobi
    // index, then compared against the reduced evaluation.
    BinQF T{1, 1, 2};  // unreduced: m > n
    BinQF R = reduce(T).form;
    CHECK(R.reduced());
    JacExp e = siegel_fj(4, (uint64_t)T.m, (std::size_t)T.n + 1);
    CHECK(e.c(T.n, T.r) == a2k(R, 4));
    BinQF T2{3, -5, 3};  // |r| > m
    BinQF R2 = reduce(T2).form;
    JacExp e2 = siegel_fj(4, (uint64_t)T2.m, (std::size_t)T2.n + 1);
    CHECK(e2.c(T2.n, T2.r) == a2k(R2, 4));
}

TEST_CASE("gl2 divisor classes") {
    // det(2T) squarefree: only the identity class
    auto cls = gl2_divisor_classes(BinQF{1, 1, 1});  // det2 = 3
    REQUIRE(cls.size() == 1);
    CHECK(gl2_det(cls[0].first) == 1);
    // T = 2 T0 contains a class of determinant 2
    auto cls2 = gl2_divisor_classes(BinQF{2, 0, 2});
    bool has_det2 = false;
    for (const auto& [G, TG] : cls2) {
        CHECK(TG.positive_definite());
        if (gl2_det(G) == 2) has_det2 = true;
    }
    CHECK(has_det2);
}

TEST_CASE("a2k primitive inversion round trip") {
    for (const BinQF& T : reduced_forms_up_to(100)) {
        Rat total(0);
        for (const auto& [G, TG] : gl2_divisor_classes(T)) {
            (void)G;
            total += a2k_primitive(TG, 4);
        }
        CHECK(total == a2k(T, 4));
    }
}

TEST_CASE("a2k primitive equals a2k on fundamental discriminants") {
    for (const BinQF& T : reduced_forms_up_to(40)) {
        if (T.det2() % 4 == 0) continue;  // -det(2T) = 1 mod 4 fundamental iff squarefree
        if (squarefree_kernel((uint64_t)T.det2()) != (uint64_t)T.det2()) continue;
        CHECK(a2k_primitive(T, 4) == a2k(T, 4));
    }
}

TEST_CASE("main term exactness at weight 4") {
    Lattice e8 = builtin_e8();
    Rat ck_inv = c_k_constant(4).inv();
    for (const BinQF& T : {BinQF{1, 0, 1}, BinQF{2, 1, 1}, BinQF{3, 2, 3}}) {
        CHECK(ck_inv * main_term_M(e8, T) == Rat(Int((unsigned long)rep_number(e8, T))));
        CHECK(main_term_M(e8, T).sgn() >= 0);
    }
    // m squarefree: M = (A*(S,m)/g_k(m)) a2k(T)
    BinQF T{2, 1, 2};
    CHECK(main_term_M(e8, T) ==
          Rat(Int((unsigned long)rep_primitive(e8, (uint64_t)2))) / Rat(g_k(4, 2)) * a2k(T, 4));
}

TEST_CASE("repno report columns") {
    Lattice e8 = builtin_e8();
    auto rows = repno_report(e8, reduced_forms_up_to(16));
    for (const auto& row : rows) {
        CHECK(row.diff.is_zero());
        CHECK(row.mst_ratio > 0);
        CHECK(row.det2 == row.T.det2());
    }
}

TEST_CASE("hauptsatz rank 8 and rank 16") {
    Lattice e8 = builtin_e8();
    auto scan = reduced_forms_up_to(20);
    CHECK(hauptsatz_check({{e8, Rat(1)}}, scan).pass);
    CHECK(hauptsatz_check_degree1({{e8, Rat(1)}}, 8).pass);
    CHECK_THROWS(hauptsatz_check({{e8, Rat(1, 2)}}, scan));  // weights must sum to 1
    std::vector<BinQF> small{{1, 0, 1}, {1, 1, 1}, {2, 1, 1}};
    CHECK(hauptsatz_check({{builtin_e8e8(), Rat(1, 2)}, {builtin_d16plus(), Rat(1, 2)}}, small).pass);
}

TEST_CASE("saha sequence") {
    auto r = saha_sequence({2});
    REQUIRE(r.forms.size() == 1);
    CHECK(r.forms[0] == BinQF{3, 1, 2});
    CHECK(r.forms[0].det2() == 23);

    auto seq = saha_sequence({5, 6, 7, 11});
    REQUIRE(seq.forms.size() == 4);
    int64_t prev = 0;
    for (const auto& T : seq.forms) {
        CHECK(T.reduced());
        CHECK(T.r == 1);
        CHECK(is_prime_u64((uint64_t)T.det2()));
        CHECK(T.det2() % 4 == 3);  // -D = 1 mod 4, fundamental
        CHECK(T.det2() > prev);
        prev = T.det2();
    }

    auto capped = saha_sequence({5}, 1);
    CHECK(capped.capped);
}

TEST_CASE("saha empty input") {
    auto r = saha_sequence({});
    CHECK(r.forms.empty());
    CHECK_FALSE(r.capped);
}
