#include <doctest.h>

#include "petersson/dirichlet_id.hpp"

using namespace petersson;

TEST_CASE("vnstar_vn_eigen") {
    CHECK(vnstar_vn_eigen(8, 1) == Rat(1));
    // N = p: sigma_{2k-3}(p) + (p+1) p^{k-2}
    for (unsigned k : {8u, 12u})
        for (uint64_t p : {2ull, 3ull, 5ull}) {
            Rat expect = Rat(sigma_pow(2 * k - 3, p)) +
                         Rat((long)(p + 1)) * Rat(pow(Int((unsigned long)p), k - 2));
            CHECK(vnstar_vn_eigen(k, p) == expect);
        }
}

TEST_CASE("lambda is multiplicative") {
    for (unsigned k : {8u, 10u}) {
        CHECK(vnstar_vn_eigen(k, 6) == vnstar_vn_eigen(k, 2) * vnstar_vn_eigen(k, 3));
        CHECK(vnstar_vn_eigen(k, 35) == vnstar_vn_eigen(k, 5) * vnstar_vn_eigen(k, 7));
        CHECK(vnstar_vn_eigen(k, 12) == vnstar_vn_eigen(k, 4) * vnstar_vn_eigen(k, 3));
    }
}

TEST_CASE("Z identity coefficientwise") {
    for (unsigned k : {8u, 10u, 12u}) {
        auto r = verify_Z_identity(k, 120);
        CHECK(r.pass);
    }
}

TEST_CASE("Z identity mutation control") {
    auto r = verify_Z_identity(8, 60, 1);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(*r.first_mismatch <= 4);
}

TEST_CASE("zarkovskaya factorization") {
    auto r = zarkovskaya_factor(8, 120);
    CHECK(r.pass);
    // prime coefficient: 1 + p^{k-1} + p^{k-2} + p^{2k-3} on both sides
    unsigned k = 8;
    uint64_t p = 7;
    ArithSeq sig = dirichlet_mul(seq_ones(8), seq_npow(k - 1, 8));
    Rat expect = Rat(1) + Rat(pow(Int((unsigned long)p), k - 1)) +
                 Rat(pow(Int((unsigned long)p), k - 2)) + Rat(pow(Int((unsigned long)p), 2 * k - 3));
    Rat conv_p = sig.at(p) + Rat(pow(Int((unsigned long)p), k - 2)) * sig.at(p);
    CHECK(conv_p == expect);
}
