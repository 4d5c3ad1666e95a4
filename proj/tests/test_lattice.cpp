#include <doctest.h>

#include <random>

#include "petersson/binqf.hpp"
#include "petersson/lattice.hpp"

using namespace petersson;

TEST_CASE("binqf reduction") {
    BinQF id{1, 0, 1};
    CHECK(reduce(id).form == id);
    BinQF T{5, 4, 1};
    auto r = reduce(T);
    CHECK(r.form.reduced());
    CHECK(r.form.det2() == T.det2());
    CHECK(r.form == apply_gl2(T, r.transform));
    CHECK(r.form.content() == T.content());
    // content and determinant preserved on random positive forms
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        BinQF q{(int64_t)(rng() % 30 + 1), (int64_t)(rng() % 40) - 20, (int64_t)(rng() % 30 + 1)};
        if (!q.positive_definite()) continue;
        auto rr = reduce(q);
        CHECK(rr.form.reduced());
        CHECK(rr.form.det2() == q.det2());
        CHECK(rr.form.content() == q.content());
        CHECK(std::abs(gl2_det(rr.transform)) == 1);
    }
}

TEST_CASE("gram validation") {
    Lattice e8 = builtin_e8();
    CHECK(e8.gram.dim == 8);
    CHECK(e8.gram.det() == Int(1L));
    CHECK_NOTHROW(e8.gram.validate());
    Lattice d16 = builtin_d16plus();
    CHECK(d16.gram.det() == Int(1L));
    CHECK_NOTHROW(d16.gram.validate());
    Lattice ee = builtin_e8e8();
    CHECK_NOTHROW(ee.gram.validate());
}

TEST_CASE("short vectors on E8") {
    Lattice e8 = builtin_e8();
    auto roots = short_vectors(e8.gram, 1);
    CHECK(roots.size() == 241);  // 240 roots plus the zero vector
    auto zero_only = short_vectors(e8.gram, 0);
    CHECK(zero_only.size() == 1);
}

TEST_CASE("short vectors on E8+E8: direct sum additivity") {
    Lattice ee = builtin_e8e8();
    auto vecs = short_vectors(ee.gram, 1);
    CHECK(vecs.size() == 481);  // 2 * 240 roots plus zero
}

TEST_CASE("theta series of E8 equals E_4") {
    Lattice e8 = builtin_e8();
    Theta1 t = theta1_qexp(e8, 6);
    QExp e4 = eisenstein_qexp(4, 6);
    for (std::size_t n = 0; n < 6; ++n) {
        CHECK(t.theta.a(n) == e4.a(n));
        CHECK(t.cusp_part.a(n) == Rat(0));
    }
}

TEST_CASE("rank 16 theta series agree to prec 6") {
    Theta1 a = theta1_qexp(builtin_e8e8(), 6);
    Theta1 b = theta1_qexp(builtin_d16plus(), 6);
    CHECK(a.theta.a(1) == Rat(480));
    CHECK(a.theta.a(2) == Rat(61920));
    for (std::size_t n = 0; n < 6; ++n) CHECK(a.theta.a(n) == b.theta.a(n));
}

TEST_CASE("model path matches generic enumeration on E8") {
    Lattice e8 = builtin_e8();
    Lattice generic = e8;
    generic.model.reset();  // force the rational Fincke-Pohst route
    for (uint64_t m = 0; m <= 3; ++m) CHECK(rep_number(e8, m) == rep_number(generic, m));
    for (const BinQF& T : {BinQF{1, 0, 1}, BinQF{1, 1, 1}, BinQF{2, 1, 1}, BinQF{2, 2, 2}})
        CHECK(rep_number(e8, T) == rep_number(generic, T));
}

TEST_CASE("frozen representation numbers on E8") {
    Lattice e8 = builtin_e8();
    CHECK(rep_number(e8, (uint64_t)1) == 240);
    CHECK(rep_number(e8, (uint64_t)2) == 2160);
    CHECK(rep_number(e8, (uint64_t)3) == 6720);
    CHECK(rep_number(e8, BinQF{0, 0, 0}) == 1);
    CHECK(rep_number(e8, BinQF{1, 0, 1}) == 30240);   // 240 * 126
    CHECK(rep_number(e8, BinQF{1, 1, 1}) == 13440);   // 240 * 56
    CHECK(rep_number(e8, BinQF{1, 2, 1}) == 240);     // pairs (X, X-ish): B = 2 forces X = Y
}

TEST_CASE("GL2 invariance of rep numbers") {
    Lattice e8 = builtin_e8();
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        BinQF T{2, 1, 1};
        // random unimodular U as a word in the two generators
        GL2 U{{{1, 0}, {0, 1}}};
        for (int s = 0; s < 4; ++s) {
            int64_t t = (int64_t)(rng() % 3) - 1;
            GL2 S{{{1, t}, {0, 1}}};
            GL2 W{{{0, -1}, {1, 0}}};
            U = gl2_mul(U, (rng() % 2) ? S : W);
        }
        BinQF TU = apply_gl2(T, U);
        if (!TU.positive_definite()) continue;
        CHECK(rep_number(e8, TU) == rep_number(e8, T));
    }
}

TEST_CASE("direct sum convolution sanity: E8+E8 vector counts") {
    // A(E8+E8, m) = sum_j A(E8, j) A(E8, m - j)
    Lattice ee = builtin_e8e8(), e8 = builtin_e8();
    for (uint64_t m = 0; m <= 4; ++m) {
        uint64_t conv = 0;
        for (uint64_t j = 0; j <= m; ++j) conv += rep_number(e8, j) * rep_number(e8, m - j);
        CHECK(rep_number(ee, m) == conv);
    }
}

TEST_CASE("pair counts on rank 16 against the 16-dimensional generic path") {
    Lattice d16 = builtin_d16plus();
    Lattice generic = d16;
    generic.model.reset();
    for (const BinQF& T : {BinQF{1, 0, 1}, BinQF{1, 1, 1}})
        CHECK(rep_number(d16, T) == rep_number(generic, T));
}

TEST_CASE("primitive vector counts") {
    Lattice e8 = builtin_e8();
    CHECK(rep_primitive(e8, (uint64_t)1) == 240);
    CHECK(rep_primitive(e8, (uint64_t)4) == rep_number(e8, (uint64_t)4) - 240);
    CHECK(rep_primitive(e8, (uint64_t)0) == 0);
    for (uint64_t m = 1; m <= 12; ++m) {
        uint64_t sum = 0;
        for (uint64_t d = 1; d * d <= m; ++d)
            if (m % (d * d) == 0) sum += rep_primitive(e8, m / (d * d));
        CHECK(sum == rep_number(e8, m));
    }
}

TEST_CASE("saviour dual count, small cases") {
    Lattice e8 = builtin_e8();
    for (const BinQF& T : {BinQF{1, 0, 1}, BinQF{1, 0, 4}, BinQF{4, 0, 4}, BinQF{4, 2, 2}}) {
        SharpPair p = rep_sharp_both(e8, T);
        CHECK(p.mobius_side == p.direct_side);
        CHECK(rep_sharp(e8, T) >= rep_primitive(e8, T));
    }
}

TEST_CASE("lattice json round trip") {
    Lattice e8 = builtin_e8();
    Lattice back = lattice_from_json(lattice_to_json(e8.gram));
    CHECK(back.gram.dim == 8);
    CHECK(back.gram.gram == e8.gram.gram);
    CHECK_FALSE(back.model.has_value());
    CHECK_THROWS(lattice_from_json("{\"dim\": 2, \"gram\": [[1, 0], [0, 1]]}"));  // odd diagonal
}
