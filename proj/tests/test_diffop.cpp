#include <doctest.h>

#include "petersson/diffop.hpp"

using namespace petersson;

namespace {

SamplePoint point(double x1, double y1, double x2, double y2, double x4, double tt, unsigned k,
                  unsigned N) {
    SamplePoint p;
    p.z1 = Cplx{x1, y1};
    p.z2 = Cplx{x2, y2};
    p.z4 = Cplx{x4, y2 * y2 / y1 + tt};
    p.k = k;
    p.N = N;
    return p;
}

bool rel_below(const Cplx& a, const Cplx& b, double tol) {
    Real scale = mp_max(mp_abs(a), mp_abs(b));
    if (scale.to_double() == 0) return true;
    return (mp_abs(a - b) / scale).to_double() < tol;
}

}  // namespace

TEST_CASE("L generators on constants vanish where expected") {
    set_mp_bits(256);
    ExpTestFn constant{Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
    SamplePoint p = point(0.1, 1.0, -0.2, 0.4, 0.3, 0.8, 2, 1);
    CHECK(mp_abs(eval_L(LGen::L1, constant, p)).to_double() == 0.0);
    ExpTestFn no_z2{Cplx{0.5, 0.1}, Cplx{-0.3, 0.2}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
    CHECK(mp_abs(eval_L(LGen::L2, no_z2, p)).to_double() == 0.0);
}

TEST_CASE("L generators match finite differences") {
    set_mp_bits(256);
    ExpTestFn h{Cplx{0.7, -0.2}, Cplx{-0.4, 0.3}, Cplx{0.5, 0.6}, Cplx{-0.8, 0.1}};
    SamplePoint p = point(0.15, 1.2, -0.3, 0.7, 0.25, 0.9, 2, 1);
    for (LGen g : {LGen::L1, LGen::L2, LGen::L3, LGen::L3p, LGen::L4})
        CHECK(rel_below(eval_L(g, h, p), fd_L(g, h, p), 1e-20));
}

TEST_CASE("phi1 on h = 1, k = 0: (Rt - R^2 t^2) e^{Rt}") {
    set_mp_bits(256);
    ExpTestFn one{Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
    SamplePoint p = point(0.2, 1.1, 0.1, 0.5, -0.4, 0.7, 0, 1);
    Real t = p.t(), R = p.R();
    Real expect = (R * t - R * R * t * t) * mp_exp(R * t);
    CHECK(rel_below(eval_phi1(one, p), Cplx{expect, Real(0L)}, 1e-25));
}

TEST_CASE("phi1 and phi2 match finite differences") {
    set_mp_bits(256);
    ExpTestFn h{Cplx{0.3, 0.2}, Cplx{-0.1, 0.4}, Cplx{0.6, -0.5}, Cplx{0.2, 0.3}};
    SamplePoint p = point(-0.2, 0.9, 0.3, -0.6, 0.1, 1.1, 2, 1);
    CHECK(rel_below(eval_phi1(h, p), fd_phi1(h, p), 1e-20));
    CHECK(rel_below(eval_phi2(h, p), fd_phi2(h, p), 1e-20));
}

TEST_CASE("t_decompose recovers an exact three-power model") {
    set_mp_bits(256);
    unsigned k = 2;
    Real R = Real(-4L) * mp_pi();
    std::vector<std::pair<Real, Cplx>> samples;
    Cplx c0{1.5, -0.25}, c1{0.0, 2.0}, c2{-3.0, 0.5};
    for (int i = 0; i < 6; ++i) {
        Real t = Real(1L) / Real(2L) + Real((long)i) / Real(4L);
        Cplx poly = c0 + c1 * Cplx{t, Real(0L)} + c2 * Cplx{t * t, Real(0L)};
        Cplx tk = mp_pow(t, Cplx(Real((long)k)));
        Real ert = mp_exp(R * t);
        Cplx v = poly * tk;
        samples.push_back({t, Cplx{v.re * ert, v.im * ert}});
    }
    TDecomposition d = t_decompose(samples, k, R);
    CHECK(rel_below(d.c0, c0, 1e-30));
    CHECK(rel_below(d.c1, c1, 1e-30));
    CHECK(rel_below(d.c2, c2, 1e-30));
    CHECK(d.residual.to_double() < 1e-30);
    samples[1].first = samples[0].first;  // ill-conditioned
    CHECK_THROWS(t_decompose(samples, k, R));
}

TEST_CASE("maass t-decomposition has no t^k term") {
    set_mp_bits(256);
    ExpTestFn h{Cplx{0.4, 0.3}, Cplx{-0.2, 0.1}, Cplx{0.3, -0.4}, Cplx{0.1, 0.2}};
    SamplePoint p = point(0.1, 1.0, -0.15, 0.5, 0.2, 0.6, 2, 1);
    auto samples = sample_in_t(h, p, 6, &eval_maass);
    TDecomposition d = t_decompose(samples, p.k, p.R());
    CHECK(d.residual.to_double() < 1e-25);
    Real t = p.t();
    Real scale = mp_max(mp_abs(d.c1) * t, mp_max(mp_abs(d.c2) * t * t, mp_abs(eval_h(h, p))));
    CHECK((mp_abs(d.c0) / scale).to_double() < 1e-25);
}

TEST_CASE("residual kernel identity") {
    set_mp_bits(256);
    CHECK(residual_kernel_error(4, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.2, 1.3}).to_double() <
          1e-25);
    CHECK(residual_kernel_error(12, Cplx{0.8, -0.4}, Cplx{-0.6, 0.9}, Cplx{-0.3, 0.7}).to_double() <
          1e-25);
    CHECK(residual_kernel_error(4, Cplx{1.2, 0.1}, Cplx{0.3, -1.0}, Cplx{0.5, 1.8}).to_double() <
          1e-25);
}
