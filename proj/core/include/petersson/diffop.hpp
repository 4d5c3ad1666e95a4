#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "petersson/jet.hpp"
#include "petersson/mp.hpp"

namespace petersson {

// h(z1, z1b, z2, z2b) = exp(alpha z1 + alpha_b z1b + beta z2 + beta_b z2b);
// every mixed partial is an explicit monomial multiple of h.
struct ExpTestFn {
    Cplx alpha, alpha_b, beta, beta_b;
};

// A point of H2 in coordinates (z1, z2, z4); conjugates are honest, so
// y1 > 0 and t = y4 - y2^2/y1 > 0. R = -4 pi N.
struct SamplePoint {
    Cplx z1, z2, z4;
    unsigned k = 0;
    unsigned N = 1;

    Real y1() const { return z1.im; }
    Real y2() const { return z2.im; }
    Real y4() const { return z4.im; }
    Real t() const { return y4() - y2() * y2() / y1(); }
    Real R() const { return Real(-4L) * mp_pi() * Real((long)N); }
};

enum class LGen { L1, L2, L3, L3p, L4 };

// Closed-form evaluation of the ring generators on h at p.
Cplx eval_L(LGen which, const ExpTestFn& h, const SamplePoint& p);
// (L1 + r)(h) with r = -(k-1/2)(k-3/2).
Cplx eval_L1_plus_r(const ExpTestFn& h, const SamplePoint& p, unsigned k);

// Value of h at the point.
Cplx eval_h(const ExpTestFn& h, const SamplePoint& p);
// Value of H = h t^k e^{Rt}.
Cplx eval_H(const ExpTestFn& h, const SamplePoint& p);

// Phi_1(H), Phi_2(H) and the Maass operator
// M(H) = Phi_2(H) + (k-1/2)(k-3/2)(Phi_1(H) + k(k-2) H), all exact via jets.
Cplx eval_phi1(const ExpTestFn& h, const SamplePoint& p);
Cplx eval_phi2(const ExpTestFn& h, const SamplePoint& p);
Cplx eval_maass(const ExpTestFn& h, const SamplePoint& p);

// Finite-difference oracle: the same quantities through high-order central
// stencils on the plain evaluators (step 2^-32, order 8).
Cplx fd_phi1(const ExpTestFn& h, const SamplePoint& p);
Cplx fd_phi2(const ExpTestFn& h, const SamplePoint& p);
Cplx fd_L(LGen which, const ExpTestFn& h, const SamplePoint& p);

struct TDecomposition {
    Cplx c0, c1, c2;
    Real residual;  // relative misfit of the three-power model on extra samples
};

// Fits values(t_i) = (c0 + c1 t + c2 t^2) t^k e^{Rt} through >= 4 samples
// sharing (tau, z); throws on nearly coincident t values.
TDecomposition t_decompose(const std::vector<std::pair<Real, Cplx>>& samples, unsigned k,
                           const Real& R);

// Generates sample values of op(H) at shifted copies of p that differ only
// in Im z4 (hence in t).
std::vector<std::pair<Real, Cplx>> sample_in_t(const ExpTestFn& h, const SamplePoint& p,
                                               std::size_t count,
                                               Cplx (*op)(const ExpTestFn&, const SamplePoint&));

// |D_k(f gbar y^k) - K(f,g)| / scale for f = e^{a tau}, g = e^{b tau};
// the left side runs through jets, the right side is the closed kernel.
Real residual_kernel_error(unsigned k, const Cplx& a, const Cplx& b, const Cplx& tau);

}  // namespace petersson
