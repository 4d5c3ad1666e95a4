#include "petersson/mp.hpp"

#include <atomic>
#include <vector>

namespace petersson {

namespace {
std::atomic<mpfr_prec_t> g_bits{256};
}

void set_mp_bits(mpfr_prec_t bits) { g_bits.store(bits); }
mpfr_prec_t mp_bits() { return g_bits.load(); }

std::string Real::str(std::size_t digits) const {
    mpfr_exp_t e;
    std::vector<char> buf(digits + 16);
    mpfr_get_str(buf.data(), &e, 10, digits, x_, MPFR_RNDN);
    std::string mant(buf.data());
    return mant + "e" + std::to_string(e);
}

Real mp_abs(const Real& a) { Real r; mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_sqrt(const Real& a) { Real r; mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_exp(const Real& a) { Real r; mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_log(const Real& a) { Real r; mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_sin(const Real& a) { Real r; mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_cos(const Real& a) { Real r; mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real mp_pow(const Real& base, const Real& e) { Real r; mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN); return r; }
Real mp_pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real mp_max(const Real& a, const Real& b) { return a < b ? b : a; }

Real mp_abs(const Cplx& z) { return mp_sqrt(z.re * z.re + z.im * z.im); }

Cplx mp_exp(const Cplx& z) {
    Real m = mp_exp(z.re);
    return {m * mp_cos(z.im), m * mp_sin(z.im)};
}

Cplx mp_pow(const Real& t, const Cplx& c) {
    Real lt = mp_log(t);
    return mp_exp(Cplx{c.re * lt, c.im * lt});
}

}  // namespace petersson
