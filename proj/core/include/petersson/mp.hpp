#pragma once

#include <mpfr.h>

#include <string>

namespace petersson {

// Default precision for newly constructed Real values (bits).
void set_mp_bits(mpfr_prec_t bits);
mpfr_prec_t mp_bits();

// Arbitrary-precision real, value semantics over mpfr_t.
class Real {
public:
    Real() { mpfr_init2(x_, mp_bits()); mpfr_set_zero(x_, 1); }
    Real(double v) { mpfr_init2(x_, mp_bits()); mpfr_set_d(x_, v, MPFR_RNDN); }
    Real(long v) { mpfr_init2(x_, mp_bits()); mpfr_set_si(x_, v, MPFR_RNDN); }
    Real(int v) : Real((long)v) {}
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, mp_bits()); mpfr_swap(x_, o.x_); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a) { Real r; mpfr_neg(r.x_, a.x_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(std::size_t digits = 30) const;

private:
    mpfr_t x_;
};

Real mp_abs(const Real& a);
Real mp_sqrt(const Real& a);
Real mp_exp(const Real& a);
Real mp_log(const Real& a);
Real mp_sin(const Real& a);
Real mp_cos(const Real& a);
Real mp_pow(const Real& base, const Real& e);  // base > 0
Real mp_pi();
Real mp_max(const Real& a, const Real& b);

struct Cplx {
    Real re, im;

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r, double i = 0.0) : re(r), im(i) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx conj() const { return {re, -im}; }
};

Real mp_abs(const Cplx& z);
Cplx mp_exp(const Cplx& z);
// t^c for real t > 0, complexified exponent.
Cplx mp_pow(const Real& t, const Cplx& c);

}  // namespace petersson
