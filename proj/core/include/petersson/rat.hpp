#pragma once

#include <gmp.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "petersson/int.hpp"

namespace petersson {

// Exact rational scalar; always canonical (gcd(|num|,den)=1, den>0).
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rat(int v) : Rat(static_cast<long>(v)) {}
    Rat(long num, long den) {
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rat(const Int& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    // Parses "p/q" or "p".
    explicit Rat(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0)
            throw std::invalid_argument("Rat: bad literal '" + s + "'");
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend auto operator<=>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <=> 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sgn() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Int num() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Int den() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    double to_double() const { return mpq_get_d(q_); }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r;
        mpq_inv(r.q_, q_);
        return r;
    }

    // GMP canonical form: "p/q", or just "p" when q == 1.
    std::string str() const {
        std::string n = num().str();
        if (is_integer()) return n;
        return n + "/" + den().str();
    }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& v);

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) return rat_pow(base, -e).inv();
    Rat r(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

}  // namespace petersson
