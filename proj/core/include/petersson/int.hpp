#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace petersson {

// Arbitrary-precision integer, value semantics over mpz_t.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    Int(int v) : Int(static_cast<long>(v)) {}
    Int(unsigned long v) { mpz_init_set_ui(z_, v); }
    explicit Int(const std::string& s) { mpz_init_set_str(z_, s.c_str(), 10); }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
    // Truncated toward zero, like C integer division.
    friend Int operator/(const Int& a, const Int& b) { Int r; mpz_tdiv_q(r.z_, a.z_, b.z_); return r; }
    friend Int operator%(const Int& a, const Int& b) { Int r; mpz_tdiv_r(r.z_, a.z_, b.z_); return r; }

    Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend auto operator<=>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <=> 0; }
    friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
    friend auto operator<=>(const Int& a, long b) { return mpz_cmp_si(a.z_, b) <=> 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sgn() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }

    std::string str() const {
        std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
        mpz_get_str(buf.data(), 10, z_);
        return std::string(buf.data());
    }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
Int pow(const Int& base, unsigned long e);
Int isqrt(const Int& a);  // floor square root, a >= 0
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
bool is_probable_prime(const Int& n);

inline Int pow_u64(std::uint64_t base, unsigned e) { return pow(Int((unsigned long)base), e); }

}  // namespace petersson
