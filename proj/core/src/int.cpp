#include "petersson/int.hpp"

#include <ostream>

namespace petersson {

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

Int abs(const Int& a) {
    Int r;
    mpz_abs(r.raw(), a.raw());
    return r;
}

Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.raw(), base.raw(), e);
    return r;
}

Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.raw(), a.raw());
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.raw(), 40) != 0; }

}  // namespace petersson
