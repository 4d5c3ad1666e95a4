#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "petersson/int.hpp"
#include "petersson/rat.hpp"

namespace petersson {

using std::int64_t;
using std::uint64_t;

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);
std::vector<uint64_t> divisors(uint64_t n);

int moebius(uint64_t n);
Int sigma_pow(unsigned e, uint64_t n);  // sum of d^e over d | n

// Bernoulli number B_n in the convention B_1 = -1/2. Memoized.
Rat bernoulli(unsigned n);

// zeta(1-k) = -B_k/k for even k >= 2.
Rat zeta_neg(unsigned k);

// g_k(m) = sum over y^2 | m of mu(y) sigma_{k-1}(m/y^2); integral.
Int g_k(unsigned k, uint64_t m);
// Euler-product form m^{k-1} prod_{p|m} (1 + p^{1-k}), used as the cross-check.
Rat g_k_product_form(unsigned k, uint64_t m);

// Full Kronecker symbol (a|b), all integer pairs.
int kronecker(const Int& a, const Int& b);
int kronecker(int64_t a, int64_t b);

// Splits Dd (= 0 or 1 mod 4, Dd != 0) as D*f^2 with D a fundamental
// discriminant (or D = 1). Returns {D, f}.
std::pair<int64_t, uint64_t> fundamental_decomp(int64_t Dd);

// Generalized Bernoulli number B_{n,chi_D} for the Kronecker character of a
// fundamental discriminant D (D = 1 gives the trivial character mod 1).
Rat gen_bernoulli(unsigned n, int64_t D);

// Cohen's class-number function H(r, N). Returns 0 when (-1)^r N is
// 2 or 3 mod 4. Memoized; backed by the on-disk coefficient cache.
Rat cohen_H(unsigned r, uint64_t N);

// #{s mod 2x : s^2 = 0 mod 4x} = x1 where x = x0*x1^2, x0 squarefree.
uint64_t count_sqrt_zero(uint64_t x);
uint64_t count_sqrt_zero_bruteforce(uint64_t x);

uint64_t square_part_root(uint64_t x);  // the x1 above
uint64_t squarefree_kernel(uint64_t x); // the x0 above

bool is_prime_u64(uint64_t n);

// Dirichlet-series coefficient sequence a(1..N).
struct ArithSeq {
    std::vector<Rat> values;  // values[i] = a(i+1)

    ArithSeq() = default;
    explicit ArithSeq(std::size_t n) : values(n) {}
    std::size_t length() const { return values.size(); }
    const Rat& at(std::size_t n) const { return values.at(n - 1); }
    Rat& at(std::size_t n) { return values.at(n - 1); }
    bool operator==(const ArithSeq& o) const = default;
};

// (a*b)(n) = sum_{d|n} a(d) b(n/d); lengths must match.
ArithSeq dirichlet_mul(const ArithSeq& a, const ArithSeq& b);

ArithSeq seq_unit(std::size_t n);              // 1, 0, 0, ...
ArithSeq seq_ones(std::size_t n);              // coefficients of zeta(s)
ArithSeq seq_npow(unsigned e, std::size_t n);  // coefficients of zeta(s-e)
ArithSeq seq_moebius(std::size_t n);           // coefficients of 1/zeta(s)
// Coefficients of 1/zeta(2s): mu(t) at n = t^2, else 0.
ArithSeq seq_inv_zeta_2s(std::size_t n);
// Coefficients of zeta(2s-e): t^e at n = t^2, else 0.
ArithSeq seq_zeta_2s_shift(unsigned e, std::size_t n);

// psi(t) with sum psi(t) t^-s = zeta(s-1) zeta(s) / zeta(2s), computed by
// convolution of the three streams.
ArithSeq psi_seq(std::size_t n);
// Independent route: psi(n) = sum_{d^2|n} mu(d) sigma_1(n/d^2).
Rat psi_direct(uint64_t n);

}  // namespace petersson
