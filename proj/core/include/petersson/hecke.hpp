#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "petersson/jacobi.hpp"

namespace petersson {

// U_l: J_{k,m} -> J_{k,m l^2}, c'(n,r) = c(n, r/l) when l | r, else 0.
JacExp apply_U(const JacExp& phi, uint64_t l);

// V_N: J_{k,m} -> J_{k,mN}, c'(n,r) = sum_{d | (n,r,N)} d^{k-1} c(nN/d^2, r/d).
JacExp apply_V(const JacExp& phi, uint64_t N);

// U*_l: J_{k,m l^2} -> J_{k,m},
// c'(D,r) = l^{-1} sum_{r' mod 2ml, r' = r mod 2m} c(l^2 D, l r').
JacExp apply_U_star(const JacExp& psi, uint64_t l);

// V*_N: J_{k,N} -> J_{k,1},
// c'(D) = sum_{d|N} d^{k-2} sum_{s mod 2d, s^2 = D mod 4d} c(D N^2/d^2, N s/d).
// strict_paper reproduces the printed variant with interior c(N^2/d^2, Ns/d)
// (coefficients at invalid support points read as 0); kept for comparison only.
JacExp apply_V_star(const JacExp& psi, bool strict_paper = false);

struct PhiChain {
    JacExp phi1, phi2, phi3, phi4;
};

// phi1 = E_{k,1}|V_{q1}, phi2 = phi1|U_{l1}, phi3 = phi2|U*_{l2},
// phi4 = phi3|V*_{q2}; requires q1 l1^2 = q2 l2^2.
PhiChain phi_chain(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2, uint64_t l2,
                   std::size_t e_prec);

// Degenerate coefficients c_{phi_j}(0, r) from the composed operators; r is
// read in the index of each phi_j (0 when 4 m_j does not divide r^2).
std::array<Rat, 4> phi_chain_degenerate(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2,
                                        uint64_t l2, int64_t r);

// Closed degenerate forms, with the congruence in the last stage reconstructed
// from the operators (r' runs mod 2 q2 l2 with r' = q2 s / x mod 2 q2).
Rat phi1_closed(unsigned k, uint64_t q1, int64_t r);
Rat phi2_closed(unsigned k, uint64_t q1, uint64_t l1, int64_t r);
Rat phi3_closed(unsigned k, uint64_t q1, uint64_t l1, uint64_t l2, int64_t r);
Rat phi4_closed(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2, uint64_t l2);

struct EigenScanRow {
    uint64_t q1, l1, q2, l2;
    unsigned k;
    Rat value;     // c_{phi4}(0,0)
    double ratio;  // value / (q1 q2)^(k - 5/4)
};

// All factorization pairs q1 l1^2 = q2 l2^2 = m over the given m values.
std::vector<EigenScanRow> eigen_bound_scan(unsigned k, const std::vector<uint64_t>& m_list);

// JSON list of {q1, q2, l1, l2, k, value: "p/q", ratio: decimal}.
std::string eigen_scan_to_json(const std::vector<EigenScanRow>& rows);

// Factorizations m = q l^2 as (q, l) pairs.
std::vector<std::pair<uint64_t, uint64_t>> square_factorizations(uint64_t m);

}  // namespace petersson
