#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "petersson/binqf.hpp"
#include "petersson/lattice.hpp"
#include "petersson/rat.hpp"

namespace petersson {

// Fourier coefficient a_2^k(T) of the degree-2 Siegel Eisenstein series of
// weight k (constant term 1), read off the Fourier-Jacobi coefficients.
// Class function: computed on the reduced form. Memoized per (k, index).
Rat a2k(const BinQF& T, unsigned k);

// Representatives G of GL2(Z)\M2(Z) (Hermite normal form, upper triangular)
// with T[G^-1] half-integral positive; the identity class comes first.
// Returns pairs (G, T[G^-1]).
std::vector<std::pair<GL2, BinQF>> gl2_divisor_classes(const BinQF& T);

// Primitive Siegel coefficient a_2^k(T)^*, by inversion of
// a_2^k(T) = sum_G a_2^k(T[G^-1])^*.
Rat a2k_primitive(const BinQF& T, unsigned k);

// Main term M(S,T) = sum_{t^2|m, t|r} alpha_m(t; theta^1(S,.)) a_2^k(...)
// with alpha_m(t) = sum_{l|t} mu(t/l) A*(S, m/l^2) / g_k(m/l^2).
Rat main_term_M(const Lattice& L, const BinQF& T);

struct RepnoRow {
    BinQF T;
    int64_t det2;
    uint64_t rep;      // A(S,T)
    Rat main;          // c_k^{-1} M(S,T)
    Rat diff;          // A - main
    double mst_ratio;  // M sigma_{k-1}(minT) max(log minT, 1) / (A(S,minT) detT^{k-3/2})
};

// All reduced positive T with det(2T) <= det2_max (r >= 0 representatives).
std::vector<BinQF> reduced_forms_up_to(int64_t det2_max);

std::vector<RepnoRow> repno_report(const Lattice& L, const std::vector<BinQF>& scan);

struct HauptsatzResult {
    bool pass;
    std::vector<std::pair<BinQF, Rat>> failures;  // (T, weighted sum - a2k)
};

// sum_nu m_nu A(S_nu, T) = a_2^k(T) over the scan; weights must sum to 1.
HauptsatzResult hauptsatz_check(const std::vector<std::pair<Lattice, Rat>>& genus,
                                const std::vector<BinQF>& scan);
// Degree-1 version: sum_nu m_nu A(S_nu, m) = E_k coefficient, m < prec.
HauptsatzResult hauptsatz_check_degree1(const std::vector<std::pair<Lattice, Rat>>& genus,
                                        std::size_t prec);

struct SahaResult {
    std::vector<BinQF> forms;  // T_j = (n_j, 1; ...) with 4 m_j n_j - 1 prime, increasing
    bool capped = false;       // search cap hit; forms holds the partial output
};

SahaResult saha_sequence(const std::vector<uint64_t>& m_list, uint64_t cap = 1000000);

}  // namespace petersson
