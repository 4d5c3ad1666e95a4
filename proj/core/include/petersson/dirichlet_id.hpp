#pragma once

#include <cstdint>
#include <optional>

#include "petersson/arith.hpp"

namespace petersson {

// Eigenvalue of V*_N V_N on E_{k,1}:
// lambda_N = sum_{t|N} psi(t) t^{k-2} sigma_{2k-3}(N/t).
Rat vnstar_vn_eigen(unsigned k, uint64_t N);

struct FactorizationReport {
    bool pass = true;
    std::optional<uint64_t> first_mismatch;
};

// Coefficient-by-coefficient check, up to N_max, of
// zeta(2s-2k+4) * sum lambda_N N^{-s}
//   = zeta(s) zeta(s-k+1) zeta(s-k+2) zeta(s-2k+3).
// mutate_shift perturbs the psi stream (negative control): psi built from
// zeta(s-1-mutate) zeta(s)/zeta(2s).
FactorizationReport verify_Z_identity(unsigned k, std::size_t N_max, unsigned mutate_shift = 0);

// Degree-1 factor check: conv(sigma_{k-1}, n^{k-2} sigma_{k-1}(n)) equals the
// four-fold zeta convolution, up to N_max.
FactorizationReport zarkovskaya_factor(unsigned k, std::size_t N_max);

}  // namespace petersson
