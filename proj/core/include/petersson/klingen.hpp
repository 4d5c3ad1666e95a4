#pragma once

#include "petersson/binqf.hpp"
#include "petersson/jacobi.hpp"
#include "petersson/qexp.hpp"

namespace petersson {

// Eisenstein part of the m-th Fourier-Jacobi coefficient of the Klingen
// Eisenstein series attached to the cusp form f, by three independent routes.

// sum_{t^2|m} g_f(m/t^2) E_{k,m/t^2} | U_t
JacExp script_E_via_E2e(const QExp& f, uint64_t m, std::size_t prec);

// m = a b^2, a squarefree:
// sum_{lambda|b} a_f(a lambda^2) sum_{d: d lambda | b} mu(d) E_{k, a lambda^2 d^2} | U_{b/(lambda d)}
JacExp script_E_via_ekmfor(const QExp& f, uint64_t m, std::size_t prec);

// c_k^{-1} sum_{t^2|m} alpha_m(t; f) e_{k,m/t^2} | U_t
JacExp script_E_via_e2E(const QExp& f, uint64_t m, std::size_t prec);

// Main term of the Fourier-coefficient decomposition:
// c_k^{-1} sum_{t^2|m, t|r} alpha_m(t; phiF) a_2^k((n, r/2t; r/2t, m/t^2)).
Rat genasy_main_term(const QExp& phiF, const BinQF& T, unsigned k);

// JacExp JSON with an extra "route" tag ("E2e" | "ekmfor" | "e2E").
std::string script_E_to_json(const JacExp& phi, const std::string& route);

}  // namespace petersson
