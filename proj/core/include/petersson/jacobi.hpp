#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "petersson/arith.hpp"
#include "petersson/rat.hpp"

namespace petersson {

// Fourier coefficients of Jacobi forms depend only on D = 4mn - r^2 and
// r mod 2m, with c(n,r) = c(n,-r) for even weight. Expansions are stored
// per class, keyed by (D, rho) with rho the canonical residue in [0, m].
struct JacClass {
    int64_t D = 0;      // 4mn - r^2 >= 0
    uint64_t rho = 0;   // min(r mod 2m, 2m - r mod 2m)
    auto operator<=>(const JacClass&) const = default;
};

class JacExp {
public:
    JacExp() = default;
    JacExp(int k, uint64_t m, std::size_t prec) : k_(k), m_(m), prec_(prec) {}

    int weight() const { return k_; }
    uint64_t index() const { return m_; }
    std::size_t prec() const { return prec_; }
    void set_prec(std::size_t p) { prec_ = p; }

    JacClass canonical(int64_t D, int64_t r) const;
    // Smallest n with a representative (n, r) of the class: (D + rho^2)/4m.
    int64_t min_rep_n(const JacClass& c) const;

    bool has_class(const JacClass& c) const { return coeffs_.count(c) != 0; }
    std::optional<Rat> class_if_present(int64_t D, int64_t r) const;
    // Throws PrecisionError when the class is beyond what was computed.
    const Rat& class_at(int64_t D, int64_t r) const;
    // Coefficient accessor in (n, r) coordinates; zero outside the support cone.
    Rat c(int64_t n, int64_t r) const;

    // Write with consistency check: rewriting a class with a different value
    // trips InvariantViolation.
    void set_class(int64_t D, int64_t r, const Rat& v);

    const std::map<JacClass, Rat>& classes() const { return coeffs_; }

    // All rho in [0, m] with rho^2 = 0 mod 4m (the degenerate slots).
    std::vector<uint64_t> degenerate_rhos() const;

    // Every class with min representative n < prec must be stored and keys valid.
    void check_invariants() const;

    bool same_shape(const JacExp& o) const { return k_ == o.k_ && m_ == o.m_; }

private:
    int k_ = 0;
    uint64_t m_ = 1;
    std::size_t prec_ = 0;
    std::map<JacClass, Rat> coeffs_;
};

JacExp jac_add(const JacExp& a, const JacExp& b);
JacExp jac_scale(const Rat& c, const JacExp& a);
bool jac_equal_on_common(const JacExp& a, const JacExp& b);

// Jacobi Eisenstein series of index 1, c(n,r) = H(k-1, 4n-r^2)/H(k-1, 0).
JacExp jac_eis_1(unsigned k, std::size_t prec);

// E_{k,m} = g_k(m)^{-1} sum_{t^2|m} mu(t) E_{k,1} | V_{m/t^2} U_t.
JacExp jac_eis_m(unsigned k, uint64_t m, std::size_t prec);

// Degenerate coefficient profile of E_{k,m,s}: 0, 1/2 or 1.
Rat eis_degenerate(unsigned k, uint64_t m, uint64_t s, int64_t r);

// m-th Fourier-Jacobi coefficient of the degree-2 Siegel Eisenstein series,
// e_{k,m} = c_k sum_{d^2|m} g_k(m/d^2) E_{k,m/d^2} | U_d with c_k = 2/zeta(1-k).
JacExp siegel_fj(unsigned k, uint64_t m, std::size_t prec);

Rat c_k_constant(unsigned k);  // 2/zeta(1-k)

bool is_cuspidal(const JacExp& phi);

// Theta decomposition: phi = sum_{mu mod 2m} h_{m,mu} theta_{m,mu}; component
// h_{m,mu} carries c_phi(n, mu) at exponent n - mu^2/4m = D/4m.
struct ThetaComponents {
    int k = 0;
    uint64_t m = 1;
    std::size_t prec = 0;
    // component[mu] = list of (D, coefficient), D = 4mn - mu^2, ascending.
    std::vector<std::vector<std::pair<int64_t, Rat>>> component;
};

ThetaComponents theta_decompose(const JacExp& phi);
JacExp theta_reassemble(const ThetaComponents& tc);

std::string jacexp_to_json(const JacExp& phi);
JacExp jacexp_from_json(const std::string& text);

}  // namespace petersson
