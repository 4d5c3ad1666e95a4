#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petersson/arith.hpp"
#include "petersson/rat.hpp"

namespace petersson {

// Level-1 modular form q-expansion truncated below `prec`.
struct QExp {
    int weight = 0;
    std::size_t prec = 0;            // exclusive bound on stored exponents
    std::vector<Rat> coeffs;         // a(0) ... a(prec-1)
    bool cuspidal = false;

    QExp() = default;
    QExp(int k, std::size_t p, bool cusp = false)
        : weight(k), prec(p), coeffs(p), cuspidal(cusp) {}

    const Rat& a(std::size_t n) const;  // throws PrecisionError past prec
    void check_invariants() const;

    bool operator==(const QExp& o) const {
        return weight == o.weight && prec == o.prec && coeffs == o.coeffs;
    }
};

QExp qexp_add(const QExp& f, const QExp& g);
QExp qexp_scale(const Rat& c, const QExp& f);
QExp qexp_mul(const QExp& f, const QExp& g);  // prec = min of inputs

// E_k normalized with constant term 1: a(n) = -(2k/B_k) sigma_{k-1}(n).
QExp eisenstein_qexp(unsigned k, std::size_t prec);

// Delta = q prod (1-q^n)^24, weight 12, cuspidal.
QExp delta_qexp(std::size_t prec);

// Echelonized (Victor Miller style) basis of the weight-k cusp space,
// leading exponents 1..dim.
std::vector<QExp> cusp_basis(unsigned k, std::size_t prec);

// g_f(m) = sum_{d^2 | m} mu(d) a_f(m/d^2).
Rat g_f(const QExp& f, uint64_t m);

// alpha_m(t; f) = sum_{l | t} mu(t/l) g_f(m/l^2) / g_k(m/l^2); needs t^2 | m.
Rat alpha_m(const QExp& f, unsigned k, uint64_t m, uint64_t t);

std::string qexp_to_json(const QExp& f);
QExp qexp_from_json(const std::string& text);

}  // namespace petersson
