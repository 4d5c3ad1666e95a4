#include "petersson/klingen.hpp"

#include <stdexcept>

#include <json.hpp>

#include "petersson/errors.hpp"
#include "petersson/hecke.hpp"
#include "petersson/repno.hpp"

namespace petersson {

namespace {

unsigned weight_of(const QExp& f) {
    if (f.weight < 4 || f.weight % 2 != 0)
        throw std::domain_error("script_E: even weight >= 4 cusp form expected");
    return (unsigned)f.weight;
}

}  // namespace

JacExp script_E_via_E2e(const QExp& f, uint64_t m, std::size_t prec) {
    unsigned k = weight_of(f);
    JacExp acc((int)k, m, prec);
    bool first = true;
    for (auto [mt, t] : square_factorizations(m)) {
        JacExp term = jac_scale(g_f(f, mt), apply_U(jac_eis_m(k, mt, prec), t));
        acc = first ? term : jac_add(acc, term);
        first = false;
    }
    return acc;
}

JacExp script_E_via_ekmfor(const QExp& f, uint64_t m, std::size_t prec) {
    unsigned k = weight_of(f);
    uint64_t b = square_part_root(m), a = m / (b * b);
    JacExp acc((int)k, m, prec);
    bool first = true;
    for (uint64_t lambda : divisors(b)) {
        Rat af = f.a(a * lambda * lambda);
        for (uint64_t d = 1; d * lambda <= b; ++d) {
            if (b % (d * lambda) != 0) continue;
            int mu = moebius(d);
            if (mu == 0) continue;
            JacExp term = apply_U(jac_eis_m(k, a * lambda * lambda * d * d, prec),
                                  b / (lambda * d));
            term = jac_scale((mu > 0) ? af : -af, term);
            acc = first ? term : jac_add(acc, term);
            first = false;
        }
    }
    return acc;
}

JacExp script_E_via_e2E(const QExp& f, uint64_t m, std::size_t prec) {
    unsigned k = weight_of(f);
    Rat ck_inv = c_k_constant(k).inv();
    JacExp acc((int)k, m, prec);
    bool first = true;
    for (auto [mt, t] : square_factorizations(m)) {
        JacExp term = jac_scale(alpha_m(f, k, m, t), apply_U(siegel_fj(k, mt, prec), t));
        acc = first ? term : jac_add(acc, term);
        first = false;
    }
    return jac_scale(ck_inv, acc);
}

std::string script_E_to_json(const JacExp& phi, const std::string& route) {
    nlohmann::json j = nlohmann::json::parse(jacexp_to_json(phi));
    j["route"] = route;
    return j.dump();
}

Rat genasy_main_term(const QExp& phiF, const BinQF& T, unsigned k) {
    if (!T.positive_definite()) throw std::domain_error("genasy_main_term: T must be positive");
    if ((uint64_t)T.m >= phiF.prec)
        throw PrecisionError("genasy_main_term: phiF precision below index m");
    uint64_t m = (uint64_t)T.m;
    Rat total(0);
    for (auto [mt, t] : square_factorizations(m)) {
        if (t > 1 && T.r % (int64_t)t != 0) continue;  // U_t support: t | r
        BinQF Tt{T.n, T.r / (int64_t)t, (int64_t)mt};
        total += alpha_m(phiF, k, m, t) * a2k(Tt, k);
    }
    return c_k_constant(k).inv() * total;
}

}  // namespace petersson
