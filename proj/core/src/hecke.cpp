#include "petersson/hecke.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "petersson/errors.hpp"

namespace petersson {

namespace {

uint64_t isqrt_u64(uint64_t v) {
    uint64_t r = (uint64_t)std::sqrt((double)v);
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Builds the output expansion of a coefficient operator: fills complete rows
// n = 0, 1, ... while every class of the row is computable, then tops up the
// degenerate classes (which stay computable long past the contiguous range).
JacExp build_from_op(int k, uint64_t M, std::size_t n_cap,
                     const std::function<std::optional<Rat>(int64_t /*D*/, uint64_t /*rho*/)>& value) {
    JacExp out(k, M, 1);
    std::size_t reached = 0;
    for (std::size_t n = 0; n < n_cap; ++n) {
        uint64_t rho_max = std::min(M, isqrt_u64(4 * M * (uint64_t)n));
        bool ok = true;
        std::vector<std::pair<JacClass, Rat>> row;
        for (uint64_t rho = 0; rho <= rho_max; ++rho) {
            int64_t D = 4 * (int64_t)M * (int64_t)n - (int64_t)(rho * rho);
            auto v = value(D, rho);
            if (!v) {
                ok = false;
                break;
            }
            row.push_back({JacClass{D, rho}, *v});
        }
        if (!ok) break;
        for (auto& [key, val] : row) out.set_class(key.D, (int64_t)key.rho, val);
        reached = n + 1;
    }
    if (reached == 0) throw PrecisionError("hecke: cannot compute the constant term");
    out.set_prec(reached);
    for (uint64_t rho = 0; rho <= M; ++rho) {
        if ((rho * rho) % (4 * M) != 0) continue;
        if (out.has_class(JacClass{0, rho})) continue;
        auto v = value(0, rho);
        if (v) out.set_class(0, (int64_t)rho, *v);
    }
    return out;
}

uint64_t gcd3(uint64_t a, uint64_t b, uint64_t c) { return std::gcd(a, std::gcd(b, c)); }

}  // namespace

JacExp apply_U(const JacExp& phi, uint64_t l) {
    if (l == 0) throw std::domain_error("apply_U: l >= 1 required");
    if (l == 1) return phi;
    uint64_t m = phi.index(), M = m * l * l;
    auto value = [&](int64_t D, uint64_t rho) -> std::optional<Rat> {
        if (rho % l != 0 || D % (int64_t)(l * l) != 0) return Rat(0);
        return phi.class_if_present(D / (int64_t)(l * l), (int64_t)(rho / l));
    };
    return build_from_op(phi.weight(), M, phi.prec(), value);
}

JacExp apply_V(const JacExp& phi, uint64_t N) {
    if (N == 0) throw std::domain_error("apply_V: N >= 1 required");
    if (N == 1) return phi;
    uint64_t m0 = phi.index(), M = m0 * N;
    unsigned k = (unsigned)phi.weight();
    auto value = [&](int64_t D, uint64_t rho) -> std::optional<Rat> {
        uint64_t n = ((uint64_t)D + rho * rho) / (4 * M);
        Rat total(0);
        for (uint64_t d : divisors(gcd3(n, rho, N))) {
            auto term = phi.class_if_present(D / (int64_t)(d * d), (int64_t)(rho / d));
            if (!term) return std::nullopt;
            total += Rat(pow(Int((unsigned long)d), k - 1)) * *term;
        }
        return total;
    };
    return build_from_op(phi.weight(), M, phi.prec(), value);
}

JacExp apply_U_star(const JacExp& psi, uint64_t l) {
    if (l == 0) throw std::domain_error("apply_U_star: l >= 1 required");
    if (l == 1) return psi;
    uint64_t Msrc = psi.index();
    if (Msrc % (l * l) != 0) throw std::domain_error("apply_U_star: index not divisible by l^2");
    uint64_t m = Msrc / (l * l);
    auto value = [&](int64_t D, uint64_t rho) -> std::optional<Rat> {
        Rat total(0);
        for (uint64_t j = 0; j < l; ++j) {
            int64_t rp = (int64_t)rho + 2 * (int64_t)m * (int64_t)j;
            auto term = psi.class_if_present((int64_t)(l * l) * D, (int64_t)l * rp);
            if (!term) return std::nullopt;
            total += *term;
        }
        return total / Rat(Int((unsigned long)l));
    };
    return build_from_op(psi.weight(), m, psi.prec(), value);
}

JacExp apply_V_star(const JacExp& psi, bool strict_paper) {
    uint64_t N = psi.index();
    unsigned k = (unsigned)psi.weight();
    if (N == 1) return psi;
    auto value = [&](int64_t D, uint64_t rho) -> std::optional<Rat> {
        (void)rho;
        Rat total(0);
        for (uint64_t d : divisors(N)) {
            Rat dk = Rat(pow(Int((unsigned long)d), k - 2));
            for (uint64_t s = 0; s < 2 * d; ++s) {
                // Stored D is 4mn - r^2, the negative of the paper's
                // discriminant, so the congruence is s^2 = -D mod 4d.
                if (((int64_t)(s * s) + D) % (int64_t)(4 * d) != 0) continue;
                int64_t D_in = strict_paper ? (int64_t)((N / d) * (N / d))
                                            : D * (int64_t)((N / d) * (N / d));
                int64_t r_in = (int64_t)(N / d) * (int64_t)s;
                if (strict_paper) {
                    // The printed formula addresses support points that need
                    // not exist; absent ones contribute nothing.
                    int64_t two_m = 2 * (int64_t)N;
                    int64_t rm = ((r_in % two_m) + two_m) % two_m;
                    int64_t rc = std::min(rm, two_m - rm);
                    if (D_in < 0 || (D_in + rc * rc) % (4 * (int64_t)N) != 0) continue;
                }
                auto term = psi.class_if_present(D_in, r_in);
                if (!term) return std::nullopt;
                total += dk * *term;
            }
        }
        return total;
    };
    return build_from_op(psi.weight(), 1, psi.prec(), value);
}

std::vector<std::pair<uint64_t, uint64_t>> square_factorizations(uint64_t m) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t l = 1; l * l <= m; ++l)
        if (m % (l * l) == 0) out.push_back({m / (l * l), l});
    return out;
}

PhiChain phi_chain(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2, uint64_t l2,
                   std::size_t e_prec) {
    if (q1 * l1 * l1 != q2 * l2 * l2)
        throw std::invalid_argument("phi_chain: q1 l1^2 != q2 l2^2");
    PhiChain ch;
    JacExp e = jac_eis_1(k, e_prec);
    ch.phi1 = apply_V(e, q1);
    ch.phi2 = apply_U(ch.phi1, l1);
    ch.phi3 = apply_U_star(ch.phi2, l2);
    ch.phi4 = apply_V_star(ch.phi3);
    return ch;
}

namespace {

Rat degenerate_at(const JacExp& phi, int64_t r) {
    uint64_t m = phi.index();
    if ((uint64_t)(r * r) % (4 * m) != 0) return Rat(0);  // no such support point
    return phi.class_at(0, r);
}

}  // namespace

std::array<Rat, 4> phi_chain_degenerate(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2,
                                        uint64_t l2, int64_t r) {
    PhiChain ch = phi_chain(k, q1, l1, q2, l2, 1);
    return {degenerate_at(ch.phi1, r), degenerate_at(ch.phi2, r), degenerate_at(ch.phi3, r),
            degenerate_at(ch.phi4, r)};
}

Rat phi1_closed(unsigned k, uint64_t q1, int64_t r) {
    uint64_t r_abs = (uint64_t)(r < 0 ? -r : r);
    if ((r_abs * r_abs) % (4 * q1) != 0) return Rat(0);
    uint64_t n = r_abs * r_abs / (4 * q1);
    return Rat(sigma_pow(k - 1, gcd3(n, r_abs / 2, q1)));
}

Rat phi2_closed(unsigned k, uint64_t q1, uint64_t l1, int64_t r) {
    if (r % (int64_t)l1 != 0) return Rat(0);
    return phi1_closed(k, q1, r / (int64_t)l1);
}

Rat phi3_closed(unsigned k, uint64_t q1, uint64_t l1, uint64_t l2, int64_t r) {
    uint64_t m = q1 * l1 * l1;
    if (m % (l2 * l2) != 0) throw std::invalid_argument("phi3_closed: l2^2 must divide m");
    uint64_t q2 = m / (l2 * l2);
    Rat total(0);
    for (uint64_t j = 0; j < l2; ++j)
        total += phi2_closed(k, q1, l1, (int64_t)l2 * (r + 2 * (int64_t)q2 * (int64_t)j));
    return total / Rat(Int((unsigned long)l2));
}

Rat phi4_closed(unsigned k, uint64_t q1, uint64_t l1, uint64_t q2, uint64_t l2) {
    if (q1 * l1 * l1 != q2 * l2 * l2)
        throw std::invalid_argument("phi4_closed: q1 l1^2 != q2 l2^2");
    Rat total(0);
    for (uint64_t x : divisors(q2)) {
        Rat xk = Rat(pow(Int((unsigned long)x), k - 2));
        for (uint64_t s = 0; s < 2 * x; ++s) {
            if ((s * s) % (4 * x) != 0) continue;
            total += xk * phi3_closed(k, q1, l1, l2, (int64_t)(q2 / x) * (int64_t)s);
        }
    }
    return total;
}

std::vector<EigenScanRow> eigen_bound_scan(unsigned k, const std::vector<uint64_t>& m_list) {
    std::vector<EigenScanRow> rows;
    for (uint64_t m : m_list) {
        auto pairs = square_factorizations(m);
        for (auto [qa, la] : pairs)
            for (auto [qb, lb] : pairs) {
                auto vals = phi_chain_degenerate(k, qa, la, qb, lb, 0);
                double denom = std::pow((double)qa * (double)qb, (double)k - 1.25);
                rows.push_back({qa, la, qb, lb, k, vals[3], vals[3].to_double() / denom});
            }
    }
    return rows;
}

std::string eigen_scan_to_json(const std::vector<EigenScanRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows)
        j.push_back({{"q1", row.q1},
                     {"q2", row.q2},
                     {"l1", row.l1},
                     {"l2", row.l2},
                     {"k", row.k},
                     {"value", row.value.str()},
                     {"ratio", row.ratio}});
    return j.dump();
}

}  // namespace petersson
