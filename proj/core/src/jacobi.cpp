#include "petersson/jacobi.hpp"

#include <stdexcept>

#include <json.hpp>

#include "petersson/errors.hpp"
#include "petersson/hecke.hpp"

namespace petersson {

JacClass JacExp::canonical(int64_t D, int64_t r) const {
    int64_t two_m = 2 * (int64_t)m_;
    int64_t rm = ((r % two_m) + two_m) % two_m;
    uint64_t rho = (uint64_t)std::min(rm, two_m - rm);
    if (D < 0 || (D + (int64_t)(rho * rho)) % (4 * (int64_t)m_) != 0)
        throw InvariantViolation("JacExp: invalid class (D=" + std::to_string(D) +
                                 ", r=" + std::to_string(r) + ", m=" + std::to_string(m_) + ")");
    return JacClass{D, rho};
}

int64_t JacExp::min_rep_n(const JacClass& c) const {
    return (c.D + (int64_t)(c.rho * c.rho)) / (4 * (int64_t)m_);
}

std::optional<Rat> JacExp::class_if_present(int64_t D, int64_t r) const {
    auto it = coeffs_.find(canonical(D, r));
    if (it == coeffs_.end()) return std::nullopt;
    return it->second;
}

const Rat& JacExp::class_at(int64_t D, int64_t r) const {
    JacClass key = canonical(D, r);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end())
        throw PrecisionError("JacExp: class (D=" + std::to_string(D) + ", rho=" +
                             std::to_string(key.rho) + ") not stored; min rep n = " +
                             std::to_string(min_rep_n(key)) + ", prec = " + std::to_string(prec_));
    return it->second;
}

Rat JacExp::c(int64_t n, int64_t r) const {
    int64_t D = 4 * (int64_t)m_ * n - r * r;
    if (D < 0) return Rat(0);
    return class_at(D, r);
}

void JacExp::set_class(int64_t D, int64_t r, const Rat& v) {
    JacClass key = canonical(D, r);
    auto [it, inserted] = coeffs_.emplace(key, v);
    if (!inserted && !(it->second == v))
        throw InvariantViolation("JacExp: inconsistent rewrite of class (D=" +
                                 std::to_string(D) + ", rho=" + std::to_string(key.rho) + ")");
}

std::vector<uint64_t> JacExp::degenerate_rhos() const {
    std::vector<uint64_t> out;
    for (uint64_t rho = 0; rho <= m_; ++rho)
        if ((rho * rho) % (4 * m_) == 0) out.push_back(rho);
    return out;
}

void JacExp::check_invariants() const {
    if (prec_ < 1) throw InvariantViolation("JacExp: prec >= 1 required");
    if (m_ < 1) throw InvariantViolation("JacExp: index >= 1 required");
    for (const auto& [key, val] : coeffs_) {
        (void)val;
        if (key.D < 0 || key.rho > m_ || (key.D + (int64_t)(key.rho * key.rho)) % (4 * (int64_t)m_) != 0)
            throw InvariantViolation("JacExp: malformed class key");
    }
    // Completeness below prec: walk every class with min representative < prec.
    for (int64_t n = 0; n < (int64_t)prec_; ++n)
        for (int64_t r = 0; (uint64_t)(r * r) <= 4 * m_ * (uint64_t)n; ++r) {
            JacClass key = canonical(4 * (int64_t)m_ * n - r * r, r);
            if (min_rep_n(key) == n && !coeffs_.count(key))
                throw InvariantViolation("JacExp: missing class below prec at n=" +
                                         std::to_string(n) + ", r=" + std::to_string(r));
        }
}

JacExp jac_add(const JacExp& a, const JacExp& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("jac_add: weight/index mismatch");
    JacExp out(a.weight(), a.index(), std::min(a.prec(), b.prec()));
    for (const auto& [key, val] : a.classes()) {
        auto other = b.classes().find(key);
        if (other != b.classes().end()) out.set_class(key.D, (int64_t)key.rho, val + other->second);
    }
    return out;
}

JacExp jac_scale(const Rat& c, const JacExp& a) {
    JacExp out(a.weight(), a.index(), a.prec());
    for (const auto& [key, val] : a.classes()) out.set_class(key.D, (int64_t)key.rho, c * val);
    return out;
}

bool jac_equal_on_common(const JacExp& a, const JacExp& b) {
    if (!a.same_shape(b)) return false;
    bool any = false;
    for (const auto& [key, val] : a.classes()) {
        auto other = b.classes().find(key);
        if (other == b.classes().end()) continue;
        any = true;
        if (!(val == other->second)) return false;
    }
    return any;
}

JacExp jac_eis_1(unsigned k, std::size_t prec) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("jac_eis_1: k even, >= 4 required");
    if (prec < 1) throw std::domain_error("jac_eis_1: prec >= 1 required");
    JacExp out((int)k, 1, prec);
    Rat h0 = cohen_H(k - 1, 0);
    for (uint64_t rho = 0; rho <= 1; ++rho)
        for (int64_t D = (int64_t)(rho ? 3 : 0); D + (int64_t)(rho * rho) < 4 * (int64_t)prec; D += 4)
            out.set_class(D, (int64_t)rho, cohen_H(k - 1, (uint64_t)D) / h0);
    return out;
}

Rat c_k_constant(unsigned k) { return Rat(2) / zeta_neg(k); }

JacExp jac_eis_m(unsigned k, uint64_t m, std::size_t prec) {
    if (m == 0) throw std::domain_error("jac_eis_m: m >= 1 required");
    if (prec < 1) throw std::domain_error("jac_eis_m: prec >= 1 required");
    // Feed E_{k,1} with enough terms for the deepest V_N pull.
    std::size_t in_prec = m * (prec - 1) + 1;
    JacExp e1 = jac_eis_1(k, in_prec);
    bool first = true;
    JacExp acc;
    for (uint64_t t = 1; t * t <= m; ++t) {
        if (m % (t * t) != 0) continue;
        int mu = moebius(t);
        if (mu == 0) continue;
        JacExp term = apply_U(apply_V(e1, m / (t * t)), t);
        if (mu < 0) term = jac_scale(Rat(-1), term);
        acc = first ? term : jac_add(acc, term);
        first = false;
    }
    JacExp out = jac_scale(Rat(Int(1L), g_k(k, m)), acc);
    if (out.prec() < prec)
        throw PrecisionError("jac_eis_m: achieved prec " + std::to_string(out.prec()) +
                             " below requested " + std::to_string(prec));
    out.set_prec(std::max(out.prec(), prec));
    return out;
}

Rat eis_degenerate(unsigned k, uint64_t m, uint64_t s, int64_t r) {
    (void)k;  // even weight is a standing assumption
    uint64_t b = square_part_root(m);
    uint64_t a = m / (b * b);
    int64_t two_m = 2 * (int64_t)m;
    int64_t target = (int64_t)(2 * a * b * (s % (2 * m)));
    int64_t rm = ((r % two_m) + two_m) % two_m;
    int64_t tm = ((target % two_m) + two_m) % two_m;
    bool congruent = (rm == tm) || (rm == (two_m - tm) % two_m);
    if (!congruent) return Rat(0);
    return ((2 * s) % b == 0) ? Rat(1) : Rat(1, 2);
}

JacExp siegel_fj(unsigned k, uint64_t m, std::size_t prec) {
    Rat ck = c_k_constant(k);
    bool first = true;
    JacExp acc;
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % (d * d) != 0) continue;
        JacExp term = apply_U(jac_eis_m(k, m / (d * d), prec), d);
        term = jac_scale(Rat(g_k(k, m / (d * d))), term);
        acc = first ? term : jac_add(acc, term);
        first = false;
    }
    return jac_scale(ck, acc);
}

bool is_cuspidal(const JacExp& phi) {
    for (const auto& [key, val] : phi.classes())
        if (key.D == 0 && !val.is_zero()) return false;
    return true;
}

ThetaComponents theta_decompose(const JacExp& phi) {
    phi.check_invariants();
    ThetaComponents tc;
    tc.k = phi.weight();
    tc.m = phi.index();
    tc.prec = phi.prec();
    tc.component.assign(2 * tc.m, {});
    for (const auto& [key, val] : phi.classes()) {
        tc.component[key.rho].emplace_back(key.D, val);
        uint64_t mirror = (2 * tc.m - key.rho) % (2 * tc.m);
        if (mirror != key.rho) tc.component[mirror].emplace_back(key.D, val);
    }
    for (auto& comp : tc.component)
        std::sort(comp.begin(), comp.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    return tc;
}

JacExp theta_reassemble(const ThetaComponents& tc) {
    JacExp out(tc.k, tc.m, tc.prec);
    for (uint64_t mu = 0; mu < 2 * tc.m; ++mu)
        for (const auto& [D, val] : tc.component[mu]) out.set_class(D, (int64_t)mu, val);
    return out;
}

std::string jacexp_to_json(const JacExp& phi) {
    nlohmann::json j;
    j["k"] = phi.weight();
    j["m"] = phi.index();
    j["prec"] = phi.prec();
    auto rows = nlohmann::json::array();
    for (const auto& [key, val] : phi.classes()) {
        int64_t n = (key.D + (int64_t)(key.rho * key.rho)) / (4 * (int64_t)phi.index());
        rows.push_back({n, key.rho, val.str()});
    }
    j["coeffs"] = rows;
    return j.dump();
}

JacExp jacexp_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    JacExp out(j.at("k").get<int>(), j.at("m").get<uint64_t>(), j.at("prec").get<std::size_t>());
    for (const auto& row : j.at("coeffs")) {
        int64_t n = row.at(0).get<int64_t>(), r = row.at(1).get<int64_t>();
        if (r < 0) throw std::invalid_argument("jacexp_from_json: r >= 0 expected");
        out.set_class(4 * (int64_t)out.index() * n - r * r, r, Rat(row.at(2).get<std::string>()));
    }
    out.check_invariants();
    return out;
}

}  // namespace petersson
