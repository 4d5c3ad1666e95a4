#include "petersson/qexp.hpp"

#include <stdexcept>

#include <json.hpp>

#include "petersson/errors.hpp"

namespace petersson {

const Rat& QExp::a(std::size_t n) const {
    if (n >= prec)
        throw PrecisionError("QExp: coefficient " + std::to_string(n) + " beyond prec " +
                             std::to_string(prec));
    return coeffs[n];
}

void QExp::check_invariants() const {
    if (prec < 1) throw InvariantViolation("QExp: prec >= 1 required");
    if (coeffs.size() != prec) throw InvariantViolation("QExp: coefficient count != prec");
    if (cuspidal && !coeffs[0].is_zero()) throw InvariantViolation("QExp: cuspidal with a(0) != 0");
}

QExp qexp_add(const QExp& f, const QExp& g) {
    if (f.weight != g.weight) throw std::invalid_argument("qexp_add: weight mismatch");
    QExp out(f.weight, std::min(f.prec, g.prec), f.cuspidal && g.cuspidal);
    for (std::size_t n = 0; n < out.prec; ++n) out.coeffs[n] = f.coeffs[n] + g.coeffs[n];
    return out;
}

QExp qexp_scale(const Rat& c, const QExp& f) {
    QExp out = f;
    for (auto& v : out.coeffs) v *= c;
    return out;
}

QExp qexp_mul(const QExp& f, const QExp& g) {
    QExp out(f.weight + g.weight, std::min(f.prec, g.prec), false);
    for (std::size_t i = 0; i < out.prec; ++i) {
        if (f.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < out.prec; ++j)
            out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    out.cuspidal = out.prec > 0 && out.coeffs[0].is_zero();
    return out;
}

QExp eisenstein_qexp(unsigned k, std::size_t prec) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("eisenstein_qexp: k even, >= 4 required");
    if (prec < 1) throw std::domain_error("eisenstein_qexp: prec >= 1");
    QExp out((int)k, prec);
    out.coeffs[0] = Rat(1);
    Rat factor = -Rat(Int((unsigned long)(2 * k))) / bernoulli(k);
    for (std::size_t n = 1; n < prec; ++n) out.coeffs[n] = factor * Rat(sigma_pow(k - 1, n));
    return out;
}

QExp delta_qexp(std::size_t prec) {
    // eta^24 = q prod (1-q^n)^24, via 24 squarings-free sequential products
    // would be slow; use prod(1-q^n)^3 from the Jacobi pentagonal cube:
    // prod (1-q^n)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}, then 8th power.
    if (prec < 1) throw std::domain_error("delta_qexp: prec >= 1");
    std::size_t n = prec;  // coefficients of q^1..q^prec in Delta = q * cube^8
    std::vector<Rat> cube(n, Rat(0));
    for (uint64_t j = 0;; ++j) {
        uint64_t e = j * (j + 1) / 2;
        if (e >= n) break;
        cube[e] = Rat((j % 2 == 0) ? (long)(2 * j + 1) : -(long)(2 * j + 1));
    }
    auto mul = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    std::vector<Rat> p = mul(cube, cube);  // ^2
    p = mul(p, p);                         // ^4
    p = mul(p, p);                         // ^8
    QExp out(12, prec, true);
    for (std::size_t i = 1; i < prec; ++i) out.coeffs[i] = p[i - 1];
    return out;
}

std::vector<QExp> cusp_basis(unsigned k, std::size_t prec) {
    if (k % 2 != 0 || k < 12) throw std::domain_error("cusp_basis: k even, >= 12 required");
    // S_k = Delta * M_{k-12}; monomial spanning set E4^a E6^b, then echelon.
    unsigned kk = k - 12;
    std::vector<QExp> span;
    QExp delta = delta_qexp(prec);
    for (unsigned a = 0; 4 * a <= kk; ++a) {
        if ((kk - 4 * a) % 6 != 0) continue;
        unsigned b = (kk - 4 * a) / 6;
        QExp m(0, prec);
        m.coeffs[0] = Rat(1);
        for (unsigned i = 0; i < a; ++i) m = qexp_mul(m, eisenstein_qexp(4, prec));
        for (unsigned i = 0; i < b; ++i) m = qexp_mul(m, eisenstein_qexp(6, prec));
        m.weight = (int)kk;
        span.push_back(qexp_mul(delta, m));
    }
    // Gaussian echelonization on columns q^1, q^2, ...
    std::vector<QExp> basis;
    std::size_t col = 1;
    while (!span.empty() && col < prec) {
        std::size_t pivot = span.size();
        for (std::size_t i = 0; i < span.size(); ++i)
            if (!span[i].coeffs[col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == span.size()) {
            ++col;
            continue;
        }
        QExp lead = qexp_scale(span[pivot].coeffs[col].inv(), span[pivot]);
        span.erase(span.begin() + (std::ptrdiff_t)pivot);
        for (auto& s : span)
            if (!s.coeffs[col].is_zero()) s = qexp_add(s, qexp_scale(-s.coeffs[col], lead));
        basis.push_back(std::move(lead));
        ++col;
    }
    // Back-substitute so every basis form has zeros at the other pivots.
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            std::size_t pc = j + 1;  // pivot columns are 1..dim
            if (!basis[i].coeffs[pc].is_zero())
                basis[i] = qexp_add(basis[i], qexp_scale(-basis[i].coeffs[pc], basis[j]));
        }
    for (auto& b : basis) b.cuspidal = true;
    return basis;
}

Rat g_f(const QExp& f, uint64_t m) {
    if (m >= f.prec)
        throw PrecisionError("g_f: m beyond stored precision");
    Rat total(0);
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % (d * d) != 0) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        Rat term = f.a(m / (d * d));
        total += (mu > 0) ? term : -term;
    }
    return total;
}

Rat alpha_m(const QExp& f, unsigned k, uint64_t m, uint64_t t) {
    if (t == 0 || m % (t * t) != 0) throw std::domain_error("alpha_m: t^2 | m required");
    Rat total(0);
    for (uint64_t l : divisors(t)) {
        int mu = moebius(t / l);
        if (mu == 0) continue;
        uint64_t mm = m / (l * l);
        Rat term = g_f(f, mm) / Rat(g_k(k, mm));
        total += (mu > 0) ? term : -term;
    }
    return total;
}

std::string qexp_to_json(const QExp& f) {
    nlohmann::json j;
    j["weight"] = f.weight;
    j["prec"] = f.prec;
    std::vector<std::string> cs;
    cs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) cs.push_back(c.str());
    j["coeffs"] = cs;
    return j.dump();
}

QExp qexp_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QExp f(j.at("weight").get<int>(), j.at("prec").get<std::size_t>());
    auto cs = j.at("coeffs").get<std::vector<std::string>>();
    if (cs.size() != f.prec) throw std::invalid_argument("qexp_from_json: coeffs length != prec");
    for (std::size_t i = 0; i < cs.size(); ++i) f.coeffs[i] = Rat(cs[i]);
    f.cuspidal = !f.coeffs.empty() && f.coeffs[0].is_zero();
    return f;
}

}  // namespace petersson
