#include "petersson/repno.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "petersson/errors.hpp"
#include "petersson/jacobi.hpp"

namespace petersson {

namespace {

std::mutex fj_mutex;
std::map<std::pair<unsigned, uint64_t>, JacExp> fj_cache;  // (k, m) -> widest e_{k,m} so far

JacExp siegel_fj_cached(unsigned k, uint64_t m, std::size_t prec) {
    std::lock_guard lk(fj_mutex);
    auto it = fj_cache.find({k, m});
    if (it != fj_cache.end() && it->second.prec() >= prec) return it->second;
    JacExp e = siegel_fj(k, m, prec);
    fj_cache.insert_or_assign({k, m}, e);
    return e;
}

}  // namespace

Rat a2k(const BinQF& T, unsigned k) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("a2k: k even, >= 4 required");
    if (!T.positive_definite()) throw std::domain_error("a2k: positive definite T required");
    BinQF R = reduce(T).form;
    JacExp e = siegel_fj_cached(k, (uint64_t)R.m, (std::size_t)R.n + 1);
    return e.c(R.n, R.r);
}

std::vector<std::pair<GL2, BinQF>> gl2_divisor_classes(const BinQF& T) {
    std::vector<std::pair<GL2, BinQF>> out;
    int64_t det2 = T.det2();
    for (int64_t a = 1; a * a <= T.n; ++a) {
        if (T.n % (a * a) != 0) continue;
        for (int64_t d = 1; a * a * d * d <= det2; ++d) {
            for (int64_t b = 0; b < d; ++b) {
                // G = [[a, b], [0, d]], G^-1 = [[1/a, -b/(ad)], [0, 1/d]].
                // T[G^-1] = (n/a^2, r', m') must be half-integral positive.
                int64_t n2 = T.n / (a * a);
                // r' = r/(ad) - 2nb/(a^2 d); m' = n b^2/(a^2 d^2) - r b/(a d^2) + m/d^2
                Rat rp = Rat((long)T.r, (long)(a * d)) - Rat((long)(2 * T.n * b), (long)(a * a * d));
                Rat mp = Rat((long)(T.n * b * b), (long)(a * a * d * d)) -
                         Rat((long)(T.r * b), (long)(a * d * d)) + Rat((long)T.m, (long)(d * d));
                if (!rp.is_integer() || !mp.is_integer()) continue;
                if (!(mp > Rat(0))) continue;
                BinQF TG{n2, rp.num().to_long(), mp.num().to_long()};
                if (!TG.positive_definite()) continue;
                out.push_back({GL2{{{a, b}, {0, d}}}, TG});
            }
        }
    }
    // Identity first, then ascending determinant: a stable processing order.
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return gl2_det(x.first) < gl2_det(y.first);
    });
    return out;
}

Rat a2k_primitive(const BinQF& T, unsigned k) {
    Rat total = a2k(T, k);
    for (const auto& [G, TG] : gl2_divisor_classes(T)) {
        if (gl2_det(G) == 1) continue;
        total -= a2k_primitive(TG, k);
    }
    return total;
}

Rat main_term_M(const Lattice& L, const BinQF& T) {
    unsigned k = L.weight_k();
    if (!T.positive_definite()) throw std::domain_error("main_term_M: positive T required");
    uint64_t m = (uint64_t)T.m;
    Rat total(0);
    for (uint64_t t = 1; t * t <= m; ++t) {
        if (m % (t * t) != 0 || T.r % (int64_t)t != 0) continue;
        Rat alpha(0);
        for (uint64_t l : divisors(t)) {
            int mu = moebius(t / l);
            if (mu == 0) continue;
            uint64_t ml = m / (l * l);
            Rat term = Rat(Int((unsigned long)rep_primitive(L, ml))) / Rat(g_k(k, ml));
            alpha += (mu > 0) ? term : -term;
        }
        BinQF Tt{T.n, T.r / (int64_t)t, (int64_t)(m / (t * t))};
        total += alpha * a2k(Tt, k);
    }
    return total;
}

std::vector<BinQF> reduced_forms_up_to(int64_t det2_max) {
    std::vector<BinQF> forms;
    for (int64_t m = 1; 3 * m * m <= det2_max; ++m)
        for (int64_t r = 0; r <= m; ++r)
            for (int64_t n = m; 4 * n * m - r * r <= det2_max; ++n)
                if (4 * n * m - r * r > 0) forms.push_back({n, r, m});
    std::sort(forms.begin(), forms.end(), [](const BinQF& x, const BinQF& y) {
        if (x.det2() != y.det2()) return x.det2() < y.det2();
        if (x.m != y.m) return x.m < y.m;
        return x.r < y.r;
    });
    return forms;
}

std::vector<RepnoRow> repno_report(const Lattice& L, const std::vector<BinQF>& scan) {
    unsigned k = L.weight_k();
    Rat ck_inv = c_k_constant(k).inv();
    std::vector<RepnoRow> rows;
    rows.reserve(scan.size());
    for (const BinQF& T : scan) {
        BinQF R = reduce(T).form;
        RepnoRow row;
        row.T = R;
        row.det2 = R.det2();
        row.rep = rep_number(L, R);
        Rat M = main_term_M(L, R);
        row.main = ck_inv * M;
        row.diff = Rat(Int((unsigned long)row.rep)) - row.main;
        int64_t mn = R.minimum();
        double log_min = std::max(std::log((double)mn), 1.0);
        double detT = (double)R.det2() / 4.0;
        double denom = (double)rep_number(L, (uint64_t)mn) * std::pow(detT, (double)k - 1.5);
        double numer = M.to_double() * sigma_pow(k - 1, (uint64_t)mn).to_double() * log_min;
        row.mst_ratio = denom > 0 ? numer / denom : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

HauptsatzResult hauptsatz_check(const std::vector<std::pair<Lattice, Rat>>& genus,
                                const std::vector<BinQF>& scan) {
    Rat wsum(0);
    for (const auto& [L, w] : genus) {
        (void)L;
        wsum += w;
    }
    if (!(wsum == Rat(1))) throw std::invalid_argument("hauptsatz_check: weights must sum to 1");
    unsigned k = genus.at(0).first.weight_k();
    HauptsatzResult res{true, {}};
    for (const BinQF& T : scan) {
        Rat lhs(0);
        for (const auto& [L, w] : genus) lhs += w * Rat(Int((unsigned long)rep_number(L, T)));
        Rat delta = lhs - a2k(T, k);
        if (!delta.is_zero()) {
            res.pass = false;
            res.failures.push_back({T, delta});
        }
    }
    return res;
}

HauptsatzResult hauptsatz_check_degree1(const std::vector<std::pair<Lattice, Rat>>& genus,
                                        std::size_t prec) {
    Rat wsum(0);
    for (const auto& [L, w] : genus) {
        (void)L;
        wsum += w;
    }
    if (!(wsum == Rat(1))) throw std::invalid_argument("hauptsatz_check: weights must sum to 1");
    unsigned k = genus.at(0).first.weight_k();
    QExp ek = eisenstein_qexp(k, prec);
    HauptsatzResult res{true, {}};
    for (std::size_t m = 0; m < prec; ++m) {
        Rat lhs(0);
        for (const auto& [L, w] : genus) lhs += w * Rat(Int((unsigned long)rep_number(L, (uint64_t)m)));
        Rat delta = lhs - ek.a(m);
        if (!delta.is_zero()) {
            res.pass = false;
            res.failures.push_back({BinQF{(int64_t)m, 0, 0}, delta});
        }
    }
    return res;
}

SahaResult saha_sequence(const std::vector<uint64_t>& m_list, uint64_t cap) {
    SahaResult res;
    int64_t last_D = 0;
    for (uint64_t m : m_list) {
        bool found = false;
        for (uint64_t n = m + 1; n <= m + cap; ++n) {
            int64_t D = 4 * (int64_t)(m * n) - 1;
            if (D <= last_D) continue;
            if (!is_prime_u64((uint64_t)D)) continue;
            res.forms.push_back({(int64_t)n, 1, (int64_t)m});
            last_D = D;
            found = true;
            break;
        }
        if (!found) {
            res.capped = true;
            break;
        }
    }
    return res;
}

}  // namespace petersson
