#include "petersson/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "petersson/errors.hpp"
#include "petersson/repno.hpp"

namespace petersson {

// ---- Gram matrices ----------------------------------------------------------

void LatticeGram::validate() const {
    if (dim == 0 || gram.size() != dim) throw std::invalid_argument("LatticeGram: bad dimension");
    for (std::size_t i = 0; i < dim; ++i) {
        if (gram[i].size() != dim) throw std::invalid_argument("LatticeGram: ragged rows");
        if (gram[i][i] % 2 != 0) throw std::invalid_argument("LatticeGram: odd diagonal");
        for (std::size_t j = 0; j < dim; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("LatticeGram: not symmetric");
    }
    if (!(det() == Int(1L))) throw std::invalid_argument("LatticeGram: determinant != 1");
}

Int LatticeGram::det() const {
    // Fraction-free Gaussian elimination (Bareiss).
    std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a[i][j] = Int((long)gram[i][j]);
    Int prev(1L);
    int sign = 1;
    for (std::size_t p = 0; p < dim; ++p) {
        if (a[p][p].is_zero()) {
            std::size_t q = p + 1;
            while (q < dim && a[q][p].is_zero()) ++q;
            if (q == dim) return Int(0L);
            std::swap(a[p], a[q]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < dim; ++i)
            for (std::size_t j = p + 1; j < dim; ++j)
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    Int d = a[dim - 1][dim - 1];
    return sign > 0 ? d : -d;
}

// ---- built-in lattices --------------------------------------------------------

namespace {

// Gram of E8 in the basis {e1-e2, ..., e6-e7, e6+e7, (1/2)(1,...,1)}.
LatticeGram make_e8_gram() {
    const int n = 8;
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < 6; ++i) {
        basis[i][i] = Rat(1);
        basis[i][i + 1] = Rat(-1);
    }
    basis[6][5] = Rat(1);
    basis[6][6] = Rat(1);
    for (int j = 0; j < n; ++j) basis[7][j] = Rat(1, 2);
    LatticeGram g;
    g.dim = n;
    g.gram.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat dot(0);
            for (int t = 0; t < n; ++t) dot += basis[i][t] * basis[j][t];
            if (!dot.is_integer()) throw std::logic_error("E8 basis: non-integral Gram");
            g.gram[i][j] = dot.num().to_long();
        }
    return g;
}

LatticeGram block_sum(const LatticeGram& a, const LatticeGram& b) {
    LatticeGram g;
    g.dim = a.dim + b.dim;
    g.gram.assign(g.dim, std::vector<int64_t>(g.dim, 0));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) g.gram[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) g.gram[a.dim + i][a.dim + j] = b.gram[i][j];
    return g;
}

// Gram of D16+ in the basis {e1-e2, ..., e14-e15, e14+e15, (1/2)(1,...,1)}.
LatticeGram make_d16plus_gram() {
    const int n = 16;
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < 14; ++i) {
        basis[i][i] = Rat(1);
        basis[i][i + 1] = Rat(-1);
    }
    basis[14][13] = Rat(1);
    basis[14][14] = Rat(1);
    for (int j = 0; j < n; ++j) basis[15][j] = Rat(1, 2);
    LatticeGram g;
    g.dim = n;
    g.gram.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat dot(0);
            for (int t = 0; t < n; ++t) dot += basis[i][t] * basis[j][t];
            if (!dot.is_integer()) throw std::logic_error("D16+ basis: non-integral Gram");
            g.gram[i][j] = dot.num().to_long();
        }
    return g;
}

constexpr D8Coset kInt0{false, 0};
constexpr D8Coset kInt1{false, 1};
constexpr D8Coset kHalf0{true, 0};
constexpr D8Coset kHalf1{true, 1};

}  // namespace

Lattice builtin_e8() {
    Lattice L;
    L.name = "e8";
    L.gram = make_e8_gram();
    ModelLattice m;
    m.blocks = 1;
    m.glue = {{kInt0, kInt0}, {kHalf0, kHalf0}};
    L.model = m;
    return L;
}

Lattice builtin_e8e8() {
    Lattice L;
    L.name = "e8e8";
    LatticeGram e8 = make_e8_gram();
    L.gram = block_sum(e8, e8);
    ModelLattice m;
    m.blocks = 2;
    for (D8Coset a : {kInt0, kHalf0})
        for (D8Coset b : {kInt0, kHalf0}) m.glue.push_back({a, b});
    L.model = m;
    return L;
}

Lattice builtin_d16plus() {
    Lattice L;
    L.name = "d16plus";
    L.gram = make_d16plus_gram();
    ModelLattice m;
    m.blocks = 2;
    m.glue = {{kInt0, kInt0}, {kInt1, kInt1}, {kHalf0, kHalf0}, {kHalf1, kHalf1}};
    L.model = m;
    return L;
}

Lattice lattice_by_name_or_file(const std::string& spec) {
    if (spec == "e8") return builtin_e8();
    if (spec == "e8e8") return builtin_e8e8();
    if (spec == "d16plus") return builtin_d16plus();
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("lattice: cannot open '" + spec + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return lattice_from_json(ss.str());
}

Lattice lattice_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Lattice L;
    L.name = j.value("name", "custom");
    L.gram.dim = j.at("dim").get<std::size_t>();
    L.gram.gram = j.at("gram").get<std::vector<std::vector<int64_t>>>();
    L.gram.validate();
    if (L.gram.dim % 2 != 0) throw std::invalid_argument("lattice: odd rank");
    return L;
}

std::string lattice_to_json(const LatticeGram& gram) {
    nlohmann::json j;
    j["dim"] = gram.dim;
    j["gram"] = gram.gram;
    return j.dump();
}

// ---- generic exact enumeration (rational Fincke-Pohst) ----------------------

namespace {

struct LdlData {
    std::size_t dim;
    std::vector<Rat> d;                 // pivots of x'Sx = sum d_j (x_j + sum mu[j][i] x_i)^2
    std::vector<std::vector<Rat>> mu;   // mu[j][i] for i > j
};

LdlData ldl_of(const LatticeGram& S) {
    LdlData out;
    out.dim = S.dim;
    out.d.assign(S.dim, Rat(0));
    out.mu.assign(S.dim, std::vector<Rat>(S.dim, Rat(0)));
    for (std::size_t j = 0; j < S.dim; ++j) {
        Rat dj = Rat((long)S.gram[j][j]);
        for (std::size_t t = 0; t < j; ++t) dj -= out.d[t] * out.mu[t][j] * out.mu[t][j];
        if (!(dj > Rat(0))) throw std::invalid_argument("ldl: not positive definite");
        out.d[j] = dj;
        for (std::size_t i = j + 1; i < S.dim; ++i) {
            Rat v = Rat((long)S.gram[i][j]);
            for (std::size_t t = 0; t < j; ++t) v -= out.d[t] * out.mu[t][i] * out.mu[t][j];
            out.mu[j][i] = v / dj;
        }
    }
    return out;
}

// Exact integer range {x : d (x + c)^2 <= rem}; empty when even the nearest
// integer to -c fails. The double seed is only a hint; comparisons are exact.
std::optional<std::pair<int64_t, int64_t>> level_range(const Rat& c, const Rat& d,
                                                       const Rat& rem) {
    if (rem < Rat(0)) return std::nullopt;
    auto ok = [&](int64_t v) {
        Rat t = Rat((long)v) + c;
        return d * t * t <= rem;
    };
    int64_t x0 = (int64_t)std::llround(-c.to_double());
    int64_t seed = x0;
    bool found = false;
    for (int64_t off = 0; off <= 2 && !found; ++off) {
        if (ok(x0 + off)) { seed = x0 + off; found = true; }
        else if (off && ok(x0 - off)) { seed = x0 - off; found = true; }
    }
    if (!found) return std::nullopt;
    int64_t hi = seed, lo = seed;
    while (ok(hi + 1)) ++hi;
    while (ok(lo - 1)) --lo;
    return std::make_pair(lo, hi);
}

// Enumerates all x with x'Sx <= two_q (= 2*bound); emits each vector once.
void enumerate_gram(const LdlData& ldl, const Rat& two_q,
                    const std::function<void(const std::vector<int64_t>&)>& emit) {
    std::size_t n = ldl.dim;
    std::vector<int64_t> x(n, 0);
    std::vector<Rat> rem(n + 1, Rat(0));
    // Levels from n-1 down to 0; rem[j+1] holds the budget left at level j.
    std::function<void(std::size_t)> rec = [&](std::size_t lvl) {
        std::size_t j = lvl - 1;
        Rat c(0);
        for (std::size_t i = j + 1; i < n; ++i) c += ldl.mu[j][i] * Rat((long)x[i]);
        auto range = level_range(c, ldl.d[j], rem[lvl]);
        if (!range) {
            x[j] = 0;
            return;
        }
        auto [lo, hi] = *range;
        for (int64_t v = lo; v <= hi; ++v) {
            x[j] = v;
            Rat t = Rat((long)v) + c;
            Rat used = ldl.d[j] * t * t;
            if (j == 0) {
                emit(x);
            } else {
                rem[lvl - 1] = rem[lvl] - used;
                rec(lvl - 1);
            }
        }
        x[j] = 0;
    };
    rem[n] = two_q;
    if (!(two_q < Rat(0))) rec(n);
}

int64_t dot_gram(const LatticeGram& S, const std::vector<int64_t>& a,
                 const std::vector<int64_t>& b) {
    int64_t acc = 0;
    for (std::size_t i = 0; i < S.dim; ++i) {
        int64_t row = 0;
        for (std::size_t j = 0; j < S.dim; ++j) row += S.gram[i][j] * b[j];
        acc += a[i] * row;
    }
    return acc;
}

int64_t norm2_gram(const LatticeGram& S, const std::vector<int64_t>& a) {
    return dot_gram(S, a, a);
}

}  // namespace

std::vector<std::vector<int64_t>> short_vectors(const LatticeGram& S, uint64_t bound) {
    LdlData ldl = ldl_of(S);
    std::vector<std::vector<int64_t>> out;
    enumerate_gram(ldl, Rat((long)(2 * bound)), [&](const std::vector<int64_t>& x) {
        out.push_back(x);
    });
    return out;
}

// ---- model-lattice enumeration ----------------------------------------------

namespace {

using Vec8 = std::array<int64_t, 8>;

// All doubled-coordinate vectors v of a D8 coset with |v|^2 = norm8
// (= 8 * Q(w)); coords all even or all odd, sum(v) = 2*sgn mod 4.
void enumerate_coset(const D8Coset& c, int64_t norm8,
                     const std::function<void(const Vec8&)>& emit) {
    if (norm8 < 0) return;
    Vec8 v{};
    std::function<void(int, int64_t, int64_t)> rec = [&](int idx, int64_t rem, int64_t sum) {
        if (idx == 7) {
            // Last coordinate: v7^2 = rem with the right parity and sum class.
            if (rem < 0) return;
            int64_t root = (int64_t)std::sqrt((double)rem);
            while (root * root > rem) --root;
            while ((root + 1) * (root + 1) <= rem) ++root;
            if (root * root != rem) return;
            if (((root % 2) + 2) % 2 != (c.half ? 1 : 0)) return;
            for (int sgn = 0; sgn < (root == 0 ? 1 : 2); ++sgn) {
                int64_t last = sgn ? -root : root;
                int64_t total = sum + last;
                if (((total % 4) + 4) % 4 == 2 * c.sgn) {
                    v[7] = last;
                    emit(v);
                }
            }
            v[7] = 0;
            return;
        }
        int64_t min_rest = c.half ? (7 - idx) : 0;  // remaining coords each need >= 1 when half
        for (int64_t a = c.half ? 1 : 0; a * a + min_rest <= rem; a += 2) {
            int64_t sq = a * a;
            for (int s = 0; s < (a == 0 ? 1 : 2); ++s) {
                v[idx] = s ? -a : a;
                rec(idx + 1, rem - sq, sum + v[idx]);
            }
        }
        v[idx] = 0;
    };
    rec(0, norm8, 0);
}

// Canonical bucket key under coordinate permutations and even sign flips
// (plus a flip of any zero coordinate): sorted |v| descending, with a single
// minus on the last slot when the negative count is odd and no zero exists.
Vec8 canonical_vec(const Vec8& v) {
    Vec8 a;
    int neg = 0;
    bool zero = false;
    for (int i = 0; i < 8; ++i) {
        a[i] = v[i] < 0 ? -v[i] : v[i];
        if (v[i] < 0) ++neg;
        if (v[i] == 0) zero = true;
    }
    std::sort(a.begin(), a.end(), std::greater<int64_t>());
    if (!zero && (neg % 2)) a[7] = -a[7];
    return a;
}

struct PairKey {
    D8Coset inner, outer;
    int64_t n8, m8;
    auto operator<=>(const PairKey&) const = default;
};

// Histogram over the doubled dot product v_inner . v_outer (= 4 B(w1,w2)) of
// pairs with |v_inner|^2 = n8, |v_outer|^2 = m8.
using DotHist = std::map<int64_t, uint64_t>;

std::map<PairKey, DotHist>& pair_cache() {
    static std::map<PairKey, DotHist> cache;
    return cache;
}
std::mutex pair_cache_mutex;

DotHist coset_pair_hist(const D8Coset& inner, const D8Coset& outer, int64_t n8, int64_t m8) {
    PairKey key{inner, outer, n8, m8};
    {
        std::lock_guard lk(pair_cache_mutex);
        auto it = pair_cache().find(key);
        if (it != pair_cache().end()) return it->second;
    }
    // Bucket the outer vectors by canonical form; the inner sweep sees only
    // one representative per bucket.
    std::map<Vec8, uint64_t> buckets;
    enumerate_coset(outer, m8, [&](const Vec8& v) { buckets[canonical_vec(v)]++; });
    DotHist hist;
    for (const auto& [rep, count] : buckets) {
        enumerate_coset(inner, n8, [&](const Vec8& v) {
            int64_t dot = 0;
            for (int i = 0; i < 8; ++i) dot += v[i] * rep[i];
            hist[dot] += count;
        });
    }
    {
        std::lock_guard lk(pair_cache_mutex);
        pair_cache().emplace(key, hist);
    }
    return hist;
}

uint64_t hist_at(const DotHist& h, int64_t dot) {
    auto it = h.find(dot);
    return it == h.end() ? 0 : it->second;
}

// A(L,T) over a model lattice; n8/m8/dot carry the doubled-coordinate scaling.
uint64_t rep_number_model(const ModelLattice& M, const BinQF& T) {
    int64_t n = T.n, r = T.r, m = T.m;
    if (n < m) std::swap(n, m);  // enumerate the smaller norm outside
    uint64_t total = 0;
    if (M.blocks == 1) {
        for (const auto& g1 : M.glue)
            for (const auto& g2 : M.glue)
                total += hist_at(coset_pair_hist(g1[0], g2[0], 8 * n, 8 * m), 4 * r);
        return total;
    }
    // rank 16: convolution over T = T1 + T2 across the two 8-blocks.
    for (const auto& g1 : M.glue)
        for (const auto& g2 : M.glue) {
            for (int64_t n8a = 0; n8a <= 8 * n; n8a += 4) {
                for (int64_t m8a = 0; m8a <= 8 * m; m8a += 4) {
                    DotHist ha = coset_pair_hist(g1[0], g2[0], n8a, m8a);
                    if (ha.empty()) continue;
                    DotHist hb = coset_pair_hist(g1[1], g2[1], 8 * n - n8a, 8 * m - m8a);
                    if (hb.empty()) continue;
                    for (const auto& [dot_a, ca] : ha) {
                        uint64_t cb = hist_at(hb, 4 * r - dot_a);
                        total += ca * cb;
                    }
                }
            }
        }
    return total;
}

bool model_membership(const ModelLattice& M, const std::vector<int64_t>& v) {
    auto classify = [](const int64_t* p) -> std::optional<D8Coset> {
        bool all_even = true, all_odd = true;
        int64_t sum = 0;
        for (int i = 0; i < 8; ++i) {
            if (((p[i] % 2) + 2) % 2 == 0) all_odd = false;
            else all_even = false;
            sum += p[i];
        }
        if (!all_even && !all_odd) return std::nullopt;
        int64_t s4 = ((sum % 4) + 4) % 4;
        if (s4 != 0 && s4 != 2) return std::nullopt;
        return D8Coset{all_odd, s4 == 2 ? 1 : 0};
    };
    auto c1 = classify(v.data());
    if (!c1) return false;
    if (M.blocks == 1) {
        for (const auto& g : M.glue)
            if (g[0] == *c1) return true;
        return false;
    }
    auto c2 = classify(v.data() + 8);
    if (!c2) return false;
    for (const auto& g : M.glue)
        if (g[0] == *c1 && g[1] == *c2) return true;
    return false;
}

// Primitivity of a nonzero model vector given by doubled coordinates.
bool model_primitive(const ModelLattice& M, const std::vector<int64_t>& v) {
    int64_t g = 0;
    for (int64_t c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 1) return true;
    for (auto [p, e] : factorize((uint64_t)g)) {
        (void)e;
        std::vector<int64_t> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / (int64_t)p;
        if (model_membership(M, w)) return false;
    }
    return true;
}

void enumerate_model_vectors(const ModelLattice& M, int64_t normQ,
                             const std::function<void(const std::vector<int64_t>&)>& emit) {
    if (M.blocks == 1) {
        std::vector<D8Coset> seen;
        for (const auto& g : M.glue) {
            if (std::find(seen.begin(), seen.end(), g[0]) != seen.end()) continue;
            seen.push_back(g[0]);
            enumerate_coset(g[0], 8 * normQ, [&](const Vec8& v) {
                emit(std::vector<int64_t>(v.begin(), v.end()));
            });
        }
        return;
    }
    std::vector<std::array<D8Coset, 2>> seen;
    for (const auto& g : M.glue) {
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        for (int64_t a = 0; a <= 8 * normQ; a += 4) {
            enumerate_coset(g[0], a, [&](const Vec8& v1) {
                enumerate_coset(g[1], 8 * normQ - a, [&](const Vec8& v2) {
                    std::vector<int64_t> v(16);
                    std::copy(v1.begin(), v1.end(), v.begin());
                    std::copy(v2.begin(), v2.end(), v.begin() + 8);
                    emit(v);
                });
            });
        }
    }
}

uint64_t count_model_vectors(const ModelLattice& M, int64_t normQ) {
    uint64_t c = 0;
    enumerate_model_vectors(M, normQ, [&](const std::vector<int64_t>&) { ++c; });
    return c;
}

}  // namespace

// ---- public representation-number API ----------------------------------------

uint64_t rep_number(const Lattice& L, const BinQF& T) {
    if (!T.positive_semidefinite()) throw std::domain_error("rep_number: T must be psd");
    if (T.n == 0 && T.m == 0) return T.r == 0 ? 1 : 0;
    if (T.m == 0) return T.r == 0 ? rep_number(L, (uint64_t)T.n) : 0;
    if (T.n == 0) return T.r == 0 ? rep_number(L, (uint64_t)T.m) : 0;
    if (L.model) return rep_number_model(*L.model, T);
    // Generic path: enumerate the smaller-norm column, histogram the other.
    BinQF T2 = T;
    if (T2.n < T2.m) std::swap(T2.n, T2.m);
    LdlData ldl = ldl_of(L.gram);
    std::vector<std::vector<int64_t>> outer;
    enumerate_gram(ldl, Rat((long)(2 * T2.m)), [&](const std::vector<int64_t>& y) {
        if (norm2_gram(L.gram, y) == 2 * T2.m) outer.push_back(y);
    });
    uint64_t total = 0;
    for (const auto& y : outer) {
        enumerate_gram(ldl, Rat((long)(2 * T2.n)), [&](const std::vector<int64_t>& x) {
            if (norm2_gram(L.gram, x) == 2 * T2.n && dot_gram(L.gram, x, y) == T2.r) ++total;
        });
    }
    return total;
}

uint64_t rep_number(const Lattice& L, uint64_t m) {
    if (m == 0) return 1;
    if (L.model) return count_model_vectors(*L.model, (int64_t)m);
    LdlData ldl = ldl_of(L.gram);
    uint64_t total = 0;
    enumerate_gram(ldl, Rat((long)(2 * m)), [&](const std::vector<int64_t>& x) {
        if (norm2_gram(L.gram, x) == (int64_t)(2 * m)) ++total;
    });
    return total;
}

uint64_t rep_primitive(const Lattice& L, uint64_t m) {
    if (m == 0) return 0;
    int64_t total = 0;
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % (d * d)) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        total += mu * (int64_t)rep_number(L, m / (d * d));
    }
    if (total < 0) throw std::logic_error("rep_primitive: negative count");
    return (uint64_t)total;
}

SharpPair rep_sharp_both(const Lattice& L, const BinQF& T) {
    if (!T.positive_definite()) throw std::domain_error("rep_sharp: positive T expected");
    // Mobius side of the content split over the second column.
    int64_t mob = 0;
    for (uint64_t t = 1; (int64_t)(t * t) <= T.m; ++t) {
        if (T.m % (int64_t)(t * t) || T.r % (int64_t)t) continue;
        int mu = moebius(t);
        if (mu == 0) continue;
        BinQF Tt{T.n, T.r / (int64_t)t, T.m / (int64_t)(t * t)};
        mob += mu * (int64_t)rep_number(L, Tt);
    }
    // Direct count with the second column primitive.
    uint64_t direct = 0;
    if (L.model) {
        const ModelLattice& M = *L.model;
        // Bucket outer (second-column) vectors per coset; primitivity and the
        // inner histogram are both constant on buckets.
        if (M.blocks == 1) {
            for (const auto& g2 : M.glue) {
                std::map<Vec8, uint64_t> buckets;
                enumerate_coset(g2[0], 8 * T.m, [&](const Vec8& v) { buckets[canonical_vec(v)]++; });
                for (const auto& [rep, count] : buckets) {
                    if (!model_primitive(M, std::vector<int64_t>(rep.begin(), rep.end()))) continue;
                    for (const auto& g1 : M.glue) {
                        uint64_t sub = 0;
                        enumerate_coset(g1[0], 8 * T.n, [&](const Vec8& v) {
                            int64_t dot = 0;
                            for (int i = 0; i < 8; ++i) dot += v[i] * rep[i];
                            if (dot == 4 * T.r) ++sub;
                        });
                        direct += sub * count;
                    }
                }
            }
        } else {
            // Full 16-dimensional outer sweep; desk scale keeps T.m small here.
            enumerate_model_vectors(M, T.m, [&](const std::vector<int64_t>& y) {
                if (!model_primitive(M, y)) return;
                for (int64_t a = 0; a <= 8 * T.n; a += 4) {
                    for (const auto& g1 : M.glue) {
                        enumerate_coset(g1[0], a, [&](const Vec8& v1) {
                            int64_t d1 = 0;
                            for (int i = 0; i < 8; ++i) d1 += v1[i] * y[i];
                            enumerate_coset(g1[1], 8 * T.n - a, [&](const Vec8& v2) {
                                int64_t d2 = d1;
                                for (int i = 0; i < 8; ++i) d2 += v2[i] * y[8 + i];
                                if (d2 == 4 * T.r) ++direct;
                            });
                        });
                    }
                }
            });
        }
    } else {
        LdlData ldl = ldl_of(L.gram);
        std::vector<std::vector<int64_t>> outer;
        enumerate_gram(ldl, Rat((long)(2 * T.m)), [&](const std::vector<int64_t>& y) {
            if (norm2_gram(L.gram, y) == 2 * T.m) outer.push_back(y);
        });
        for (const auto& y : outer) {
            int64_t g = 0;
            for (int64_t c : y) g = std::gcd(g, c < 0 ? -c : c);
            if (g != 1) continue;  // basis coordinates: primitive iff gcd 1
            enumerate_gram(ldl, Rat((long)(2 * T.n)), [&](const std::vector<int64_t>& x) {
                if (norm2_gram(L.gram, x) == 2 * T.n && dot_gram(L.gram, x, y) == T.r) ++direct;
            });
        }
    }
    if (mob < 0) throw std::logic_error("rep_sharp: negative Mobius side");
    return {(uint64_t)mob, direct};
}

uint64_t rep_sharp(const Lattice& L, const BinQF& T) {
    SharpPair p = rep_sharp_both(L, T);
    if (p.mobius_side != p.direct_side)
        throw std::logic_error("rep_sharp: Mobius and direct counts disagree");
    return p.mobius_side;
}

uint64_t rep_primitive(const Lattice& L, const BinQF& T) {
    if (!T.positive_definite()) throw std::domain_error("rep_primitive: positive T expected");
    // A(S,T) = sum over divisor classes G of A*(S, T[G^-1]); invert recursively.
    int64_t total = (int64_t)rep_number(L, T);
    for (const auto& [G, TG] : gl2_divisor_classes(T)) {
        if (gl2_det(G) == 1) continue;
        total -= (int64_t)rep_primitive(L, TG);
    }
    if (total < 0) throw std::logic_error("rep_primitive: negative count");
    return (uint64_t)total;
}

Theta1 theta1_qexp(const Lattice& L, std::size_t prec) {
    Theta1 out;
    out.theta = QExp((int)L.weight_k(), prec);
    for (std::size_t n = 0; n < prec; ++n) out.theta.coeffs[n] = Rat(Int((unsigned long)rep_number(L, n)));
    QExp ek = eisenstein_qexp(L.weight_k(), prec);
    out.cusp_part = qexp_add(out.theta, qexp_scale(Rat(-1), ek));
    out.cusp_part.cuspidal = out.cusp_part.coeffs[0].is_zero();
    return out;
}

}  // namespace petersson
