#include "petersson/binqf.hpp"

#include <numeric>
#include <stdexcept>

namespace petersson {

int64_t BinQF::content() const {
    uint64_t g = std::gcd(std::gcd((uint64_t)(n < 0 ? -n : n), (uint64_t)(r < 0 ? -r : r)),
                          (uint64_t)(m < 0 ? -m : m));
    return (int64_t)g;
}

int64_t BinQF::minimum() const {
    if (!reduced()) throw std::logic_error("BinQF::minimum: form not reduced");
    return m;
}

BinQF apply_gl2(const BinQF& T, const GL2& U) {
    int64_t a = U[0][0], b = U[0][1], c = U[1][0], d = U[1][1];
    BinQF out;
    out.n = T.n * a * a + T.r * a * c + T.m * c * c;
    out.m = T.n * b * b + T.r * b * d + T.m * d * d;
    out.r = 2 * T.n * a * b + T.r * (a * d + b * c) + 2 * T.m * c * d;
    return out;
}

GL2 gl2_mul(const GL2& A, const GL2& B) {
    GL2 C{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return C;
}

int64_t gl2_det(const GL2& U) { return U[0][0] * U[1][1] - U[0][1] * U[1][0]; }

ReduceResult reduce(const BinQF& T) {
    if (!T.positive_definite()) throw std::domain_error("reduce: positive definite input required");
    BinQF cur = T;
    GL2 U{{{1, 0}, {0, 1}}};
    for (int guard = 0; guard < 256; ++guard) {
        // Translate (x,y) -> (x, tx+y) so that |r| <= m.
        int64_t t = 0;
        if (cur.r > cur.m)
            t = -((cur.r + cur.m) / (2 * cur.m));
        else if (cur.r < -cur.m)
            t = (-cur.r + cur.m) / (2 * cur.m);
        if (t != 0) {
            GL2 S{{{1, 0}, {t, 1}}};
            cur = apply_gl2(cur, S);
            U = gl2_mul(U, S);
        }
        if (cur.m <= cur.n) return {cur, U};
        GL2 W{{{0, -1}, {1, 0}}};
        cur = apply_gl2(cur, W);
        U = gl2_mul(U, W);
    }
    throw std::logic_error("reduce: did not terminate");
}

}  // namespace petersson
