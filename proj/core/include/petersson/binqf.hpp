#pragma once

#include <array>
#include <cstdint>

namespace petersson {

// Half-integral positive binary form T = (n, r/2; r/2, m).
struct BinQF {
    int64_t n = 0, r = 0, m = 0;

    int64_t det2() const { return 4 * n * m - r * r; }  // det(2T)
    bool positive_definite() const { return n > 0 && det2() > 0; }
    bool positive_semidefinite() const { return n >= 0 && m >= 0 && det2() >= 0; }
    bool reduced() const { return (r < 0 ? -r : r) <= m && m <= n; }
    int64_t content() const;
    int64_t minimum() const;  // min(T) for reduced T is m

    bool operator==(const BinQF&) const = default;
};

using GL2 = std::array<std::array<int64_t, 2>, 2>;  // row-major

// T[U] = U' T U.
BinQF apply_gl2(const BinQF& T, const GL2& U);

struct ReduceResult {
    BinQF form;
    GL2 transform;  // form = T[transform]
};

// Gaussian reduction to |r| <= m <= n.
ReduceResult reduce(const BinQF& T);

GL2 gl2_mul(const GL2& A, const GL2& B);
int64_t gl2_det(const GL2& U);

}  // namespace petersson
