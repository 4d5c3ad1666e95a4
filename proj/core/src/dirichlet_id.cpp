#include "petersson/dirichlet_id.hpp"

namespace petersson {

Rat vnstar_vn_eigen(unsigned k, uint64_t N) {
    Rat total(0);
    for (uint64_t t : divisors(N))
        total += psi_direct(t) * Rat(pow(Int((unsigned long)t), k - 2)) *
                 Rat(sigma_pow(2 * k - 3, N / t));
    return total;
}

namespace {

FactorizationReport compare(const ArithSeq& lhs, const ArithSeq& rhs) {
    FactorizationReport rep;
    for (std::size_t n = 1; n <= lhs.length(); ++n)
        if (!(lhs.at(n) == rhs.at(n))) {
            rep.pass = false;
            rep.first_mismatch = n;
            break;
        }
    return rep;
}

}  // namespace

FactorizationReport verify_Z_identity(unsigned k, std::size_t N_max, unsigned mutate_shift) {
    // lambda stream = psi-stream shifted by k-2, convolved with sigma_{2k-3}.
    ArithSeq psi = dirichlet_mul(dirichlet_mul(seq_npow(1 + mutate_shift, N_max), seq_ones(N_max)),
                                 seq_inv_zeta_2s(N_max));
    ArithSeq lambda(N_max);
    for (std::size_t t = 1; t <= N_max; ++t)
        lambda.at(t) = psi.at(t) * Rat(pow(Int((unsigned long)t), k - 2));
    lambda = dirichlet_mul(lambda, seq_npow(2 * k - 3, N_max));
    lambda = dirichlet_mul(lambda, seq_ones(N_max));
    ArithSeq lhs = dirichlet_mul(seq_zeta_2s_shift(2 * k - 4, N_max), lambda);
    ArithSeq rhs = dirichlet_mul(dirichlet_mul(seq_ones(N_max), seq_npow(k - 1, N_max)),
                                 dirichlet_mul(seq_npow(k - 2, N_max), seq_npow(2 * k - 3, N_max)));
    return compare(lhs, rhs);
}

FactorizationReport zarkovskaya_factor(unsigned k, std::size_t N_max) {
    // L(E_k, s) has coefficients sigma_{k-1}; its (k-2)-shift has n^{k-2} sigma_{k-1}(n).
    ArithSeq sig = dirichlet_mul(seq_ones(N_max), seq_npow(k - 1, N_max));
    ArithSeq shifted(N_max);
    for (std::size_t n = 1; n <= N_max; ++n)
        shifted.at(n) = sig.at(n) * Rat(pow(Int((unsigned long)n), k - 2));
    ArithSeq lhs = dirichlet_mul(sig, shifted);
    ArithSeq rhs = dirichlet_mul(dirichlet_mul(seq_ones(N_max), seq_npow(k - 1, N_max)),
                                 dirichlet_mul(seq_npow(k - 2, N_max), seq_npow(2 * k - 3, N_max)));
    return compare(lhs, rhs);
}

}  // namespace petersson
