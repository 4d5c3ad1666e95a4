#include "petersson/jet.hpp"

namespace petersson {

namespace {

// Iterates all multi-indices within the order caps.
struct IndexWalker {
    const std::vector<unsigned>& orders;
    std::vector<unsigned> idx;
    bool done = false;

    explicit IndexWalker(const std::vector<unsigned>& o) : orders(o), idx(o.size(), 0) {}
    void next() {
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (idx[i] < orders[i]) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = 0;
                return;
            }
        }
        done = true;
    }
};

}  // namespace

Cplx Jet::partial(const std::vector<unsigned>& idx) const {
    Cplx c = at(idx);
    Real fact(1L);
    for (unsigned a : idx)
        for (unsigned i = 2; i <= a; ++i) fact *= Real((long)i);
    return {c.re * fact, c.im * fact};
}

Jet operator+(const Jet& a, const Jet& b) {
    if (a.orders_ != b.orders_) throw std::invalid_argument("Jet: order mismatch");
    Jet out = a;
    for (std::size_t i = 0; i < out.size_; ++i) out.coeff_[i] += b.coeff_[i];
    return out;
}

Jet operator-(const Jet& a, const Jet& b) {
    if (a.orders_ != b.orders_) throw std::invalid_argument("Jet: order mismatch");
    Jet out = a;
    for (std::size_t i = 0; i < out.size_; ++i) out.coeff_[i] = out.coeff_[i] - b.coeff_[i];
    return out;
}

Jet operator*(const Cplx& c, const Jet& a) {
    Jet out = a;
    for (auto& v : out.coeff_) v = c * v;
    return out;
}

Jet operator*(const Jet& a, const Jet& b) {
    if (a.orders_ != b.orders_) throw std::invalid_argument("Jet: order mismatch");
    Jet out(a.orders_, Cplx(Real(0L)));
    out.coeff_[0] = Cplx(Real(0L));
    IndexWalker ia(a.orders_);
    for (; !ia.done; ia.next()) {
        const Cplx& ca = a.at(ia.idx);
        if (ca.re.is_zero() && ca.im.is_zero()) continue;
        // b restricted to indices that keep the sum within the caps
        std::vector<unsigned> room(a.orders_.size());
        for (std::size_t i = 0; i < room.size(); ++i) room[i] = a.orders_[i] - ia.idx[i];
        IndexWalker ib(room);
        std::vector<unsigned> sum(a.orders_.size());
        for (; !ib.done; ib.next()) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ia.idx[i] + ib.idx[i];
            out.at(sum) += ca * b.at(ib.idx);
        }
    }
    return out;
}

Jet jet_apply_series(const Jet& f, const std::vector<Cplx>& series) {
    Jet u = f;
    u.coeff_[0] = Cplx(Real(0L));  // nilpotent part
    Jet acc(f.orders_, series[0]);
    Jet upow(f.orders_, Cplx(Real(1L)));
    unsigned tmax = f.total_order();
    for (unsigned n = 1; n <= tmax && n < series.size(); ++n) {
        upow = upow * u;
        acc = acc + (series[n] * upow);
    }
    return acc;
}

Jet jet_exp(const Jet& f) {
    unsigned tmax = f.total_order();
    std::vector<Cplx> series(tmax + 1);
    Cplx e0 = mp_exp(f.value());
    Real fact(1L);
    for (unsigned n = 0; n <= tmax; ++n) {
        if (n >= 2) fact *= Real((long)n);
        series[n] = Cplx{e0.re / fact, e0.im / fact};
    }
    return jet_apply_series(f, series);
}

Jet jet_pow(const Jet& f, const Cplx& c) {
    unsigned tmax = f.total_order();
    // f^c = f0^c sum_n C(c,n) (u/f0)^n; fold the 1/f0^n into the series.
    std::vector<Cplx> series(tmax + 1);
    Cplx f0 = f.value();
    Cplx f0c;
    if (f0.im.is_zero() && f0.re > Real(0L)) {
        f0c = mp_pow(f0.re, c);
    } else {
        // log via principal branch
        Real mod = mp_abs(f0);
        Real arg;
        mpfr_atan2(arg.raw(), f0.im.raw(), f0.re.raw(), MPFR_RNDN);
        Cplx logf0{mp_log(mod), arg};
        f0c = mp_exp(c * logf0);
    }
    Cplx binom{Real(1L), Real(0L)};
    Cplx f0_pow{Real(1L), Real(0L)};
    for (unsigned n = 0; n <= tmax; ++n) {
        series[n] = f0c * binom / f0_pow;
        Cplx factor = (c - Cplx(Real((long)n))) / Cplx(Real((long)(n + 1)));
        binom = binom * factor;
        f0_pow = f0_pow * f0;
    }
    return jet_apply_series(f, series);
}

Jet jet_recip(const Jet& f) { return jet_pow(f, Cplx(Real(-1L))); }

}  // namespace petersson
