#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "petersson/mp.hpp"

namespace petersson {

// Dense truncated Taylor expansion in several complex variables, with a
// per-variable order cap. Multiplication truncates componentwise; analytic
// functions are applied through their series in the nilpotent part.
class Jet {
public:
    Jet() = default;
    Jet(std::vector<unsigned> orders, const Cplx& value) : orders_(std::move(orders)) {
        size_ = 1;
        for (unsigned o : orders_) size_ *= (o + 1);
        coeff_.assign(size_, Cplx(Real(0L)));
        coeff_[0] = value;
    }

    static Jet variable(const std::vector<unsigned>& orders, std::size_t var, const Cplx& value) {
        Jet j(orders, value);
        if (orders[var] >= 1) {
            std::vector<unsigned> idx(orders.size(), 0);
            idx[var] = 1;
            j.at(idx) = Cplx(Real(1L));
        }
        return j;
    }

    const std::vector<unsigned>& orders() const { return orders_; }
    std::size_t size() const { return size_; }

    Cplx& at(const std::vector<unsigned>& idx) { return coeff_[flatten(idx)]; }
    const Cplx& at(const std::vector<unsigned>& idx) const { return coeff_[flatten(idx)]; }
    const Cplx& value() const { return coeff_[0]; }

    // d^alpha f = alpha! * coefficient(alpha).
    Cplx partial(const std::vector<unsigned>& idx) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(const Cplx& c, const Jet& a);

    unsigned total_order() const {
        unsigned t = 0;
        for (unsigned o : orders_) t += o;
        return t;
    }

private:
    std::size_t flatten(const std::vector<unsigned>& idx) const {
        std::size_t f = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (idx[i] > orders_[i]) throw std::out_of_range("Jet: index beyond order");
            f = f * (orders_[i] + 1) + idx[i];
        }
        return f;
    }

    std::vector<unsigned> orders_;
    std::size_t size_ = 0;
    std::vector<Cplx> coeff_;

    friend Jet jet_apply_series(const Jet& f, const std::vector<Cplx>& series);
};

// f with coefficient series sum_n series[n] * (f - f0)^n; series.size() must
// exceed the total order.
Jet jet_apply_series(const Jet& f, const std::vector<Cplx>& series);

Jet jet_exp(const Jet& f);
// f(0)^c * sum C(c,n) u^n, for f with value away from the negative real axis;
// used with real positive values here.
Jet jet_pow(const Jet& f, const Cplx& c);
Jet jet_recip(const Jet& f);

}  // namespace petersson
