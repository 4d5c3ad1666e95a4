#include "petersson/diffop.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace petersson {

namespace {

using Alpha = std::array<unsigned, 6>;  // orders in (z1, z1b, z2, z2b, z4, z4b)

std::array<Cplx, 6> base_coords(const SamplePoint& p) {
    return {p.z1, p.z1.conj(), p.z2, p.z2.conj(), p.z4, p.z4.conj()};
}

Cplx half_i_diff() { return Cplx{Real(0L), Real(-1L) / Real(2L)}; }  // 1/(2i)

// Jet of H = h t^k e^{Rt} (with_det_factor: of G = H (y1 t)^{-1/2}) in the
// shape given by alpha.
Jet build_jet(const ExpTestFn& h, const SamplePoint& p, const Alpha& alpha, bool with_det_factor) {
    std::vector<unsigned> shape(alpha.begin(), alpha.end());
    auto w = base_coords(p);
    std::array<Jet, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = Jet::variable(shape, i, w[i]);
    Cplx hi = half_i_diff();
    Jet y1 = hi * (v[0] - v[1]);
    Jet y2 = hi * (v[2] - v[3]);
    Jet y4 = hi * (v[4] - v[5]);
    Jet t = y4 - (y2 * y2) * jet_recip(y1);
    Jet arg = (h.alpha * v[0]) + (h.alpha_b * v[1]) + (h.beta * v[2]) + (h.beta_b * v[3]);
    Jet hj = jet_exp(arg);
    Cplx R{p.R(), Real(0L)};
    Jet H = hj * jet_pow(t, Cplx(Real((long)p.k))) * jet_exp(R * t);
    if (with_det_factor) H = H * jet_pow(y1 * t, Cplx(Real(-1L) / Real(2L)));
    return H;
}

struct OpTerm {
    Cplx coeff;
    Alpha alpha;
};

Cplx apply_op(const std::vector<OpTerm>& terms, const ExpTestFn& h, const SamplePoint& p,
              bool with_det_factor) {
    std::map<Alpha, Cplx> memo;
    Cplx total{Real(0L), Real(0L)};
    for (const auto& term : terms) {
        auto it = memo.find(term.alpha);
        if (it == memo.end()) {
            Jet j = build_jet(h, p, term.alpha, with_det_factor);
            std::vector<unsigned> idx(term.alpha.begin(), term.alpha.end());
            it = memo.emplace(term.alpha, j.partial(idx)).first;
        }
        total += term.coeff * it->second;
    }
    return total;
}

std::vector<OpTerm> phi1_terms(const SamplePoint& p) {
    auto w = base_coords(p);
    Cplx a1 = w[0] - w[1], a2 = w[2] - w[3], a4 = w[4] - w[5];
    Cplx half{Real(1L) / Real(2L), Real(0L)};
    return {
        {a1 * a1, {1, 1, 0, 0, 0, 0}},
        {a2 * a2, {1, 0, 0, 0, 0, 1}},
        {a2 * a2, {0, 1, 0, 0, 1, 0}},
        {a4 * a4, {0, 0, 0, 0, 1, 1}},
        {a1 * a2, {1, 0, 0, 1, 0, 0}},
        {a1 * a2, {0, 1, 1, 0, 0, 0}},
        {a2 * a4, {0, 0, 1, 0, 0, 1}},
        {a2 * a4, {0, 0, 0, 1, 1, 0}},
        {half * a1 * a4, {0, 0, 1, 1, 0, 0}},
        {half * a2 * a2, {0, 0, 1, 1, 0, 0}},
    };
}

std::vector<OpTerm> phi2_inner_terms() {
    Cplx one{Real(1L), Real(0L)};
    Cplx quarter{Real(1L) / Real(4L), Real(0L)};
    Cplx sixteenth{Real(1L) / Real(16L), Real(0L)};
    return {
        {one, {1, 1, 0, 0, 1, 1}},
        {-quarter, {1, 0, 0, 2, 1, 0}},
        {-quarter, {0, 1, 2, 0, 0, 1}},
        {sixteenth, {0, 0, 2, 2, 0, 0}},
    };
}

}  // namespace

Cplx eval_h(const ExpTestFn& h, const SamplePoint& p) {
    auto w = base_coords(p);
    return mp_exp(h.alpha * w[0] + h.alpha_b * w[1] + h.beta * w[2] + h.beta_b * w[3]);
}

Cplx eval_H(const ExpTestFn& h, const SamplePoint& p) {
    Real t = p.t();
    Cplx tk = mp_pow(t, Cplx(Real((long)p.k)));
    Real ert = mp_exp(p.R() * t);
    Cplx v = eval_h(h, p) * tk;
    return {v.re * ert, v.im * ert};
}

Cplx eval_phi1(const ExpTestFn& h, const SamplePoint& p) {
    return apply_op(phi1_terms(p), h, p, false);
}

Cplx eval_phi2(const ExpTestFn& h, const SamplePoint& p) {
    Cplx inner = apply_op(phi2_inner_terms(), h, p, true);
    Real det_y = p.y1() * p.t();
    Cplx scale = mp_pow(det_y, Cplx(Real(5L) / Real(2L)));
    return Cplx{Real(16L), Real(0L)} * scale * inner;
}

Cplx eval_maass(const ExpTestFn& h, const SamplePoint& p) {
    Real k((long)p.k);
    Real fac = (k - Real(1L) / Real(2L)) * (k - Real(3L) / Real(2L));
    Cplx phi1 = eval_phi1(h, p);
    Cplx Hv = eval_H(h, p);
    Real kk2 = k * (k - Real(2L));
    Cplx inner = phi1 + Cplx{kk2, Real(0L)} * Hv;
    return eval_phi2(h, p) + Cplx{fac, Real(0L)} * inner;
}

// ---- closed-form generators ---------------------------------------------------

Cplx eval_L(LGen which, const ExpTestFn& h, const SamplePoint& p) {
    auto w = base_coords(p);
    Cplx a1 = w[0] - w[1], a2 = w[2] - w[3];
    const Cplx &al = h.alpha, &alb = h.alpha_b, &be = h.beta, &beb = h.beta_b;
    Cplx hv = eval_h(h, p);
    Cplx i_{Real(0L), Real(1L)};
    Cplx two_i{Real(0L), Real(2L)};
    Cplx half{Real(1L) / Real(2L), Real(0L)};
    switch (which) {
        case LGen::L1:
            return (-(a1 * a1 * al * alb) - (a2 * a2 * be * beb) -
                    (a1 * a2 * (alb * be + al * beb))) *
                   hv;
        case LGen::L2:
            return a1 * be * beb * hv;
        case LGen::L3:
            return (i_ * a1 * a1 * (-(al * beb * beb) + alb * be * be) +
                    i_ * a2 * a1 * (be * be * beb - be * beb * beb) + two_i * a1 * be * beb) *
                   hv;
        case LGen::L3p:
            return (a1 * a1 * (-(al * beb * beb) + alb * be * be) +
                    a2 * a1 * (be * be * beb - be * beb * beb)) *
                   hv;
        case LGen::L4:
            return (half * a1 * a1 * (al + alb) * (be * be + beb * beb) -
                    half * a1 * a1 * (al - alb) * (be * be - beb * beb) +
                    a1 * a2 * (be + beb) * be * beb) *
                   hv;
    }
    throw std::logic_error("eval_L: unknown generator");
}

Cplx eval_L1_plus_r(const ExpTestFn& h, const SamplePoint& p, unsigned k) {
    Real kk((long)k);
    Real r = -(kk - Real(1L) / Real(2L)) * (kk - Real(3L) / Real(2L));
    return eval_L(LGen::L1, h, p) + Cplx{r, Real(0L)} * eval_h(h, p);
}

// ---- finite differences --------------------------------------------------------

namespace {

using PointFn = std::function<Cplx(const std::array<Cplx, 6>&)>;

// 8th-order central first derivative in variable `var`, recursing for mixed
// and repeated orders.
Cplx fd_partial(const PointFn& f, std::array<Cplx, 6> at, Alpha alpha, const Real& step) {
    int var = -1;
    for (int i = 0; i < 6; ++i)
        if (alpha[(std::size_t)i] > 0) {
            var = i;
            break;
        }
    if (var < 0) return f(at);
    alpha[(std::size_t)var] -= 1;
    static const std::pair<int, std::pair<long, long>> stencil[] = {
        {1, {4, 5}}, {-1, {-4, 5}}, {2, {-1, 5}}, {-2, {1, 5}},
        {3, {4, 105}}, {-3, {-4, 105}}, {4, {-1, 280}}, {-4, {1, 280}},
    };
    Cplx acc{Real(0L), Real(0L)};
    for (const auto& [offset, weight] : stencil) {
        std::array<Cplx, 6> shifted = at;
        shifted[(std::size_t)var].re += Real((long)offset) * step;
        Cplx term = fd_partial(f, shifted, alpha, step);
        Real w = Real(weight.first) / Real(weight.second);
        acc += Cplx{w, Real(0L)} * term;
    }
    return Cplx{acc.re / step, acc.im / step};
}

PointFn plain_H(const ExpTestFn& h, unsigned k, const Real& R, bool with_det_factor) {
    return [=](const std::array<Cplx, 6>& w) -> Cplx {
        Cplx hi = half_i_diff();
        Cplx y1 = hi * (w[0] - w[1]);
        Cplx y2 = hi * (w[2] - w[3]);
        Cplx y4 = hi * (w[4] - w[5]);
        Cplx t = y4 - y2 * y2 / y1;
        Cplx hv = mp_exp(h.alpha * w[0] + h.alpha_b * w[1] + h.beta * w[2] + h.beta_b * w[3]);
        auto cpow = [](const Cplx& base, const Cplx& e) {
            Real mod = mp_abs(base);
            Real arg;
            mpfr_atan2(arg.raw(), base.im.raw(), base.re.raw(), MPFR_RNDN);
            return mp_exp(e * Cplx{mp_log(mod), arg});
        };
        Cplx out = hv * cpow(t, Cplx(Real((long)k))) * mp_exp(Cplx{R, Real(0L)} * t);
        if (with_det_factor) out = out * cpow(y1 * t, Cplx(Real(-1L) / Real(2L)));
        return out;
    };
}

Real fd_step() {
    Real s(1L);
    mpfr_mul_2si(s.raw(), s.raw(), -32, MPFR_RNDN);
    return s;
}

}  // namespace

Cplx fd_phi1(const ExpTestFn& h, const SamplePoint& p) {
    PointFn f = plain_H(h, p.k, p.R(), false);
    auto at = base_coords(p);
    Real step = fd_step();
    Cplx total{Real(0L), Real(0L)};
    for (const auto& term : phi1_terms(p)) total += term.coeff * fd_partial(f, at, term.alpha, step);
    return total;
}

Cplx fd_phi2(const ExpTestFn& h, const SamplePoint& p) {
    PointFn f = plain_H(h, p.k, p.R(), true);
    auto at = base_coords(p);
    Real step = fd_step();
    Cplx total{Real(0L), Real(0L)};
    for (const auto& term : phi2_inner_terms()) total += term.coeff * fd_partial(f, at, term.alpha, step);
    Real det_y = p.y1() * p.t();
    return Cplx{Real(16L), Real(0L)} * mp_pow(det_y, Cplx(Real(5L) / Real(2L))) * total;
}

Cplx fd_L(LGen which, const ExpTestFn& h, const SamplePoint& p) {
    PointFn f = [&h](const std::array<Cplx, 6>& w) {
        return mp_exp(h.alpha * w[0] + h.alpha_b * w[1] + h.beta * w[2] + h.beta_b * w[3]);
    };
    auto at = base_coords(p);
    Real step = fd_step();
    auto w = base_coords(p);
    Cplx a1 = w[0] - w[1], a2 = w[2] - w[3];
    Cplx i_{Real(0L), Real(1L)};
    Cplx half{Real(1L) / Real(2L), Real(0L)};
    std::vector<OpTerm> terms;
    switch (which) {
        case LGen::L1:
            terms = {{-(a1 * a1), {1, 1, 0, 0, 0, 0}},
                     {-(a2 * a2), {0, 0, 1, 1, 0, 0}},
                     {-(a1 * a2), {0, 1, 1, 0, 0, 0}},
                     {-(a1 * a2), {1, 0, 0, 1, 0, 0}}};
            break;
        case LGen::L2:
            terms = {{a1, {0, 0, 1, 1, 0, 0}}};
            break;
        case LGen::L3:
            terms = {{-(i_ * a1 * a1), {1, 0, 0, 2, 0, 0}},
                     {i_ * a1 * a1, {0, 1, 2, 0, 0, 0}},
                     {i_ * a2 * a1, {0, 0, 2, 1, 0, 0}},
                     {-(i_ * a2 * a1), {0, 0, 1, 2, 0, 0}},
                     {i_ * Cplx{Real(2L), Real(0L)} * a1, {0, 0, 1, 1, 0, 0}}};
            break;
        case LGen::L3p:
            terms = {{-(a1 * a1), {1, 0, 0, 2, 0, 0}},
                     {a1 * a1, {0, 1, 2, 0, 0, 0}},
                     {a2 * a1, {0, 0, 2, 1, 0, 0}},
                     {-(a2 * a1), {0, 0, 1, 2, 0, 0}}};
            break;
        case LGen::L4:
            terms = {{half * a1 * a1, {1, 0, 2, 0, 0, 0}},
                     {half * a1 * a1, {1, 0, 0, 2, 0, 0}},
                     {half * a1 * a1, {0, 1, 2, 0, 0, 0}},
                     {half * a1 * a1, {0, 1, 0, 2, 0, 0}},
                     {-(half * a1 * a1), {1, 0, 2, 0, 0, 0}},
                     {half * a1 * a1, {1, 0, 0, 2, 0, 0}},
                     {half * a1 * a1, {0, 1, 2, 0, 0, 0}},
                     {-(half * a1 * a1), {0, 1, 0, 2, 0, 0}},
                     {a1 * a2, {0, 0, 2, 1, 0, 0}},
                     {a1 * a2, {0, 0, 1, 2, 0, 0}}};
            break;
    }
    Cplx total{Real(0L), Real(0L)};
    for (const auto& term : terms) total += term.coeff * fd_partial(f, at, term.alpha, step);
    return total;
}

// ---- t-model fit ---------------------------------------------------------------

TDecomposition t_decompose(const std::vector<std::pair<Real, Cplx>>& samples, unsigned k,
                           const Real& R) {
    if (samples.size() < 4) throw std::invalid_argument("t_decompose: need >= 4 samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (!(mp_abs(samples[i].first - samples[j].first) > Real(1L) / Real(1000L)))
                throw std::invalid_argument("t_decompose: t values too close");
    auto reduced = [&](std::size_t i) {
        const auto& [t, v] = samples[i];
        Cplx scale = mp_pow(t, Cplx(Real(-(long)k))) ;
        Real e = mp_exp(-(R * t));
        return v * scale * Cplx{e, Real(0L)};
    };
    // 3x3 Vandermonde solve by Cramer's rule on samples 0..2.
    std::array<Real, 3> t{samples[0].first, samples[1].first, samples[2].first};
    std::array<Cplx, 3> u{reduced(0), reduced(1), reduced(2)};
    auto det3 = [](const std::array<std::array<Cplx, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::array<std::array<Cplx, 3>, 3> M;
    for (int i = 0; i < 3; ++i)
        M[(std::size_t)i] = {Cplx{Real(1L), Real(0L)}, Cplx{t[(std::size_t)i], Real(0L)},
                             Cplx{t[(std::size_t)i] * t[(std::size_t)i], Real(0L)}};
    Cplx D = det3(M);
    TDecomposition out;
    std::array<Cplx, 3> c;
    for (int col = 0; col < 3; ++col) {
        auto Mc = M;
        for (int row = 0; row < 3; ++row) Mc[(std::size_t)row][(std::size_t)col] = u[(std::size_t)row];
        c[(std::size_t)col] = det3(Mc) / D;
    }
    out.c0 = c[0];
    out.c1 = c[1];
    out.c2 = c[2];
    Real scale(0L);
    for (std::size_t i = 0; i < 3; ++i) scale = mp_max(scale, mp_abs(u[i]));
    Real resid(0L);
    for (std::size_t i = 3; i < samples.size(); ++i) {
        Real ti = samples[i].first;
        Cplx pred = c[0] + c[1] * Cplx{ti, Real(0L)} + c[2] * Cplx{ti * ti, Real(0L)};
        resid = mp_max(resid, mp_abs(pred - reduced(i)));
        scale = mp_max(scale, mp_abs(reduced(i)));
    }
    out.residual = resid / scale;
    return out;
}

std::vector<std::pair<Real, Cplx>> sample_in_t(const ExpTestFn& h, const SamplePoint& p,
                                               std::size_t count,
                                               Cplx (*op)(const ExpTestFn&, const SamplePoint&)) {
    std::vector<std::pair<Real, Cplx>> out;
    for (std::size_t i = 0; i < count; ++i) {
        SamplePoint q = p;
        q.z4.im = q.z4.im + Real((long)i) * (Real(1L) / Real(4L));
        out.push_back({q.t(), op(h, q)});
    }
    return out;
}

// ---- degree-1 residual kernel ---------------------------------------------------

Real residual_kernel_error(unsigned k, const Cplx& a, const Cplx& b, const Cplx& tau) {
    std::vector<unsigned> shape{1, 1};
    Cplx taub = tau.conj();
    Jet vt = Jet::variable(shape, 0, tau);
    Jet vtb = Jet::variable(shape, 1, taub);
    Cplx hi = half_i_diff();
    Jet y = hi * (vt - vtb);
    Cplx bb = b.conj();
    Jet F = jet_exp((a * vt) + (bb * vtb)) * jet_pow(y, Cplx(Real((long)k)));
    // D_k = 4 y^2 d ddbar - k(k-1)
    Cplx dd = F.partial({1, 1});
    Cplx yv = hi * (tau - taub);
    Real kk((long)k);
    Cplx lhs = Cplx{Real(4L), Real(0L)} * yv * yv * dd -
               Cplx{kk * (kk - Real(1L)), Real(0L)} * F.value();
    // K(f,g) = 4 f' gbar' y^{k+2} + 2ik (f' gbar - f gbar') y^{k+1}
    Cplx fg = mp_exp(a * tau + bb * taub);
    Cplx yk1 = mp_pow(yv.re, Cplx(Real((long)k + 1)));
    Cplx yk2 = mp_pow(yv.re, Cplx(Real((long)k + 2)));
    Cplx two_ik{Real(0L), Real(2L) * kk};
    Cplx rhs = Cplx{Real(4L), Real(0L)} * a * bb * fg * yk2 + two_ik * (a - bb) * fg * yk1;
    Real scale = mp_max(mp_max(mp_abs(lhs), mp_abs(rhs)), mp_abs(fg));
    return mp_abs(lhs - rhs) / scale;
}

}  // namespace petersson
