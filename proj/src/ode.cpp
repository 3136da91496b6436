#include "snm/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snm {
namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

using Vec = std::vector<double>;

struct Stepper {
    const OdeRhs& rhs;
    std::size_t n;
    Vec k1, k2, k3, k4, k5, k6, k7, tmp;

    Stepper(const OdeRhs& f, std::size_t dim)
        : rhs(f), n(dim), k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim), tmp(dim) {}

    // One DP step of size h from (s, y); fills ynew and the embedded error
    // estimate err. k1 must hold rhs(s, y) on entry (FSAL reuse).
    void step(double s, const Vec& y, double h, Vec& ynew, Vec& err) {
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
        rhs(s + c2 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(s + c3 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(s + c4 * h, tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(s + c5 * h, tmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(s + h, tmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(s + h, ynew, k7);
        for (std::size_t i = 0; i < n; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    }
};

double error_norm(const Vec& err, const Vec& y0, const Vec& y1, const OdeOptions& o) {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc = o.abs_tol + o.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double q = err[i] / sc;
        acc += q * q;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

OdeResult integrate_ode(const OdeRhs& rhs, Vec y0, double s0, double s1, const OdeOptions& opts,
                        const OdePredicate& stop, const OdeObserver& observer) {
    if (y0.empty()) throw std::invalid_argument("integrate_ode: empty state");
    const double dir = (s1 >= s0) ? 1.0 : -1.0;
    const std::size_t n = y0.size();
    Stepper st(rhs, n);
    Vec y = std::move(y0), ynew(n), err(n);

    OdeResult res;
    res.s = s0;
    if (observer) observer(s0, y);
    if (stop && stop(s0, y)) {
        res.outcome = OdeOutcome::StopTriggered;
        res.y = y;
        return res;
    }
    if (s0 == s1) {
        res.outcome = OdeOutcome::ReachedEnd;
        res.y = y;
        return res;
    }

    rhs(s0, y, st.k1);
    double s = s0;
    double h = dir * std::min(opts.h_init, opts.h_max);
    for (long it = 0; it < opts.max_steps; ++it) {
        if (dir * (s + h - s1) > 0.0) h = s1 - s;
        st.step(s, y, h, ynew, err);
        const double en = error_norm(err, y, ynew, opts);
        if (en <= 1.0) {  // accept
            const double s_next = s + h;
            if (stop && stop(s_next, ynew)) {
                // Locate the event inside (s, s_next] by bisection on the
                // substep length, re-stepping from the last accepted state.
                double lo = 0.0, hi = h;
                Vec y_hi = ynew, y_try(n), e_try(n);
                for (int b = 0; b < 60 && std::abs(hi - lo) > 1e-12 * std::abs(h); ++b) {
                    const double mid = 0.5 * (lo + hi);
                    st.step(s, y, mid, y_try, e_try);
                    if (stop(s + mid, y_try)) {
                        hi = mid;
                        y_hi = y_try;
                    } else {
                        lo = mid;
                    }
                }
                res.outcome = OdeOutcome::StopTriggered;
                res.s = s + hi;
                res.y = y_hi;
                res.n_accepted++;
                if (observer) observer(res.s, res.y);
                return res;
            }
            s = s_next;
            y.swap(ynew);
            st.k1.swap(st.k7);  // FSAL
            res.n_accepted++;
            if (observer) observer(s, y);
            if (dir * (s - s1) >= 0.0) {
                res.outcome = OdeOutcome::ReachedEnd;
                res.s = s;
                res.y = y;
                return res;
            }
        }
        const double fac = (en > 0.0) ? 0.9 * std::pow(en, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        if (std::abs(h) > opts.h_max) h = dir * opts.h_max;
        if (std::abs(h) < opts.h_min) {
            res.outcome = OdeOutcome::StepUnderflow;
            res.s = s;
            res.y = y;
            return res;
        }
    }
    res.outcome = OdeOutcome::MaxSteps;
    res.s = s;
    res.y = y;
    return res;
}

}  // namespace snm
