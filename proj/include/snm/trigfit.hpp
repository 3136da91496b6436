#pragma once

#include <array>
#include <vector>

namespace snm {

/// Real trigonometric polynomial of degree <= 3:
///   p(t) = c[0] + sum_{n=1..3} c[n] cos(n w t) + s[n] sin(n w t),
/// where w = 2*pi/period.
struct TrigPoly {
    std::array<double, 4> cos_c{};  // cos coefficients, index = harmonic
    std::array<double, 4> sin_c{};  // sin coefficients, sin_c[0] unused
    double period = 6.283185307179586476925286766559;

    double eval(double t) const;
    double max_abs_coeff_diff(const TrigPoly& other) const;
};

/// Least-squares trigonometric fit of degree `order` (<= 3) to samples taken
/// at t_j = period * j / m, j = 0..m-1. On an equispaced grid the discrete
/// Fourier sums solve the least-squares problem exactly, and the fit
/// reproduces any trig polynomial of degree <= order when m > 2*order.
TrigPoly fit_trig_poly(const std::vector<double>& samples, int order,
                       double period = 6.283185307179586476925286766559);

}  // namespace snm
