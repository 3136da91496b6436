#pragma once

#include <functional>

namespace snm {

/// Adaptive Simpson quadrature of f over [a, b] (a > b allowed, sign flips).
/// Subdivides until the local Richardson error estimate meets abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 52);

}  // namespace snm
