#pragma once

#include "snm/patch.hpp"
#include "snm/vec3.hpp"

namespace snm {

/// Metric determinant below this value counts as a degenerate parametrisation.
inline constexpr double kMetricDegeneracyTol = 1e-12;

/// Coefficients of the first and second fundamental forms together with the
/// unit normal N = ps x pt / |ps x pt| (this orientation is used throughout).
struct FundamentalForms {
    double g11 = 0, g12 = 0, g22 = 0;
    double h11 = 0, h12 = 0, h22 = 0;
    Vec3 N;
};

struct ClassicalCurvatures {
    double G = 0;  ///< Gauss curvature
    double H = 0;  ///< mean curvature (w.r.t. N above)
    Vec3 N;
};

/// First/second fundamental forms from a jet. Throws std::runtime_error when
/// the metric determinant g11*g22 - g12^2 falls below kMetricDegeneracyTol.
FundamentalForms fundamental_forms(const SurfaceJet2& jet);

ClassicalCurvatures classical_curvatures(const FundamentalForms& forms);

}  // namespace snm
