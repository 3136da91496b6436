#pragma once

#include <functional>

#include "snm/vec3.hpp"

namespace snm {

/// Planar curve data at one arc-length parameter value: coordinates (x, z)
/// and their first two derivatives. For unit-speed curves xp^2 + zp^2 = 1.
struct ProfilePoint {
    double x = 0, z = 0;
    double xp = 0, zp = 0;
    double xpp = 0, zpp = 0;

    /// Signed curvature x' z'' - z' x'' of a unit-speed curve.
    double kappa() const { return xp * zpp - zp * xpp; }
};

/// Unit-speed planar curve s -> (x(s), z(s)) on an interval. Evaluation is
/// permitted on the closed interval (second derivatives may be unbounded at
/// the ends); sampling loops downstream stay strictly inside.
class ProfileCurve {
public:
    using JetFn = std::function<ProfilePoint(double)>;

    ProfileCurve(JetFn jet, double s_min, double s_max);

    /// Throws std::domain_error outside [s_min, s_max].
    ProfilePoint at(double s) const;

    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    bool bounded_below() const;
    bool bounded_above() const;

private:
    JetFn jet_;
    double s_min_, s_max_;
};

/// Straight line through (x0, z0) with direction angle theta from the x-axis.
ProfileCurve line_profile(double x0, double z0, double theta, double s_min, double s_max);

/// Circle of radius r centred at (c1, c2), parametrised by arc length
/// starting at (c1 + r, c2) and turning counterclockwise.
ProfileCurve circle_profile(double c1, double c2, double r);

/// Unit-speed curve from a turning angle s -> phi(s): x' = cos(phi),
/// z' = sin(phi). Coordinates are recovered by adaptive quadrature anchored
/// at s = 0 where the curve passes through (x0, z0).
ProfileCurve turning_angle_profile(std::function<double(double)> phi,
                                   std::function<double(double)> dphi, double x0, double z0,
                                   double s_min, double s_max);

}  // namespace snm
