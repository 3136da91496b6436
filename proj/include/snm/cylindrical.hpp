#pragma once

#include "snm/connection.hpp"
#include "snm/patch.hpp"
#include "snm/profile.hpp"
#include "snm/vec3.hpp"

namespace snm {

/// Cylindrical surface psi(s, t) = P(s) + t w, where w is a unit ruling
/// direction and P embeds a unit-speed plane curve (x(s), z(s)) into the
/// plane orthogonal to w via an orthonormal frame (e1, e2) with e2 = e1 x w.
/// The surface normal is gamma' x w.
class CylinderSpec {
public:
    /// Auto-selects e1 orthogonal to the ruling (coordinate axis least
    /// aligned with w, projected and normalised).
    CylinderSpec(const Vec3& ruling, ProfileCurve profile);

    /// Explicit in-plane x-axis; `plane_x` is orthogonalised against w.
    CylinderSpec(const Vec3& ruling, const Vec3& plane_x, ProfileCurve profile);

    const Vec3& ruling() const { return w_; }
    const Vec3& e1() const { return e1_; }
    const Vec3& e2() const { return e2_; }
    const ProfileCurve& profile() const { return profile_; }

    Vec3 curve_point(double s) const;
    Vec3 curve_tangent(double s) const;
    Vec3 curve_normal(double s) const;  ///< gamma' x w
    double curve_kappa(double s) const;

    /// Patch with analytic jets; the s-domain is the profile domain.
    ParametricPatch patch(double t_min, double t_max) const;

private:
    Vec3 w_, e1_, e2_;
    ProfileCurve profile_;
};

/// Closed-form sectional curvature of a cylindrical surface:
///   K = ( <w,C>^2 + <gamma',C>^2 - kappa <n,C> ) / 2.
double cylinder_K(const CylinderSpec& cyl, const CanonicalConnection& conn, double s);

/// Unit-speed generating curve of a constant-curvature cylinder with rulings
/// orthogonal to C: z solves z'' = z'^2 - 2K in closed form and x comes from
/// adaptive quadrature of sqrt(1 - z'^2). The maximal parameter interval is
///   K >  1/2 : [-s*, s*],  s* = artanh(1/sqrt(2K)) / sqrt(2K)
///   0 < K <= 1/2 : all of R
///   K =  0   : [1, oo), anchored so that x(1) = 0
///   K <  0   : [-s*, s*],  s* = arctan(1/sqrt(-2K)) / sqrt(-2K).
/// Evaluation is allowed at finite interval ends (x' vanishes there and x''
/// is unbounded); sampling loops should stay strictly inside.
ProfileCurve generating_curve(double K);

/// Grim reaper (arctan(sinh s), -log cosh s): the K = 1/2 curve in closed form.
ProfileCurve closed_form_curve_k_half();

/// Closed-form K = -1/2 curve
///   ( sqrt2 asin(sqrt2 sin s) - arccot(sqrt(cot^2 s - 1)), -log cos s ).
/// The printed antiderivative is unit-speed only for s in [0, pi/4]; use
/// generating_curve(-0.5) for the full symmetric interval.
ProfileCurve closed_form_curve_k_minus_half();

}  // namespace snm
