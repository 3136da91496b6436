#pragma once

#include <vector>

#include "snm/connection.hpp"
#include "snm/patch.hpp"
#include "snm/profile.hpp"
#include "snm/trigfit.hpp"

namespace snm {

/// Admissible roots of the first-integral quadratic must satisfy
/// |first_integral| below this threshold.
inline constexpr double kFirstIntegralTol = 1e-9;

/// Profiles must keep this distance from the rotation axis for the profile
/// based curvature formulas.
inline constexpr double kAxisClearance = 1e-6;

/// Surface of revolution about the z-axis generated by a unit-speed profile
/// s -> (x(s), z(s)) in the xz-plane:
///   psi(s, t) = (x(s) cos t, x(s) sin t, z(s)).
class RotationalSurface {
public:
    explicit RotationalSurface(ProfileCurve profile) : profile_(std::move(profile)) {}
    const ProfileCurve& profile() const { return profile_; }

    /// Patch with analytic jets on profile-domain x [t_min, t_max].
    ParametricPatch patch(double t_min = 0.0,
                          double t_max = 6.283185307179586476925286766559) const;

private:
    ProfileCurve profile_;
};

/// Sectional curvature at (s, t) for an arbitrary unit C = (a, b, c),
/// assembled from profile data:
///   K = [ (b cos t - a sin t)^2 + (x'(a cos t + b sin t) + c z')^2 ] / 2
///       + G - <C, N> H.
/// Throws std::domain_error when the profile comes closer than kAxisClearance
/// to the axis.
double rotational_K_general(const RotationalSurface& surf, const CanonicalConnection& conn,
                            double s, double t);

/// Axis-aligned closed form (C = dz): K = ((2z' - xx') kappa + z'(xz' - x')) / (2x).
/// For C = -dz apply it to the profile with z negated.
double rotational_K_axis_aligned(const RotationalSurface& surf, double s);

/// Harmonic content of t -> K(s, t) at fixed s: closed-form coefficients of
/// the degree-2 trigonometric polynomial versus a least-squares fit of
/// sampled values (degree 3, so spurious third harmonics are detectable).
struct FourierComparison {
    TrigPoly analytic;
    TrigPoly fitted;
    double max_coeff_diff = 0.0;
};
FourierComparison fourier_coefficients(const RotationalSurface& surf,
                                       const CanonicalConnection& conn, double s,
                                       int n_samples = 64);

/// Scan of K along a straight profile line (c1 + s cos theta, c2 + s sin theta)
/// for C = dz. Throws std::domain_error if the line meets the axis on the
/// sampled range.
struct ConicalScan {
    bool is_constant = false;
    double value = 0.0;      ///< mean of the samples
    double variation = 0.0;  ///< max - min over the samples
};
ConicalScan conical_scan(double theta, double c1, double c2, double s_min = -1.0,
                         double s_max = 1.0, int n_samples = 101,
                         double const_tol = 1e-8);

/// Least-squares harmonic decomposition (degree 3) of the constancy residual
///   R(s) = 2 K x - (2z' - xx') kappa - z'(xz' - x')
/// along a circle profile of radius r centred at (c1, *), sampled over one
/// period. A nonzero third harmonic shows the residual cannot vanish, i.e.
/// no circle profile yields constant K. Requires c1 > r.
TrigPoly circle_residual(double r, double c1, double K, int n_samples = 256);

/// Two distinct graph-form curve families are attached to the axis-orthogonal
/// K = 1/2 problem, and they agree only to leading order at the axis:
///
///  * the K = 1/2 family: solutions of z'' = graph_zpp, for which the
///    axis-aligned curvature formula gives exactly 1/2 (see graph_zpp);
///  * the first-integral family: solutions of z'' = first_integral_zpp, the
///    unique flow that conserves first_integral exactly.
///
/// Both families leave the axis with slope z' ~ alpha x, alpha = (1±sqrt3)/2,
/// because the leading-order balance 2a^2 - 2a - 1 = 0 is shared. Away from
/// the axis they separate: along the first-integral family the sectional
/// curvature is K = 1/2 + (W-1)/(2W^2) with W = sqrt(1+z'^2), which reaches
/// 1/2 + 1/8 at W = 2 and is never constant. F in turn drifts along the
/// K = 1/2 family. The quadratic below describes the first-integral family;
/// axis_orthogonal_profile reconstructs the K = 1/2 family.

/// F(x, z') = (2z'-x) z'/W - 2(W-1) - x^2/2, W = sqrt(1+z'^2). Conserved
/// exactly by the flow of first_integral_zpp; vanishes to fourth order in x
/// along the K = 1/2 branches, so near the axis it also filters those.
double first_integral(double x, double zp);

/// Real roots of the squared first-integral quadratic
///   (4x^2 - (x^2-4)^2) z'^2 + 16 x z' + 16 - (x^2-4)^2 = 0
/// at abscissa x >= 0, plus the subset passing the |F| < kFirstIntegralTol
/// filter (squaring introduces spurious sign branches).
struct QuadraticRoots {
    std::vector<double> roots;     ///< all real roots, ascending
    std::vector<double> admitted;  ///< roots on the genuine branch(es)
};
QuadraticRoots quadratic_zprime(double x);

/// The two branches through the axis: z'(x) ~ alpha x with
/// alpha = (1 + sqrt3)/2 (Positive) or (1 - sqrt3)/2 (Negative).
enum class AxisBranch { Positive, Negative };

double axis_branch_slope(AxisBranch branch);

/// Abscissa where the first-integral branch develops a vertical asymptote:
/// sqrt5 - 1 for the positive branch, 1 + sqrt5 for the negative one (the
/// leading coefficient of the quadratic vanishes and the tracked root
/// diverges).
double first_integral_branch_limit(AxisBranch branch);

/// z'(x) on the first-integral branch (root tracking by sign and
/// first-integral filter).
double branch_zprime(AxisBranch branch, double x);

/// z''(x) on the first-integral branch by implicit differentiation of the
/// quadratic, with a tangency-safe fallback where dQ/dp vanishes (root
/// collisions).
double branch_zsecond(AxisBranch branch, double x);

/// Right-hand side of the K = 1/2 graph equation
///   z''(x) = (1 + z'^2) (x + z') / (2z' - x).
/// Derivation: with arc-length profile data the axis-aligned curvature is
/// K = ((2z'-xx') kappa + z'(xz'-x')) / (2x); setting K = 1/2 and using
/// x'^2 + z'^2 = 1 gives kappa = x'(xx'+z') / (2z'-xx'), and the graph
/// substitution x' = 1/W, z' -> z'/W, kappa = z''/W^3 yields the display.
double graph_zpp(double x, double zp);

/// Right-hand side of the flow conserving first_integral:
///   z''(x) = (1 + z'^2) (x W + z') / (2z' - x), W = sqrt(1+z'^2).
/// Differs from graph_zpp by (1+z'^2) x (W-1) / (2z'-x), which vanishes only
/// at the axis: the first-integral family does not solve the K = 1/2
/// equation away from it.
double first_integral_zpp(double x, double zp);

/// Abscissa where the K = 1/2 graph branch develops a vertical asymptote.
/// Positive branch: 1.5630652928 (high-accuracy integration of graph_zpp,
/// stable to ~1e-9 under tolerance refinement). Negative branch: none; the
/// branch extends to x = +infinity with z' -> -x + 3/x, so +infinity is
/// returned.
double graph_branch_limit(AxisBranch branch);

/// Unit-speed reconstruction of the K = 1/2 branch from the axis out to
/// x_max, reparametrised by arc length. Integrates graph_zpp from a series
/// seed z' = alpha x + (alpha^3/4) x^3 near the axis and interpolates the
/// accepted steps with cubic Hermite cells; the returned jets differentiate
/// the interpolant itself, so the curvature checks downstream are not
/// tautological. Throws std::domain_error when x_max is not strictly inside
/// graph_branch_limit, std::logic_error if the construction fails its own
/// pointwise K = 1/2 self-check away from the axis.
struct AxisProfile {
    ProfileCurve curve;
    double x_max = 0.0;
    double arc_length = 0.0;
    AxisBranch branch = AxisBranch::Positive;
};
AxisProfile axis_orthogonal_profile(AxisBranch branch, double x_max);

/// Arc-length shooting of the constant-K profile equation
///   kappa = (2Kx - sin(phi)(x sin(phi) - cos(phi))) / (2 sin(phi) - x cos(phi))
/// with x' = cos(phi), z' = sin(phi). Integration stops (cleanly, without
/// failing) when the profile approaches the axis or the singular set
/// 2 sin(phi) - x cos(phi) = 0.
enum class ShootStop { ReachedSMax, AxisApproach, SingularSet };

struct ShootState {
    double s = 0, x = 0, z = 0, phi = 0, kappa = 0;
};

struct ShootResult {
    std::vector<ShootState> trace;  ///< states on the output grid
    ShootStop reason = ShootStop::ReachedSMax;
    double s_end = 0.0;
    ProfileCurve curve;  ///< cubic-Hermite view of the trace
};
ShootResult profile_ode_shoot(double K, double x0, double z0, double phi0, double s_max,
                              double output_step = 1e-2);

}  // namespace snm
