#include "snm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "snm/connection.hpp"
#include "snm/cylindrical.hpp"
#include "snm/graph_pde.hpp"
#include "snm/ode.hpp"
#include "snm/registry.hpp"
#include "snm/rng.hpp"
#include "snm/rotational.hpp"
#include "snm/trigfit.hpp"

namespace snm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Fields = std::vector<std::pair<std::string, double>>;

/// Stable per-suite seed derived from the user seed and the suite id
/// (FNV-1a; independent of std::hash so streams match across toolchains).
std::uint64_t suite_seed(std::uint64_t seed, std::string_view id) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

VerificationReport report(std::string check, std::string anchor, bool pass, Fields measured,
                          Fields tolerances) {
    VerificationReport r;
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.pass = pass;
    r.measured = std::move(measured);
    r.tolerances = std::move(tolerances);
    return r;
}

void track_max(double& acc, double v) { acc = std::max(acc, std::abs(v)); }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(0.5 * (lo + hi));
        return out;
    }
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    out.back() = hi;  // guard against one-ulp overshoot at the endpoint
    return out;
}

// ---------------------------------------------------------------------------
// prop2.1: ambient sectional curvature lies in [0, 1/2], is basis-free, and
// attains the extremes at planes orthogonal to / containing C.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_prop21(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 100000;
    double below_zero = 0, above_half = 0, basis_var = 0, perp_max = 0, par_dev = 0;
    for (int i = 0; i < n; ++i) {
        const CanonicalConnection conn(rng.unit_vector());
        Vec3 u, v;
        rng.plane_basis(u, v);
        const double k = ambient_sectional_curvature({u, v}, conn);
        below_zero = std::max(below_zero, -k);
        above_half = std::max(above_half, k - 0.5);

        double a, b, c, d;
        do {
            a = rng.uniform(-2, 2);
            b = rng.uniform(-2, 2);
            c = rng.uniform(-2, 2);
            d = rng.uniform(-2, 2);
        } while (std::abs(a * d - b * c) < 0.2);
        const double k2 = ambient_sectional_curvature({a * u + b * v, c * u + d * v}, conn);
        track_max(basis_var, k2 - k);

        Vec3 p;
        do {
            p = cross(conn.C(), rng.unit_vector());
        } while (norm(p) < 0.1);
        p = normalized(p);
        const Vec3 q = cross(conn.C(), p);
        track_max(perp_max, ambient_sectional_curvature({p, q}, conn));
        track_max(par_dev, ambient_sectional_curvature({conn.C(), p}, conn) - 0.5);
    }
    const double tol = 1e-12;
    const bool pass = below_zero <= tol && above_half <= tol && basis_var <= tol &&
                      perp_max <= tol && par_dev <= tol;
    return {report("sectional curvature in [0, 1/2], basis-free, extremes attained", "Prop. 2.1",
                   pass,
                   {{"samples", n},
                    {"below_zero", below_zero},
                    {"above_half", above_half},
                    {"basis_change_variation", basis_var},
                    {"orthogonal_plane_max", perp_max},
                    {"containing_plane_dev_from_half", par_dev}},
                   {{"bound_slack", tol}, {"basis_change", tol}, {"extreme_dev", tol}})};
}

// ---------------------------------------------------------------------------
// rem2.2: scalar curvature equals 1 on every orthonormal frame.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_rem22(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 10000;
    double dev = 0;
    Vec3 u{1, 0, 0}, v{0, 1, 0}, w{0, 0, 1};
    for (int i = 0; i < n; ++i) {
        rng.orthonormal_frame(u, v, w);
        const CanonicalConnection conn(rng.unit_vector());
        track_max(dev, scalar_curvature(u, v, w, conn) - 1.0);
    }
    bool rejected = false;
    try {
        scalar_curvature(u, v, v, CanonicalConnection(Vec3{0, 0, 1}));
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    const double tol = 1e-12;
    return {report("scalar curvature equals 1 on orthonormal frames", "Remark 2.2",
                   dev <= tol && rejected,
                   {{"frames", n},
                    {"max_deviation_from_1", dev},
                    {"nonorthonormal_frame_rejected", rejected ? 1.0 : 0.0}},
                   {{"deviation", tol}})};
}

// ---------------------------------------------------------------------------
// cor2.4: totally geodesic planes, rulings parallel to C, translation
// invariance.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_cor24(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VerificationReport> out;

    {  // planes: K = K_tilde in [0, 1/2], zero exactly when the plane misses C
        double fd_gap = 0, an_gap = 0, below = 0, perp_K = 0;
        for (int i = 0; i < 200; ++i) {
            const CanonicalConnection conn(rng.unit_vector());
            Vec3 u, v;
            rng.plane_basis(u, v);
            const Vec3 p0 = rng.vector_in_box(-2, 2);
            const auto point = [p0, u, v](double s, double t) { return p0 + s * u + t * v; };
            const ParametricPatch fd_patch(point, Domain2{-3, 3, -3, 3});
            const auto jet = [point, u, v](double s, double t) {
                SurfaceJet2 j;
                j.p = point(s, t);
                j.ps = u;
                j.pt = v;
                return j;
            };
            const ParametricPatch an_patch(point, jet, Domain2{-3, 3, -3, 3});
            const double s = rng.uniform(-1, 1), t = rng.uniform(-1, 1);
            const CurvatureReport rf = curvature_report(fd_patch, s, t, conn);
            track_max(fd_gap, rf.K - rf.K_tilde);
            below = std::max(below, -rf.K_tilde);
            const CurvatureReport ra = curvature_report(an_patch, s, t, conn);
            track_max(an_gap, ra.K - ra.K_tilde);

            // a plane orthogonal to C carries K = 0
            Vec3 e;
            do {
                e = cross(conn.C(), rng.unit_vector());
            } while (norm(e) < 0.1);
            e = normalized(e);
            const Vec3 f = cross(conn.C(), e);
            const auto perp_point = [p0, e, f](double s2, double t2) {
                return p0 + s2 * e + t2 * f;
            };
            const auto perp_jet = [perp_point, e, f](double s2, double t2) {
                SurfaceJet2 j;
                j.p = perp_point(s2, t2);
                j.ps = e;
                j.pt = f;
                return j;
            };
            const ParametricPatch perp(perp_point, perp_jet, Domain2{-3, 3, -3, 3});
            track_max(perp_K, curvature_report(perp, s, t, conn).K);
        }
        const bool pass = fd_gap <= 1e-6 && an_gap <= 1e-12 && below <= 1e-12 && perp_K <= 1e-12;
        out.push_back(report("planes are the K = K_tilde surfaces with G = H = 0", "Cor. 2.4",
                             pass,
                             {{"planes", 200},
                              {"fd_K_minus_Ktilde", fd_gap},
                              {"analytic_K_minus_Ktilde", an_gap},
                              {"Ktilde_below_zero", below},
                              {"orthogonal_plane_max_K", perp_K}},
                             {{"fd_gap", 1e-6}, {"analytic_gap", 1e-12}, {"extremes", 1e-12}}));
    }

    {  // cylinders with rulings parallel to C: K = K_tilde = 1/2
        double gap = 0, half_dev = 0;
        for (int i = 0; i < 5; ++i) {
            const Vec3 C = rng.unit_vector();
            const CanonicalConnection conn(C);
            const CylinderSpec cyl(C, circle_profile(0.0, 0.0, 1.3));
            const ParametricPatch patch = cyl.patch(-2.0, 2.0);
            for (int j = 0; j < 40; ++j) {
                const double s = rng.uniform(-4, 4), t = rng.uniform(-1.9, 1.9);
                const CurvatureReport r = curvature_report(patch, s, t, conn);
                track_max(gap, r.K - r.K_tilde);
                track_max(half_dev, r.K - 0.5);
            }
        }
        out.push_back(report("rulings parallel to C give K = K_tilde = 1/2", "Cor. 2.4",
                             gap <= 1e-12 && half_dev <= 1e-12,
                             {{"max_K_minus_Ktilde", gap}, {"max_dev_from_half", half_dev}},
                             {{"gap", 1e-12}, {"dev", 1e-12}}));
    }

    {  // curvature data is invariant under ambient translations
        const RegistryEntry sphere = make_surface(parse_surface_spec("sphere:r=1.3"));
        double an_diff = 0, fd_diff = 0;
        for (int i = 0; i < 5; ++i) {
            const Vec3 d = rng.vector_in_box(-5, 5);
            const CanonicalConnection conn(rng.unit_vector());
            const ParametricPatch& base = sphere.patch;
            const auto moved_point = [&base, d](double s, double t) {
                return base.point(s, t) + d;
            };
            const auto moved_jet = [&base, d](double s, double t) {
                SurfaceJet2 j = base.analytic_jet(s, t);
                j.p += d;
                return j;
            };
            const ParametricPatch moved(moved_point, moved_jet, base.domain());
            const Domain2& w = sphere.window;
            for (int j = 0; j < 20; ++j) {
                const double s = rng.uniform(w.s_min, w.s_max);
                const double t = rng.uniform(w.t_min, w.t_max);
                track_max(an_diff, curvature_report(moved, s, t, conn, JetMethod::Analytic).K -
                                       curvature_report(base, s, t, conn, JetMethod::Analytic).K);
                track_max(fd_diff,
                          curvature_report(moved, s, t, conn, JetMethod::FiniteDifference).K -
                              curvature_report(base, s, t, conn, JetMethod::FiniteDifference).K);
            }
        }
        out.push_back(report("curvature is invariant under ambient translations", "Cor. 2.4",
                             an_diff <= 1e-14 && fd_diff <= 1e-6,
                             {{"analytic_max_diff", an_diff}, {"fd_max_diff", fd_diff}},
                             {{"analytic", 1e-14}, {"fd", 1e-6}}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// ex2.5: the separable graph family solves G = <C,N> H (so K = K_tilde).
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_ex25(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VerificationReport> out;
    const CanonicalConnection conn(Vec3{0, 0, 1});
    const double cs[] = {1.0, 2.0, -1.0};

    double max_resid = 0, an_gap = 0, fd_gap = 0;
    for (const double c : cs) {
        const GraphSurface g = solution_family(c);
        double wx = 0, wy = 0;
        solution_family_halfwidths(c, wx, wy);
        const ParametricPatch patch = g.patch();
        for (const double x : linspace(-0.85 * wx, 0.85 * wx, 50)) {
            for (const double y : linspace(-0.85 * wy, 0.85 * wy, 50)) {
                track_max(max_resid, pde_residual(g, x, y));
                const CurvatureReport ra = curvature_report(patch, x, y, conn, JetMethod::Analytic);
                track_max(an_gap, ra.K - ra.K_tilde);
                const CurvatureReport rf =
                    curvature_report(patch, x, y, conn, JetMethod::FiniteDifference);
                track_max(fd_gap, rf.K - rf.K_tilde);
            }
        }
    }
    out.push_back(report("family solves the separable curvature-balance equation", "Example 2.5",
                         max_resid <= 1e-9,
                         {{"grid", 50}, {"max_pde_residual", max_resid}},
                         {{"residual", 1e-9}}));
    out.push_back(report("family satisfies K = K_tilde through the generic pipeline",
                         "Example 2.5", an_gap <= 1e-10 && fd_gap <= 1e-6,
                         {{"analytic_max_K_minus_Ktilde", an_gap},
                          {"fd_max_K_minus_Ktilde", fd_gap}},
                         {{"analytic", 1e-10}, {"fd", 1e-6}}));

    {  // residual identity against the generic pipeline on a non-solution
        const RegistryEntry saddle = make_surface(parse_surface_spec("quadric_graph:a=1,b=-1"));
        const GraphSurface g(
            [](double x, double y) {
                GraphJet2 j;
                j.u = x * x - y * y;
                j.ux = 2 * x;
                j.uy = -2 * y;
                j.uxx = 2;
                j.uyy = -2;
                return j;
            },
            Domain2{-2, 2, -2, 2});
        double identity_dev = 0, min_abs_resid = kInf;
        for (int i = 0; i < 100; ++i) {
            const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
            const GraphJet2 j = g.jet(x, y);
            const double W = std::sqrt(1.0 + j.ux * j.ux + j.uy * j.uy);
            const CurvatureReport r =
                curvature_report(saddle.patch, x, y, conn, JetMethod::Analytic);
            const double lhs = pde_residual(g, x, y);
            const double rhs = 2.0 * W * W * W * W * (r.G - r.C_dot_N * r.H);
            track_max(identity_dev, lhs - rhs);
            min_abs_resid = std::min(min_abs_resid, std::abs(lhs));
        }
        bool rejected0 = false, rejected_half = false;
        try {
            solution_family(0.0);
        } catch (const std::invalid_argument&) {
            rejected0 = true;
        }
        try {
            solution_family(0.5);
        } catch (const std::invalid_argument&) {
            rejected_half = true;
        }
        out.push_back(report("cleared residual equals 2 W^4 (G - <C,N> H); c in {0, 1/2} rejected",
                             "Example 2.5",
                             identity_dev <= 1e-8 && min_abs_resid > 1e-3 && rejected0 &&
                                 rejected_half,
                             {{"identity_dev", identity_dev},
                              {"saddle_min_abs_residual", min_abs_resid},
                              {"c_zero_rejected", rejected0 ? 1.0 : 0.0},
                              {"c_half_rejected", rejected_half ? 1.0 : 0.0}},
                             {{"identity", 1e-8}}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// cor3.2: cylinders with rulings parallel to C have constant K = 1/2.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_cor32(std::uint64_t seed) {
    Rng rng(seed);
    double closed_dev = 0, analytic_dev = 0, fd_dev = 0;
    int closed_pts = 0, fd_pts = 0;

    // Random turning-angle generating curves in the plane orthogonal to C;
    // closed form plus the analytic-jet pipeline.
    for (int i = 0; i < 5; ++i) {
        const Vec3 C = rng.unit_vector();
        const CanonicalConnection conn(C);
        const double phi0 = rng.uniform(0, 2 * kPi), al = rng.uniform(-0.8, 0.8);
        const double be = rng.uniform(0, 0.5), ga = rng.uniform(0.5, 2.0);
        const double de = rng.uniform(0, 2 * kPi);
        const auto phi = [=](double s) { return phi0 + al * s + be * std::sin(ga * s + de); };
        const auto dphi = [=](double s) { return al + be * ga * std::cos(ga * s + de); };
        const CylinderSpec cyl(C, turning_angle_profile(phi, dphi, 0, 0, -1.5, 1.5));
        const ParametricPatch patch = cyl.patch(-2.0, 2.0);
        for (int j = 0; j < 200; ++j) {
            const double s = rng.uniform(-1.45, 1.45), t = rng.uniform(-1.9, 1.9);
            track_max(closed_dev, cylinder_K(cyl, conn, s) - 0.5);
            track_max(analytic_dev, curvature_report(patch, s, t, conn, JetMethod::Analytic).K - 0.5);
            ++closed_pts;
        }
    }

    // Closed-form generating curves (circle / line / grim reaper) so the
    // finite-difference stencil sees exact point values.
    for (int i = 0; i < 5; ++i) {
        const Vec3 C = rng.unit_vector();
        const CanonicalConnection conn(C);
        ProfileCurve prof = (i % 3 == 0)   ? circle_profile(0, 0, rng.uniform(0.8, 2.0))
                            : (i % 3 == 1) ? line_profile(0, 0, rng.uniform(0, 2 * kPi), -5, 5)
                                           : closed_form_curve_k_half();
        const double band = (i % 3 == 1) ? 4.0 : 2.0;
        const CylinderSpec cyl(C, std::move(prof));
        const ParametricPatch patch = cyl.patch(-2.0, 2.0);
        for (int j = 0; j < 200; ++j) {
            const double s = rng.uniform(-band, band), t = rng.uniform(-1.9, 1.9);
            track_max(fd_dev,
                      curvature_report(patch, s, t, conn, JetMethod::FiniteDifference).K - 0.5);
            ++fd_pts;
        }
    }
    const bool pass = closed_dev <= 1e-10 && analytic_dev <= 1e-10 && fd_dev <= 1e-6;
    return {report("rulings parallel to C force constant K = 1/2", "Cor. 3.2", pass,
                   {{"closed_form_points", closed_pts},
                    {"fd_points", fd_pts},
                    {"closed_form_dev", closed_dev},
                    {"analytic_pipeline_dev", analytic_dev},
                    {"fd_pipeline_dev", fd_dev}},
                   {{"closed_form", 1e-10}, {"analytic", 1e-10}, {"fd", 1e-6}})};
}

// ---------------------------------------------------------------------------
// cor3.3 / cor3.4: the constant-K generating curves.
// ---------------------------------------------------------------------------

/// Sampling interval of a generating curve restricted to |z'| <= zp_cap
/// (independent finite differences need the sqrt endpoints of x' excluded).
void curve_sample_range(const ProfileCurve& curve, double K, double zp_cap, double& lo,
                        double& hi) {
    if (K > 0) {
        const double a = std::sqrt(2.0 * K);
        const double cap = zp_cap / a;
        const double s_cap = (cap < 1.0) ? std::atanh(cap) / a : kInf;
        hi = std::min({s_cap, 2.0, curve.s_max()});
        lo = -hi;
    } else if (K == 0) {
        lo = 1.0 / zp_cap;  // z' = -1/s
        hi = 4.0;
    } else {
        const double a = std::sqrt(-2.0 * K);
        hi = std::atan(zp_cap / a) / a;
        lo = -hi;
    }
}

std::vector<VerificationReport> suite_cor33(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VerificationReport> out;
    const double Ks[] = {1.0, 0.5, 0.0, -0.5, -1.0};

    {  // the curves satisfy z'' = z'^2 - 2K and x'^2 + z'^2 = 1 (independent FD)
        double ode_resid = 0, speed_resid = 0;
        const double h = 1e-3;
        for (const double K : Ks) {
            const ProfileCurve curve = generating_curve(K);
            double lo = 0, hi = 0;
            curve_sample_range(curve, K, 0.9, lo, hi);
            for (const double s : linspace(lo + 3 * h, hi - 3 * h, 40)) {
                double xs[5], zs[5];
                for (int k = -2; k <= 2; ++k) {
                    const ProfilePoint p = curve.at(s + k * h);
                    xs[k + 2] = p.x;
                    zs[k + 2] = p.z;
                }
                const double zp = (-zs[4] + 8 * zs[3] - 8 * zs[1] + zs[0]) / (12 * h);
                const double xp = (-xs[4] + 8 * xs[3] - 8 * xs[1] + xs[0]) / (12 * h);
                const double zpp =
                    (-zs[4] + 16 * zs[3] - 30 * zs[2] + 16 * zs[1] - zs[0]) / (12 * h * h);
                track_max(ode_resid, zpp - (zp * zp - 2.0 * K));
                track_max(speed_resid, xp * xp + zp * zp - 1.0);
            }
        }
        out.push_back(report("generated curves solve z'' = z'^2 - 2K at unit speed", "Cor. 3.3",
                             ode_resid <= 1e-8 && speed_resid <= 1e-8,
                             {{"max_ode_residual", ode_resid},
                              {"max_unit_speed_residual", speed_resid},
                              {"zp_sampling_cap", 0.9}},
                             {{"residual", 1e-8}}));
    }

    {  // cylinders built over the curves reproduce the target K
        const CanonicalConnection conn(Vec3{0, 0, 1});
        double closed_dev = 0, pipeline_dev = 0;
        for (const double K : Ks) {
            const CylinderSpec cyl(Vec3{0, 1, 0}, Vec3{1, 0, 0}, generating_curve(K));
            const ParametricPatch patch = cyl.patch(-2.0, 2.0);
            double lo = 0, hi = 0;
            curve_sample_range(cyl.profile(), K, 0.95, lo, hi);
            for (int j = 0; j < 150; ++j) {
                const double s = rng.uniform(lo, hi), t = rng.uniform(-1.9, 1.9);
                track_max(closed_dev, cylinder_K(cyl, conn, s) - K);
                track_max(pipeline_dev, curvature_report(patch, s, t, conn).K - K);
            }
        }
        out.push_back(report("cylinders over the curves have the prescribed constant K",
                             "Cor. 3.3", closed_dev <= 1e-12 && pipeline_dev <= 1e-6,
                             {{"closed_form_dev", closed_dev}, {"pipeline_dev", pipeline_dev}},
                             {{"closed_form", 1e-12}, {"pipeline", 1e-6}}));
    }

    {  // grim reaper: closed form against the quadrature reconstruction
        const ProfileCurve closed = closed_form_curve_k_half();
        const ProfileCurve quad = generating_curve(0.5);
        double dev = 0;
        for (const double s : linspace(-2.0, 2.0, 200)) {
            const ProfilePoint a = closed.at(s), b = quad.at(s);
            track_max(dev, a.x - b.x);
            track_max(dev, a.z - b.z);
            track_max(dev, a.xp - b.xp);
            track_max(dev, a.zp - b.zp);
        }
        out.push_back(report("grim reaper closed form matches the quadrature curve", "Cor. 3.4",
                             dev <= 1e-8, {{"max_abs_difference", dev}}, {{"difference", 1e-8}}));
    }

    {  // K = -1/2 printed antiderivative on its validity arc [0, pi/4]
        const ProfileCurve printed = closed_form_curve_k_minus_half();
        const ProfileCurve quad = generating_curve(-0.5);
        double dev = 0;
        for (const double s : linspace(0.005, kPi / 4 - 0.005, 100)) {
            const ProfilePoint a = printed.at(s), b = quad.at(s);
            track_max(dev, a.x - b.x);
            track_max(dev, a.z - b.z);
        }
        out.push_back(report("K = -1/2 closed form matches quadrature on [0, pi/4]", "Cor. 3.4",
                             dev <= 1e-8, {{"max_abs_difference", dev}}, {{"difference", 1e-8}}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// thm4.1: rotational surfaces have constant K only for axis-parallel C;
// the harmonic content of t -> K(s, t) matches the closed-form coefficients.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_thm41(std::uint64_t seed) {
    Rng rng(seed);
    const int n_profiles = 100;
    double min_generic_variation = kInf, max_fit_mismatch = 0;
    double max_axis_variation = 0, max_axis_harmonics = 0;

    for (int i = 0; i < n_profiles; ++i) {
        const double sign = rng.canonical() < 0.5 ? 1.0 : -1.0;
        const double phi0 = sign * rng.uniform(0.35, 1.2);
        const double al = rng.uniform(-0.3, 0.3), be = rng.uniform(0.0, 0.35);
        const double ga = rng.uniform(0.5, 2.0), de = rng.uniform(0, 2 * kPi);
        const double x0 = rng.uniform(1.5, 3.0);
        const auto phi = [=](double s) { return phi0 + al * s + be * std::sin(ga * s + de); };
        const auto dphi = [=](double s) { return al + be * ga * std::cos(ga * s + de); };
        const RotationalSurface surf(turning_angle_profile(phi, dphi, x0, 0.0, -1.0, 1.0));

        // profile point with the largest |z'| = |sin(phi)| on a scan grid
        double s_star = 0.0, best = -1.0;
        for (const double s : linspace(-0.95, 0.95, 39)) {
            const double zp = std::abs(std::sin(phi(s)));
            if (zp > best) {
                best = zp;
                s_star = s;
            }
        }

        Vec3 C;
        do {
            C = rng.unit_vector();
        } while (C.x * C.x + C.y * C.y < 0.05);
        const CanonicalConnection conn(C);

        double kmin = kInf, kmax = -kInf;
        for (const double t : linspace(0, 2 * kPi * 63.0 / 64.0, 64)) {
            const double k = rotational_K_general(surf, conn, s_star, t);
            kmin = std::min(kmin, k);
            kmax = std::max(kmax, k);
        }
        min_generic_variation = std::min(min_generic_variation, kmax - kmin);

        const FourierComparison fc = fourier_coefficients(surf, conn, s_star);
        max_fit_mismatch = std::max(max_fit_mismatch, fc.max_coeff_diff);
        const FourierComparison fc2 =
            fourier_coefficients(surf, conn, rng.uniform(-0.9, 0.9));
        max_fit_mismatch = std::max(max_fit_mismatch, fc2.max_coeff_diff);

        // axis-parallel C: no t-dependence at all
        const CanonicalConnection axis(Vec3{0, 0, sign});
        double akmin = kInf, akmax = -kInf;
        std::vector<double> samples;
        samples.reserve(64);
        for (const double t : linspace(0, 2 * kPi * 63.0 / 64.0, 64)) {
            const double k = rotational_K_general(surf, axis, s_star, t);
            akmin = std::min(akmin, k);
            akmax = std::max(akmax, k);
            samples.push_back(k);
        }
        max_axis_variation = std::max(max_axis_variation, akmax - akmin);
        const TrigPoly fit = fit_trig_poly(samples, 3);
        for (int harmonic = 1; harmonic <= 3; ++harmonic) {
            track_max(max_axis_harmonics, fit.cos_c[harmonic]);
            track_max(max_axis_harmonics, fit.sin_c[harmonic]);
        }
    }
    const bool pass = min_generic_variation > 1e-4 && max_fit_mismatch <= 1e-8 &&
                      max_axis_variation < 1e-10 && max_axis_harmonics <= 1e-10;
    return {report("K is t-dependent unless C is axis-parallel; harmonics match the closed form",
                   "Thm. 4.1", pass,
                   {{"profiles", n_profiles},
                    {"min_generic_t_variation", min_generic_variation},
                    {"max_coeff_fit_mismatch", max_fit_mismatch},
                    {"max_axis_t_variation", max_axis_variation},
                    {"max_axis_harmonics", max_axis_harmonics}},
                   {{"generic_variation_floor", 1e-4},
                    {"coeff_fit", 1e-8},
                    {"axis_variation", 1e-10}})};
}

// ---------------------------------------------------------------------------
// thm4.3: conical surfaces have constant K exactly for vertical (1/2) and
// horizontal (0) profile lines.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_thm43(std::uint64_t seed) {
    Rng rng(seed);
    double vert_dev = 0, horiz_dev = 0, const_variation = 0;
    bool classified = true;

    for (const double c1 : {1.5, 2.5}) {
        for (const double theta : {kPi / 2, -kPi / 2}) {
            const ConicalScan scan = conical_scan(theta, c1, rng.uniform(-1, 1));
            classified = classified && scan.is_constant;
            track_max(vert_dev, scan.value - 0.5);
            const_variation = std::max(const_variation, scan.variation);
        }
        for (const double theta : {0.0, kPi}) {
            const ConicalScan scan = conical_scan(theta, c1, rng.uniform(-1, 1));
            classified = classified && scan.is_constant;
            track_max(horiz_dev, scan.value);
            const_variation = std::max(const_variation, scan.variation);
        }
    }

    double min_oblique_variation = kInf;
    int rejected = 0;
    const int n_oblique = 50;
    for (int i = 0; i < n_oblique; ++i) {
        const double sign = rng.canonical() < 0.5 ? 1.0 : -1.0;
        const double theta = sign * rng.uniform(0.1, kPi / 2 - 0.1);
        const ConicalScan scan = conical_scan(theta, rng.uniform(1.5, 4.0), rng.uniform(-1, 1));
        if (!scan.is_constant && scan.variation > 1e-6) ++rejected;
        min_oblique_variation = std::min(min_oblique_variation, scan.variation);
    }
    const bool pass = classified && vert_dev <= 1e-12 && horiz_dev <= 1e-12 &&
                      const_variation <= 1e-12 && rejected == n_oblique;
    return {report("only vertical (K = 1/2) and horizontal (K = 0) lines give cones of constant K",
                   "Thm. 4.3", pass,
                   {{"vertical_dev_from_half", vert_dev},
                    {"horizontal_dev_from_zero", horiz_dev},
                    {"constant_case_variation", const_variation},
                    {"oblique_lines", n_oblique},
                    {"oblique_rejected", rejected},
                    {"min_oblique_variation", min_oblique_variation}},
                   {{"constant_dev", 1e-12}, {"oblique_variation_floor", 1e-6}})};
}

// ---------------------------------------------------------------------------
// thm4.4: the circle-profile constancy residual carries a third harmonic
// proportional to r, so tori never have constant K.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_thm44(std::uint64_t) {
    const double rs[] = {0.5, 1.0, 2.0};
    const double oracle_ratio = -0.25;        // symbolic expansion of the residual
    const double stated_ratio = -1.0 / 3.0;   // ratio as printed in the catalog
    double ratios[3] = {0, 0, 0};
    double min_abs_a3_over_r = kInf, max_b3 = 0, k_dependence = 0;
    int idx = 0;
    for (const double r : rs) {
        const TrigPoly fit = circle_residual(r, 2.0 * r, 0.5);
        const double a3 = fit.cos_c[3];
        ratios[idx++] = a3 / r;
        min_abs_a3_over_r = std::min(min_abs_a3_over_r, std::abs(a3) / r);
        track_max(max_b3, fit.sin_c[3]);
        const TrigPoly fit2 = circle_residual(r, 2.0 * r, 0.37);
        track_max(k_dependence, fit2.cos_c[3] - a3);
    }
    const double spread = std::max({std::abs(ratios[0] - ratios[1]),
                                    std::abs(ratios[0] - ratios[2]),
                                    std::abs(ratios[1] - ratios[2])});
    const double oracle_dev = std::max({std::abs(ratios[0] - oracle_ratio),
                                        std::abs(ratios[1] - oracle_ratio),
                                        std::abs(ratios[2] - oracle_ratio)});
    const bool pass = min_abs_a3_over_r >= 0.125 && spread <= 1e-9 && oracle_dev <= 1e-9 &&
                      max_b3 <= 1e-9 && k_dependence <= 1e-12;
    return {report("circle profiles fail constancy: third harmonic A3 = -r/4 never vanishes",
                   "Thm. 4.4", pass,
                   {{"a3_over_r_r_half", ratios[0]},
                    {"a3_over_r_r_one", ratios[1]},
                    {"a3_over_r_r_two", ratios[2]},
                    {"ratio_spread", spread},
                    {"oracle_ratio", oracle_ratio},
                    {"dev_from_oracle", oracle_dev},
                    {"stated_catalog_ratio", stated_ratio},
                    {"dev_from_stated_catalog", std::abs(ratios[1] - stated_ratio)},
                    {"max_b3", max_b3},
                    {"k_dependence_of_a3", k_dependence}},
                   {{"nonzero_floor_a3_over_r", 0.125},
                    {"ratio_spread", 1e-9},
                    {"oracle_dev", 1e-9}})};
}

// ---------------------------------------------------------------------------
// thm4.5: first-integral quadratic, axis branches, and the reconstructed
// axis-orthogonal K = 1/2 rotational surface.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_thm45(std::uint64_t) {
    std::vector<VerificationReport> out;

    {  // quadratic roots and axis slopes
        const QuadraticRoots q0 = quadratic_zprime(0.0);
        const bool root0_exact =
            q0.roots.size() == 1 && q0.roots[0] == 0.0 && q0.admitted.size() == 1;
        const QuadraticRoots q2 = quadratic_zprime(2.0);
        const double root2_dev =
            q2.admitted.size() == 1 ? std::abs(q2.admitted[0] + 1.0) : kInf;
        const QuadraticRoots q1 = quadratic_zprime(1.0);
        // independent expansion of the quadratic at x = 1: 5 p^2 - 16 p - 7 = 0
        const double disc = std::sqrt(396.0);
        const double expect_hi = (16.0 + disc) / 10.0, expect_lo = (16.0 - disc) / 10.0;
        double root1_dev = kInf;
        if (q1.admitted.size() == 2) {
            root1_dev = std::max(std::abs(q1.admitted[0] - expect_lo),
                                 std::abs(q1.admitted[1] - expect_hi));
        }
        double slope_dev = 0;
        const double x_near = 1e-3;
        for (const AxisBranch branch : {AxisBranch::Positive, AxisBranch::Negative}) {
            const double alpha = branch == AxisBranch::Positive ? (1.0 + std::sqrt(3.0)) / 2.0
                                                                : (1.0 - std::sqrt(3.0)) / 2.0;
            track_max(slope_dev, branch_zprime(branch, x_near) / x_near - alpha);
        }
        const bool pass = root0_exact && root2_dev <= 1e-12 && root1_dev <= 1e-9 &&
                          slope_dev <= 1e-6;
        out.push_back(report("first-integral quadratic: exact roots and axis slopes (1±sqrt3)/2",
                             "Thm. 4.5", pass,
                             {{"root_at_0_exact", root0_exact ? 1.0 : 0.0},
                              {"root_at_2_dev", root2_dev},
                              {"admitted_at_1", static_cast<double>(q1.admitted.size())},
                              {"root_at_1_dev", root1_dev},
                              {"axis_slope_dev", slope_dev}},
                             {{"root_at_2", 1e-12}, {"root_at_1", 1e-9}, {"slope", 1e-6}}));
    }

    {  // first-integral family: conservation and quadratic root tracking
        double f_drift = 0, track_dev = 0;
        for (const AxisBranch branch : {AxisBranch::Positive, AxisBranch::Negative}) {
            // stay inside the family's vertical asymptotes sqrt5-1 and 1+sqrt5
            const double x_far = branch == AxisBranch::Positive ? 1.2 : 3.2;
            OdeOptions opts;
            opts.rel_tol = 1e-12;
            opts.abs_tol = 1e-14;
            double drift = 0, tdev = 0;
            const OdeResult res = integrate_ode(
                [](double x, const std::vector<double>& y, std::vector<double>& dy) {
                    dy[0] = first_integral_zpp(x, y[0]);
                },
                {branch_zprime(branch, 1e-3)}, 1e-3, x_far, opts, nullptr,
                [&](double x, const std::vector<double>& y) {
                    track_max(drift, first_integral(x, y[0]));
                    track_max(tdev, y[0] - branch_zprime(branch, x));
                });
            if (res.outcome != OdeOutcome::ReachedEnd) drift = kInf;
            f_drift = std::max(f_drift, drift);
            track_dev = std::max(track_dev, tdev);
        }
        const bool pass = f_drift <= 1e-8 && track_dev <= 1e-7;
        out.push_back(
            report("integrated first-integral branches conserve F and track the quadratic",
                   "Thm. 4.5", pass,
                   {{"first_integral_drift", f_drift}, {"quadratic_tracking_dev", track_dev}},
                   {{"drift", 1e-8}, {"tracking", 1e-7}}));
    }

    {  // K = 1/2 family: the reconstruction carries K = 1/2 to the branch limit
        double curve_K_dev = 0, general_K_dev = 0;
        const double pos_limit = graph_branch_limit(AxisBranch::Positive);
        for (const AxisBranch branch : {AxisBranch::Positive, AxisBranch::Negative}) {
            const double x_far = branch == AxisBranch::Positive ? pos_limit - 2e-3 : 3.2;
            const AxisProfile ap = axis_orthogonal_profile(branch, x_far);
            const RotationalSurface surf(ap.curve);
            const CanonicalConnection cz(Vec3{0.0, 0.0, 1.0});
            // x(s) is monotone; bisect the arc-length position of x = 0.1
            double lo = 0.0, hi = ap.arc_length;
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (lo + hi);
                (ap.curve.at(mid).x < 0.1 ? lo : hi) = mid;
            }
            for (const double s : linspace(hi, ap.arc_length, 150)) {
                track_max(curve_K_dev, rotational_K_axis_aligned(surf, s) - 0.5);
            }
            for (const double s : linspace(hi, ap.arc_length, 25)) {
                track_max(general_K_dev, rotational_K_general(surf, cz, s, 0.77) - 0.5);
            }
        }
        const bool pass = curve_K_dev <= 1e-5 && general_K_dev <= 1e-5;
        out.push_back(report("axis-orthogonal branches carry K = 1/2 out to the branch limit",
                             "Thm. 4.5", pass,
                             {{"reconstructed_K_dev", curve_K_dev},
                              {"general_pipeline_K_dev", general_K_dev},
                              {"positive_branch_limit", pos_limit},
                              {"negative_x_far", 3.2}},
                             {{"K_dev", 1e-5}}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// prop4.2: the shooting form of the profile equation reproduces known
// solutions and stops cleanly on its geometric boundaries.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_prop42(std::uint64_t) {
    std::vector<VerificationReport> out;

    {  // fixed points: round cylinder (K = 1/2) and flat plane (K = 0)
        const ShootResult cylinder = profile_ode_shoot(0.5, 1.3, 0.0, kPi / 2, 5.0);
        double cyl_dev = 0;
        for (const ShootState& st : cylinder.trace) track_max(cyl_dev, st.x - 1.3);
        const ShootResult plane = profile_ode_shoot(0.0, 1.0, 0.7, 0.0, 5.0);
        double plane_dev = 0;
        for (const ShootState& st : plane.trace) {
            track_max(plane_dev, st.z - 0.7);
            track_max(plane_dev, st.phi);
        }
        const bool pass = cylinder.reason == ShootStop::ReachedSMax &&
                          plane.reason == ShootStop::ReachedSMax && cyl_dev <= 1e-8 &&
                          plane_dev <= 1e-8;
        out.push_back(report("vertical and horizontal line profiles are shooting fixed points",
                             "Prop. 4.2", pass,
                             {{"cylinder_x_drift", cyl_dev},
                              {"plane_drift", plane_dev},
                              {"cylinder_reached_end", cylinder.reason == ShootStop::ReachedSMax
                                                           ? 1.0
                                                           : 0.0},
                              {"plane_reached_end",
                               plane.reason == ShootStop::ReachedSMax ? 1.0 : 0.0}},
                             {{"drift", 1e-8}}));
    }

    {  // shooting launched on the K = 1/2 branch follows it
        const AxisProfile ap = axis_orthogonal_profile(AxisBranch::Negative, 2.5);
        // bisect the arc-length position of x = 0.5 on the branch
        double lo = 0.0, hi = ap.arc_length;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (ap.curve.at(mid).x < 0.5 ? lo : hi) = mid;
        }
        const double s0 = 0.5 * (lo + hi);
        const ProfilePoint start = ap.curve.at(s0);
        const double s_len = ap.arc_length - s0 - 0.05;
        const ShootResult shot = profile_ode_shoot(0.5, start.x, start.z,
                                                   std::atan2(start.zp, start.xp), s_len);
        double follow_dev = 0;
        int checked = 0;
        for (const ShootState& st : shot.trace) {
            const ProfilePoint ref = ap.curve.at(s0 + st.s);
            track_max(follow_dev, st.x - ref.x);
            track_max(follow_dev, st.z - ref.z);
            track_max(follow_dev, st.phi - std::atan2(ref.zp, ref.xp));
            ++checked;
        }
        const bool pass =
            shot.reason == ShootStop::ReachedSMax && follow_dev <= 1e-7 && checked >= 50;
        out.push_back(report("shooting launched on the K = 1/2 branch follows it", "Prop. 4.2",
                             pass, {{"branch_follow_dev", follow_dev},
                                    {"states_checked", static_cast<double>(checked)}},
                             {{"dev", 1e-7}}));
    }

    {  // geometric stops: axis approach and the singular set 2z' = x x'
        const ShootResult axis_hit = profile_ode_shoot(0.0, 0.5, 0.25, kPi, 5.0);
        const double axis_identity = std::abs(axis_hit.s_end + 0.0 -
                                              (0.5 - axis_hit.trace.back().x));
        const ShootResult singular_hit = profile_ode_shoot(1.0, 1.0, 0.0, 0.2, 10.0);
        const ShootState& last = singular_hit.trace.back();
        const double den = std::abs(2.0 * std::sin(last.phi) - last.x * std::cos(last.phi));
        const bool pass = axis_hit.reason == ShootStop::AxisApproach && axis_identity <= 1e-6 &&
                          singular_hit.reason == ShootStop::SingularSet && den <= 2e-3;
        out.push_back(report("integration stops cleanly at the axis and the singular set",
                             "Prop. 4.2", pass,
                             {{"axis_stop", axis_hit.reason == ShootStop::AxisApproach ? 1.0 : 0.0},
                              {"axis_travel_identity", axis_identity},
                              {"singular_stop",
                               singular_hit.reason == ShootStop::SingularSet ? 1.0 : 0.0},
                              {"singular_den_at_stop", den},
                              {"singular_s_end", singular_hit.s_end}},
                             {{"axis_identity", 1e-6}, {"den_at_stop", 2e-3}}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// oracle: closed curvature formulas against the generic pipeline across the
// surface corpus.
// ---------------------------------------------------------------------------
std::vector<VerificationReport> suite_oracle(std::uint64_t seed) {
    Rng rng(seed);

    struct Entry {
        std::string spec;
        bool fd;  ///< point evaluation is closed-form, safe for the FD stencil
    };
    std::vector<Entry> corpus = {
        {"plane", true},
        {"cylinder:r=1", true},
        {"sphere:r=1", true},
        {"sphere:r=2.2", true},
        {"torus:R=2,r=0.5", true},
        {"cone:theta=0.9,c1=2,c2=0", true},
        {"cone:theta=2.2,c1=3,c2=-0.4", true},
        {"catenoid", true},
        {"grim_reaper_cylinder", true},
        {"gen_cylinder:K=1", false},
        {"gen_cylinder:K=0.5", false},
        {"gen_cylinder:K=0", false},
        {"gen_cylinder:K=-1", false},
    };
    // randomised corpus members (parameters drawn from the seed)
    {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "cylinder:r=%.6f", rng.uniform(0.5, 2.0));
        corpus.push_back({buf, true});
        std::snprintf(buf, sizeof(buf), "torus:R=%.6f,r=%.6f", rng.uniform(1.8, 3.0),
                      rng.uniform(0.3, 0.9));
        corpus.push_back({buf, true});
        std::snprintf(buf, sizeof(buf), "cone:theta=%.6f,c1=%.6f,c2=%.6f",
                      rng.uniform(0.2, 1.3), rng.uniform(1.8, 4.0), rng.uniform(-1.0, 1.0));
        corpus.push_back({buf, true});
    }

    double fd_dev = 0, analytic_dev = 0;
    int n_points = 0, n_surfaces = 0;
    for (const Entry& e : corpus) {
        const RegistryEntry entry = make_surface(parse_surface_spec(e.spec));
        if (!entry.closed_form_K) continue;
        ++n_surfaces;
        for (int ci = 0; ci < 2; ++ci) {
            const CanonicalConnection conn(rng.unit_vector());
            for (int j = 0; j < 20; ++j) {
                const double s = rng.uniform(entry.window.s_min, entry.window.s_max);
                const double t = rng.uniform(entry.window.t_min, entry.window.t_max);
                const double closed = entry.closed_form_K(s, t, conn);
                track_max(analytic_dev,
                          curvature_report(entry.patch, s, t, conn, JetMethod::Analytic).K -
                              closed);
                if (e.fd) {
                    track_max(
                        fd_dev,
                        curvature_report(entry.patch, s, t, conn, JetMethod::FiniteDifference).K -
                            closed);
                }
                ++n_points;
            }
        }
    }

    // axis-aligned rotational closed form against the pipeline (C = dz)
    double kgf_dev = 0;
    {
        const CanonicalConnection down(Vec3{0, 0, 1});
        const char* rotational[] = {"sphere:r=1", "torus:R=2,r=0.5", "cone:theta=0.9,c1=2,c2=0",
                                    "catenoid"};
        for (const char* spec : rotational) {
            const RegistryEntry entry = make_surface(parse_surface_spec(spec));
            for (int j = 0; j < 40; ++j) {
                const double s = rng.uniform(entry.window.s_min, entry.window.s_max);
                const double t = rng.uniform(entry.window.t_min, entry.window.t_max);
                const double closed = entry.closed_form_K_axis(s);
                track_max(kgf_dev,
                          curvature_report(entry.patch, s, t, down, JetMethod::Analytic).K -
                              closed);
            }
        }
    }

    const bool pass = fd_dev <= 1e-6 && analytic_dev <= 1e-9 && kgf_dev <= 1e-9;
    return {report("closed curvature formulas match the generic pipeline across the corpus",
                   "Eq. help0", pass,
                   {{"surfaces", n_surfaces},
                    {"points", n_points},
                    {"fd_pipeline_dev", fd_dev},
                    {"analytic_pipeline_dev", analytic_dev},
                    {"axis_aligned_closed_form_dev", kgf_dev}},
                   {{"fd", 1e-6}, {"analytic", 1e-9}, {"axis_aligned", 1e-9}})};
}

using SuiteFn = std::vector<VerificationReport> (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"prop2.1", suite_prop21}, {"rem2.2", suite_rem22},   {"cor2.4", suite_cor24},
        {"ex2.5", suite_ex25},     {"cor3.2", suite_cor32},   {"cor3.3", suite_cor33},
        {"thm4.1", suite_thm41},   {"thm4.3", suite_thm43},   {"thm4.4", suite_thm44},
        {"thm4.5", suite_thm45},   {"prop4.2", suite_prop42}, {"oracle", suite_oracle},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : suites()) {
            (void)fn;
            v.push_back(id);
        }
        return v;
    }();
    return ids;
}

std::vector<VerificationReport> run_suite(const std::string& id, std::uint64_t seed) {
    for (const auto& [name, fn] : suites()) {
        if (name == id) {
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<VerificationReport> reports = fn(suite_seed(seed, name));
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            for (VerificationReport& r : reports) r.runtime_ms = ms / reports.size();
            return reports;
        }
    }
    throw std::invalid_argument("unknown verification suite '" + id + "'");
}

std::vector<VerificationReport> run_suites(const std::string& selector, std::uint64_t seed) {
    if (selector != "all") return run_suite(selector, seed);
    std::vector<VerificationReport> out;
    for (const std::string& id : suite_ids()) {
        std::vector<VerificationReport> r = run_suite(id, seed);
        out.insert(out.end(), std::make_move_iterator(r.begin()),
                   std::make_move_iterator(r.end()));
    }
    return out;
}

}  // namespace snm
