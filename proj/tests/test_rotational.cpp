#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "snm/connection.hpp"
#include "snm/patch.hpp"
#include "snm/profile.hpp"
#include "snm/rng.hpp"
#include "snm/rotational.hpp"

using namespace snm;
using std::numbers::pi;

TEST_CASE("rotational curvature formulas against the full pipeline") {
    const ProfileCurve prof = turning_angle_profile(
        [](double s) { return 0.4 * std::sin(s) + 0.1 * s; },
        [](double s) { return 0.4 * std::cos(s) + 0.1 ; }, 3.0, 0.5, -2.0, 2.0);
    const RotationalSurface surf(prof);
    const ParametricPatch patch = surf.patch(-1.0, 2.0 * pi + 1.0);
    SUBCASE("general direction") {
        const CanonicalConnection conn(Vec3{0.3, -0.5, 0.8});
        Rng rng(7);
        for (int i = 0; i < 100; ++i) {
            const double s = rng.uniform(-1.9, 1.9);
            const double t = rng.uniform(0.0, 2.0 * pi);
            const double closed = rotational_K_general(surf, conn, s, t);
            const CurvatureReport rep =
                curvature_report(patch, s, t, conn, JetMethod::Analytic);
            CHECK(std::abs(closed - rep.K) < 1e-9);
        }
    }
    SUBCASE("axis-aligned direction reduces to the profile-only form") {
        const CanonicalConnection conn(Vec3{0, 0, 1});
        Rng rng(11);
        for (int i = 0; i < 100; ++i) {
            const double s = rng.uniform(-1.9, 1.9);
            const double t = rng.uniform(0.0, 2.0 * pi);
            const double axis = rotational_K_axis_aligned(surf, s);
            CHECK(std::abs(axis - rotational_K_general(surf, conn, s, t)) < 1e-12);
            const CurvatureReport rep =
                curvature_report(patch, s, t, conn, JetMethod::Analytic);
            CHECK(std::abs(axis - rep.K) < 1e-9);
        }
    }
    SUBCASE("worked example: unit sphere with C = dz") {
        // Profile (cos s, sin s): x' = -sin s, z' = cos s, kappa = 1.
        // K = ((2 cos s - cos s sin s opposite...) use the closed form directly:
        // K = ((2z' - xx') kappa + z'(xz' - x')) / (2x).
        const RotationalSurface sphere(circle_profile(0.0, 0.0, 1.0));
        for (double s = -1.2; s <= 1.2; s += 0.3) {
            const double x = std::cos(s), xp = -std::sin(s);
            const double zp = std::cos(s);
            const double expected =
                ((2.0 * zp - x * xp) * 1.0 + zp * (x * zp - xp)) / (2.0 * x);
            CHECK(std::abs(rotational_K_axis_aligned(sphere, s) - expected) < 1e-12);
        }
        // equator value: (2 + 1)/2 = 3/2
        CHECK(std::abs(rotational_K_axis_aligned(sphere, 0.0) - 1.5) < 1e-12);
    }
    SUBCASE("axis clearance is enforced") {
        const RotationalSurface sphere(circle_profile(0.0, 0.0, 1.0));
        const CanonicalConnection conn(Vec3{0, 0, 1});
        CHECK_THROWS_AS(rotational_K_general(sphere, conn, pi / 2.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(rotational_K_axis_aligned(sphere, pi / 2.0), std::domain_error);
    }
}

TEST_CASE("harmonic content of K along the parallel circles") {
    const ProfileCurve prof = turning_angle_profile(
        [](double s) { return 0.5 * std::sin(s); }, [](double s) { return 0.5 * std::cos(s); },
        2.0, 0.0, -1.5, 1.5);
    const RotationalSurface surf(prof);
    SUBCASE("tilted direction produces at most second harmonics, fit matches") {
        Rng rng(13);
        for (int i = 0; i < 20; ++i) {
            const CanonicalConnection conn(rng.unit_vector());
            const double s = rng.uniform(-1.4, 1.4);
            const FourierComparison fc = fourier_coefficients(surf, conn, s);
            CHECK(fc.max_coeff_diff < 1e-10);
            CHECK(std::abs(fc.fitted.cos_c[3]) < 1e-10);
            CHECK(std::abs(fc.fitted.sin_c[3]) < 1e-10);
        }
    }
    SUBCASE("axis-aligned direction is t-independent") {
        const CanonicalConnection conn(Vec3{0, 0, 1});
        const FourierComparison fc = fourier_coefficients(surf, conn, 0.7);
        for (int n = 1; n <= 3; ++n) {
            CHECK(std::abs(fc.analytic.cos_c[n]) < 1e-12);
            CHECK(std::abs(fc.analytic.sin_c[n]) < 1e-12);
            CHECK(std::abs(fc.fitted.cos_c[n]) < 1e-10);
            CHECK(std::abs(fc.fitted.sin_c[n]) < 1e-10);
        }
        CHECK(std::abs(fc.analytic.cos_c[0] - rotational_K_axis_aligned(surf, 0.7)) < 1e-12);
    }
    SUBCASE("generic tilt genuinely varies with t") {
        const CanonicalConnection conn(Vec3{1.0, 0.0, 1.0});
        const FourierComparison fc = fourier_coefficients(surf, conn, 0.4);
        double amp = 0.0;
        for (int n = 1; n <= 2; ++n)
            amp = std::max({amp, std::abs(fc.analytic.cos_c[n]), std::abs(fc.analytic.sin_c[n])});
        CHECK(amp > 1e-3);
    }
}

TEST_CASE("conical scans with a vertical direction") {
    SUBCASE("vertical profile lines (cylinders) give constant 1/2") {
        const ConicalScan scan = conical_scan(pi / 2.0, 2.0, 0.0);
        CHECK(scan.is_constant);
        CHECK(std::abs(scan.value - 0.5) < 1e-12);
        CHECK(scan.variation < 1e-12);
    }
    SUBCASE("horizontal profile lines (planes) give constant 0") {
        const ConicalScan scan = conical_scan(0.0, 5.0, 1.0);
        CHECK(scan.is_constant);
        CHECK(std::abs(scan.value) < 1e-12);
        CHECK(scan.variation < 1e-12);
    }
    SUBCASE("oblique lines are never constant") {
        Rng rng(17);
        for (int i = 0; i < 50; ++i) {
            const double theta = rng.uniform(0.05, pi / 2.0 - 0.05);
            const double c1 = rng.uniform(3.0, 6.0);
            const double c2 = rng.uniform(-1.0, 1.0);
            const ConicalScan scan = conical_scan(theta, c1, c2);
            CHECK(!scan.is_constant);
            CHECK(scan.variation > 1e-6);
        }
    }
    SUBCASE("lines crossing the axis are rejected") {
        CHECK_THROWS_AS(conical_scan(0.0, 0.5, 0.0), std::domain_error);
    }
}

TEST_CASE("no circle profile has constant curvature") {
    // The constancy residual along a circle of radius r has third-harmonic
    // cosine coefficient -r/4 independent of K and the centre offset.
    SUBCASE("third harmonic equals -r/4") {
        for (const double r : {0.5, 1.0, 2.0}) {
            for (const double K : {0.0, 0.5, 1.0, -1.0}) {
                const TrigPoly res = circle_residual(r, 3.5 * r + 1.0, K);
                CHECK(std::abs(res.cos_c[3] - (-r / 4.0)) < 1e-9);
                CHECK(std::abs(res.sin_c[3]) < 1e-9);
            }
        }
    }
    SUBCASE("the obstruction is bounded away from zero") {
        for (const double r : {0.5, 1.0, 2.0}) {
            const TrigPoly res = circle_residual(r, 3.0 * r, 0.7);
            CHECK(std::abs(res.cos_c[3]) >= r / 8.0);
        }
    }
    SUBCASE("scaling in r is linear") {
        const double a1 = circle_residual(1.0, 4.0, 0.3).cos_c[3];
        const double a2 = circle_residual(2.0, 8.0, 0.3).cos_c[3];
        CHECK(std::abs(a2 - 2.0 * a1) < 1e-9);
    }
    SUBCASE("centres too close to the axis are rejected") {
        CHECK_THROWS_AS(circle_residual(1.0, 0.9, 0.5), std::invalid_argument);
    }
}

TEST_CASE("first integral and its quadratic") {
    SUBCASE("frozen values") {
        CHECK(first_integral(2.0, -1.0) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(std::abs(first_integral(1.0, 0.5) - (-0.7360679774997898)) < 1e-15);
        CHECK(first_integral(0.0, 0.0) == 0.0);
    }
    SUBCASE("roots at x = 0: only z' = 0") {
        const QuadraticRoots r = quadratic_zprime(0.0);
        REQUIRE(r.roots.size() >= 1);
        bool zero_found = false;
        for (const double root : r.roots) zero_found = zero_found || std::abs(root) < 1e-14;
        CHECK(zero_found);
        REQUIRE(r.admitted.size() == 1);
        CHECK(r.admitted[0] == 0.0);
    }
    SUBCASE("roots at x = 2: double root z' = -1") {
        const QuadraticRoots r = quadratic_zprime(2.0);
        REQUIRE(!r.admitted.empty());
        for (const double root : r.admitted) CHECK(std::abs(root + 1.0) < 1e-12);
    }
    SUBCASE("roots at x = 1 are (16 -+ sqrt396)/10, both admitted") {
        const QuadraticRoots r = quadratic_zprime(1.0);
        REQUIRE(r.roots.size() == 2);
        const double lo = (16.0 - std::sqrt(396.0)) / 10.0;
        const double hi = (16.0 + std::sqrt(396.0)) / 10.0;
        CHECK(std::abs(r.roots[0] - lo) < 1e-12);
        CHECK(std::abs(r.roots[1] - hi) < 1e-12);
        REQUIRE(r.admitted.size() == 2);
        for (const double root : r.admitted) CHECK(std::abs(first_integral(1.0, root)) < 1e-9);
    }
    SUBCASE("admitted roots always pass the first-integral filter") {
        Rng rng(19);
        for (int i = 0; i < 200; ++i) {
            const double x = rng.uniform(0.0, 3.0);
            for (const double root : quadratic_zprime(x).admitted)
                CHECK(std::abs(first_integral(x, root)) < kFirstIntegralTol);
        }
    }
}

TEST_CASE("axis branches") {
    SUBCASE("slopes solve 2a^2 - 2a - 1 = 0") {
        const double ap = axis_branch_slope(AxisBranch::Positive);
        const double an = axis_branch_slope(AxisBranch::Negative);
        CHECK(std::abs(ap - (1.0 + std::sqrt(3.0)) / 2.0) < 1e-15);
        CHECK(std::abs(an - (1.0 - std::sqrt(3.0)) / 2.0) < 1e-15);
        for (const double a : {ap, an}) CHECK(std::abs(2 * a * a - 2 * a - 1) < 1e-14);
    }
    SUBCASE("first-integral branch limits are sqrt5 - 1 and 1 + sqrt5") {
        CHECK(std::abs(first_integral_branch_limit(AxisBranch::Positive) -
                       (std::sqrt(5.0) - 1.0)) < 1e-12);
        CHECK(std::abs(first_integral_branch_limit(AxisBranch::Negative) -
                       (std::sqrt(5.0) + 1.0)) < 1e-12);
    }
    SUBCASE("branch_zprime tracks admitted roots and the axis slope") {
        CHECK(std::abs(branch_zprime(AxisBranch::Negative, 2.0) + 1.0) < 1e-10);
        for (const AxisBranch b : {AxisBranch::Positive, AxisBranch::Negative}) {
            const double alpha = axis_branch_slope(b);
            // slope at the axis via small-x secant
            const double slope = branch_zprime(b, 1e-5) / 1e-5;
            CHECK(std::abs(slope - alpha) < 1e-6);
            // F vanishes along the branch
            const double x_hi = 0.8 * first_integral_branch_limit(b);
            for (double x = 0.1; x < x_hi; x += 0.1)
                CHECK(std::abs(first_integral(x, branch_zprime(b, x))) < kFirstIntegralTol);
        }
    }
    SUBCASE("branch_zsecond matches a finite-difference derivative of branch_zprime") {
        for (const AxisBranch b : {AxisBranch::Positive, AxisBranch::Negative}) {
            for (double x = 0.2; x < 0.9; x += 0.1) {
                const double fd = oracles::fd1(
                    [&](double u) { return branch_zprime(b, u); }, x, 1e-4);
                CHECK(std::abs(branch_zsecond(b, x) - fd) < 1e-6);
            }
        }
    }
    SUBCASE("the negative K = 1/2 branch approaches z' = -x + 3/x") {
        CHECK(graph_branch_limit(AxisBranch::Negative) ==
              std::numeric_limits<double>::infinity());
        CHECK(std::abs(graph_branch_limit(AxisBranch::Positive) - 1.5630652928) < 1e-6);
    }
}

TEST_CASE("the two graph families coincide only at the axis") {
    SUBCASE("right-hand sides differ by (1+z'^2) x (W-1)/(2z'-x)") {
        Rng rng(23);
        for (int i = 0; i < 200; ++i) {
            const double x = rng.uniform(0.0, 2.0);
            const double zp = rng.uniform(-2.0, 2.0);
            if (std::abs(2.0 * zp - x) < 0.1) continue;
            const double W = std::sqrt(1.0 + zp * zp);
            const double gap = (1.0 + zp * zp) * x * (W - 1.0) / (2.0 * zp - x);
            CHECK(std::abs(first_integral_zpp(x, zp) - graph_zpp(x, zp) - gap) < 1e-12);
        }
        CHECK(first_integral_zpp(0.0, 0.3) == graph_zpp(0.0, 0.3));
    }
    SUBCASE("the first-integral flow conserves F") {
        // RK4 along z'' = first_integral_zpp starting from an admitted root
        for (const AxisBranch b : {AxisBranch::Positive, AxisBranch::Negative}) {
            double x = 0.3;
            double zp = branch_zprime(b, x);
            const double h = 1e-4;
            const double F0 = first_integral(x, zp);
            for (int i = 0; i < 5000; ++i) {
                const double k1 = first_integral_zpp(x, zp);
                const double k2 = first_integral_zpp(x + h / 2, zp + h / 2 * k1);
                const double k3 = first_integral_zpp(x + h / 2, zp + h / 2 * k2);
                const double k4 = first_integral_zpp(x + h, zp + h * k3);
                zp += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
                x += h;
            }
            CHECK(std::abs(first_integral(x, zp) - F0) < 1e-10);
            // and the integrated slope still matches the tracked root
            CHECK(std::abs(zp - branch_zprime(b, x)) < 1e-8);
        }
    }
    SUBCASE("along the first-integral family K = 1/2 + (W-1)/(2W^2)") {
        // Integrate the first-integral flow, build the graph surface of
        // revolution, and compare its axis-aligned K with the closed form.
        double x = 0.4;
        double zp = branch_zprime(AxisBranch::Positive, x);
        const double h = 1e-4;
        for (int i = 0; i < 4000; ++i) {
            const double k1 = first_integral_zpp(x, zp);
            const double k2 = first_integral_zpp(x + h / 2, zp + h / 2 * k1);
            const double k3 = first_integral_zpp(x + h / 2, zp + h / 2 * k2);
            const double k4 = first_integral_zpp(x + h, zp + h * k3);
            zp += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
            x += h;
        }
        const double W = std::sqrt(1.0 + zp * zp);
        const double zpp = first_integral_zpp(x, zp);
        // axis-aligned K for a graph profile (x, z(x)):
        //   unit-speed data x' = 1/W, z' = zp/W, kappa = zpp/W^3
        const double kappa = zpp / (W * W * W);
        const double K =
            ((2.0 * zp / W - x / W) * kappa + (zp / W) * (x * zp / W - 1.0 / W)) / (2.0 * x);
        CHECK(std::abs(K - (0.5 + (W - 1.0) / (2.0 * W * W))) < 1e-9);
        CHECK(std::abs(K - 0.5) > 1e-3);  // genuinely off 1/2 away from the axis
    }
}

TEST_CASE("axis-orthogonal constant-curvature profiles") {
    SUBCASE("reconstruction carries K = 1/2 out to x_max") {
        for (const AxisBranch b : {AxisBranch::Positive, AxisBranch::Negative}) {
            const double x_max = (b == AxisBranch::Positive) ? 1.4 : 3.0;
            const AxisProfile ap = axis_orthogonal_profile(b, x_max);
            CHECK(ap.x_max == x_max);
            CHECK(ap.arc_length > x_max - 0.2);
            const RotationalSurface surf(ap.curve);
            const double s_lo = oracles::param_at_x(ap.curve, ap.curve.s_min(),
                                                    ap.curve.s_max(), 0.1);
            for (int i = 0; i <= 40; ++i) {
                const double s =
                    s_lo + (ap.curve.s_max() - 1e-9 - s_lo) * i / 40.0;
                CHECK(std::abs(rotational_K_axis_aligned(surf, s) - 0.5) < 1e-5);
            }
            // unit speed of the interpolant
            for (int i = 0; i <= 40; ++i) {
                const double s = s_lo + (ap.curve.s_max() - 1e-9 - s_lo) * i / 40.0;
                const ProfilePoint p = ap.curve.at(s);
                CHECK(std::abs(p.xp * p.xp + p.zp * p.zp - 1.0) < 1e-6);
            }
        }
    }
    SUBCASE("slope near the axis matches the series") {
        const AxisProfile ap = axis_orthogonal_profile(AxisBranch::Positive, 1.0);
        const double alpha = axis_branch_slope(AxisBranch::Positive);
        const double s = oracles::param_at_x(ap.curve, ap.curve.s_min(), ap.curve.s_max(), 0.05);
        const ProfilePoint p = ap.curve.at(s);
        const double zp_graph = p.zp / p.xp;
        const double series = alpha * p.x + std::pow(alpha, 3) / 4.0 * std::pow(p.x, 3);
        CHECK(std::abs(zp_graph - series) < 1e-4);
    }
    SUBCASE("bad limits are rejected") {
        CHECK_THROWS_AS(axis_orthogonal_profile(AxisBranch::Positive, 1.6), std::domain_error);
        CHECK_THROWS_AS(axis_orthogonal_profile(AxisBranch::Positive, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(axis_orthogonal_profile(AxisBranch::Positive, -1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("profile shooting for general constant K") {
    SUBCASE("the vertical line is a fixed point of the K = 1/2 problem") {
        // on a vertical profile the numerator 2Kx - sin(phi)(x sin(phi) -
        // cos(phi)) vanishes identically when K = 1/2, so the cylinder shoots
        // onto itself
        const ShootResult r = profile_ode_shoot(0.5, 1.7, 0.0, pi / 2.0, 3.0);
        REQUIRE(r.reason == ShootStop::ReachedSMax);
        for (const ShootState& st : r.trace) {
            CHECK(std::abs(st.x - 1.7) < 1e-9);
            CHECK(std::abs(st.z - st.s) < 1e-9);
            CHECK(std::abs(st.kappa) < 1e-9);
        }
    }
    SUBCASE("the horizontal line is a fixed point of the K = 0 problem") {
        const ShootResult r = profile_ode_shoot(0.0, 1.0, 0.5, 0.0, 2.0);
        REQUIRE(r.reason == ShootStop::ReachedSMax);
        for (const ShootState& st : r.trace) {
            CHECK(std::abs(st.x - (1.0 + st.s)) < 1e-9);
            CHECK(std::abs(st.z - 0.5) < 1e-9);
        }
    }
    SUBCASE("integration stops cleanly near the axis") {
        // horizontal shot moving left runs straight into the axis
        const ShootResult r = profile_ode_shoot(0.0, 1.0, 0.0, pi, 10.0);
        CHECK(r.reason == ShootStop::AxisApproach);
        CHECK(r.trace.back().x < 1e-2);
        CHECK(r.s_end < 10.0);
    }
    SUBCASE("integration stops cleanly at the singular set") {
        // a shallow launch at K = 1 steepens until 2 sin(phi) = x cos(phi)
        const ShootResult r = profile_ode_shoot(1.0, 1.0, 0.0, 0.2, 10.0);
        REQUIRE(r.reason == ShootStop::SingularSet);
        const ShootState& st = r.trace.back();
        CHECK(std::abs(2.0 * std::sin(st.phi) - st.x * std::cos(st.phi)) < 2e-3);
        CHECK(r.s_end < 10.0);
    }
    SUBCASE("starting on the singular set is rejected") {
        // 2 sin(phi) - x cos(phi) = 0 at x = 2, phi = pi/4
        CHECK_THROWS_AS(profile_ode_shoot(0.5, 2.0, 0.0, pi / 4.0, 1.0), std::invalid_argument);
    }
    SUBCASE("the trace has the requested output spacing and consistent kappa") {
        const ShootResult r = profile_ode_shoot(0.3, 2.0, 0.0, 1.3, 0.5, 1e-2);
        REQUIRE(r.trace.size() >= 10);
        for (std::size_t i = 1; i + 1 < r.trace.size(); ++i) {
            CHECK(std::abs((r.trace[i + 1].s - r.trace[i].s) - 1e-2) < 1e-9);
            const ShootState& st = r.trace[i];
            const double den = 2.0 * std::sin(st.phi) - st.x * std::cos(st.phi);
            const double num = 2.0 * 0.3 * st.x -
                               std::sin(st.phi) * (st.x * std::sin(st.phi) - std::cos(st.phi));
            CHECK(std::abs(st.kappa - num / den) < 1e-9);
        }
        // curve view interpolates the trace
        const ShootState& mid = r.trace[r.trace.size() / 2];
        const ProfilePoint p = r.curve.at(mid.s);
        CHECK(std::abs(p.x - mid.x) < 1e-10);
        CHECK(std::abs(p.z - mid.z) < 1e-10);
    }
}
