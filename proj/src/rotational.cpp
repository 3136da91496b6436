#include "snm/rotational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "snm/ode.hpp"

namespace snm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Stop thresholds for the arc-length shooting integrator.
constexpr double kShootAxisTol = 1e-3;
constexpr double kShootSingularTol = 1e-3;

struct Quad {
    double A, B, C;          // quadratic in p = z'(x)
    double Ap, Bp, Cp;       // d/dx
    double App, Bpp, Cpp;    // d2/dx2
};

Quad quad_at(double x) {
    const double u = x * x - 4.0;
    Quad q;
    q.A = 4.0 * x * x - u * u;
    q.B = 16.0 * x;
    q.C = 16.0 - u * u;
    q.Ap = 4.0 * x * (6.0 - x * x);
    q.Bp = 16.0;
    q.Cp = -4.0 * x * u;
    q.App = 24.0 - 12.0 * x * x;
    q.Bpp = 0.0;
    q.Cpp = 16.0 - 12.0 * x * x;
    return q;
}

std::vector<double> quadratic_real_roots(const Quad& q) {
    const double scale = std::abs(q.B) + std::abs(q.C) + 1.0;
    if (std::abs(q.A) < 1e-14 * scale) {
        if (std::abs(q.B) < 1e-14 * scale) return {};
        return {-q.C / q.B};
    }
    double disc = q.B * q.B - 4.0 * q.A * q.C;
    const double disc_scale = q.B * q.B + std::abs(4.0 * q.A * q.C);
    if (disc < 0.0) {
        if (disc < -1e-12 * disc_scale) return {};
        disc = 0.0;
    }
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (q.B + std::copysign(sq, q.B));
    if (qq == 0.0) return {0.0};  // B = 0 and disc = 0: double root at the origin
    const double r1 = qq / q.A;
    const double r2 = q.C / qq;
    if (std::abs(r1 - r2) <= 1e-12 * (1.0 + std::abs(r1))) return {r1};
    if (r1 < r2) return {r1, r2};
    return {r2, r1};
}

struct ProfileScalars {
    double x, xp, zp, kappa;
};

ProfileScalars scalars(const RotationalSurface& surf, double s) {
    const ProfilePoint p = surf.profile().at(s);
    if (p.x < kAxisClearance)
        throw std::domain_error("rotational surface: profile touches the rotation axis");
    return {p.x, p.xp, p.zp, p.kappa()};
}

}  // namespace

ParametricPatch RotationalSurface::patch(double t_min, double t_max) const {
    Domain2 dom{profile_.s_min(), profile_.s_max(), t_min, t_max};
    const ProfileCurve prof = profile_;
    auto value = [prof](double s, double t) {
        const ProfilePoint p = prof.at(s);
        return Vec3{p.x * std::cos(t), p.x * std::sin(t), p.z};
    };
    auto jet = [prof](double s, double t) {
        const ProfilePoint p = prof.at(s);
        const double ct = std::cos(t), st = std::sin(t);
        SurfaceJet2 j;
        j.p = {p.x * ct, p.x * st, p.z};
        j.ps = {p.xp * ct, p.xp * st, p.zp};
        j.pt = {-p.x * st, p.x * ct, 0.0};
        j.pss = {p.xpp * ct, p.xpp * st, p.zpp};
        j.pst = {-p.xp * st, p.xp * ct, 0.0};
        j.ptt = {-p.x * ct, -p.x * st, 0.0};
        return j;
    };
    return ParametricPatch(value, jet, dom);
}

double rotational_K_general(const RotationalSurface& surf, const CanonicalConnection& conn,
                            double s, double t) {
    const ProfileScalars v = scalars(surf, s);
    const double a = conn.C().x, b = conn.C().y, c = conn.C().z;
    const double ct = std::cos(t), st = std::sin(t);
    const double G = v.zp * v.kappa / v.x;
    const double H = (v.zp + v.x * v.kappa) / (2.0 * v.x);
    const double c_dot_n = -a * v.zp * ct - b * v.zp * st + c * v.xp;
    const double w1 = b * ct - a * st;
    const double w2 = v.xp * (a * ct + b * st) + c * v.zp;
    return 0.5 * (w1 * w1 + w2 * w2) + G - c_dot_n * H;
}

double rotational_K_axis_aligned(const RotationalSurface& surf, double s) {
    const ProfileScalars v = scalars(surf, s);
    return ((2.0 * v.zp - v.x * v.xp) * v.kappa + v.zp * (v.x * v.zp - v.xp)) / (2.0 * v.x);
}

FourierComparison fourier_coefficients(const RotationalSurface& surf,
                                       const CanonicalConnection& conn, double s,
                                       int n_samples) {
    const ProfileScalars v = scalars(surf, s);
    const double a = conn.C().x, b = conn.C().y, c = conn.C().z;
    const double G = v.zp * v.kappa / v.x;
    const double H = (v.zp + v.x * v.kappa) / (2.0 * v.x);

    FourierComparison fc;
    fc.analytic.cos_c[0] = 0.25 * (a * a + b * b) * (1.0 + v.xp * v.xp) +
                           0.5 * c * c * v.zp * v.zp + G - c * v.xp * H;
    fc.analytic.cos_c[1] = a * v.zp * (H + c * v.xp);
    fc.analytic.sin_c[1] = b * v.zp * (H + c * v.xp);
    fc.analytic.cos_c[2] = 0.25 * (b * b - a * a) * v.zp * v.zp;
    fc.analytic.sin_c[2] = -0.5 * a * b * v.zp * v.zp;

    std::vector<double> samples(static_cast<std::size_t>(n_samples));
    for (int j = 0; j < n_samples; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n_samples);
        samples[static_cast<std::size_t>(j)] = rotational_K_general(surf, conn, s, t);
    }
    fc.fitted = fit_trig_poly(samples, 3);
    fc.max_coeff_diff = fc.analytic.max_abs_coeff_diff(fc.fitted);
    return fc;
}

ConicalScan conical_scan(double theta, double c1, double c2, double s_min, double s_max,
                         int n_samples, double const_tol) {
    if (n_samples < 2) throw std::invalid_argument("conical_scan: need at least 2 samples");
    const RotationalSurface surf(line_profile(c1, c2, theta, s_min, s_max));
    ConicalScan scan;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s =
            s_min + (s_max - s_min) * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        const double K = rotational_K_axis_aligned(surf, s);  // throws near the axis
        lo = std::min(lo, K);
        hi = std::max(hi, K);
        sum += K;
    }
    scan.value = sum / static_cast<double>(n_samples);
    scan.variation = hi - lo;
    scan.is_constant = scan.variation < const_tol;
    return scan;
}

TrigPoly circle_residual(double r, double c1, double K, int n_samples) {
    if (r <= 0.0) throw std::invalid_argument("circle_residual: radius must be positive");
    if (c1 <= r) throw std::invalid_argument("circle_residual: circle must stay off the axis");
    const ProfileCurve circ = circle_profile(c1, 0.0, r);
    const double period = kTwoPi * r;
    std::vector<double> samples(static_cast<std::size_t>(n_samples));
    for (int j = 0; j < n_samples; ++j) {
        const double s = period * static_cast<double>(j) / static_cast<double>(n_samples);
        const ProfilePoint p = circ.at(s);
        samples[static_cast<std::size_t>(j)] =
            2.0 * K * p.x - (2.0 * p.zp - p.x * p.xp) * p.kappa() -
            p.zp * (p.x * p.zp - p.xp);
    }
    return fit_trig_poly(samples, 3, period);
}

double first_integral(double x, double zp) {
    const double w = std::sqrt(1.0 + zp * zp);
    return (2.0 * zp - x) * zp / w - 2.0 * (w - 1.0) - 0.5 * x * x;
}

QuadraticRoots quadratic_zprime(double x) {
    if (x < 0.0) throw std::invalid_argument("quadratic_zprime: x must be non-negative");
    QuadraticRoots out;
    out.roots = quadratic_real_roots(quad_at(x));
    for (const double p : out.roots) {
        if (std::abs(first_integral(x, p)) < kFirstIntegralTol) out.admitted.push_back(p);
    }
    return out;
}

double axis_branch_slope(AxisBranch branch) {
    return branch == AxisBranch::Positive ? 0.5 * (1.0 + std::numbers::sqrt3)
                                          : 0.5 * (1.0 - std::numbers::sqrt3);
}

double first_integral_branch_limit(AxisBranch branch) {
    // Vertical asymptotes: F(x, +-oo) = 0 forces 2 -+ x - x^2/2 = 0.
    return branch == AxisBranch::Positive ? std::sqrt(5.0) - 1.0 : 1.0 + std::sqrt(5.0);
}

double graph_branch_limit(AxisBranch branch) {
    // Positive: z' ~ 2/(x* - x) near the asymptote; the frozen abscissa comes
    // from integrating graph_zpp at rel tol 1e-13 and is stable to ~1e-9.
    // Negative: z' ~ -x + 3/x, no finite asymptote.
    return branch == AxisBranch::Positive ? 1.5630652928
                                          : std::numeric_limits<double>::infinity();
}

double branch_zprime(AxisBranch branch, double x) {
    if (x < 0.0) throw std::invalid_argument("branch_zprime: x must be non-negative");
    if (x == 0.0) return 0.0;
    const QuadraticRoots qr = quadratic_zprime(x);
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_f = std::numeric_limits<double>::infinity();
    for (const double p : qr.admitted) {
        const bool sign_ok = (branch == AxisBranch::Positive) ? (p > 0.0) : (p < 0.0);
        if (!sign_ok) continue;
        const double f = std::abs(first_integral(x, p));
        if (f < best_f) {
            best_f = f;
            best = p;
        }
    }
    if (!std::isfinite(best))
        throw std::domain_error("branch_zprime: no admissible root (x beyond the branch limit)");
    return best;
}

double branch_zsecond(AxisBranch branch, double x) {
    const double p = branch_zprime(branch, x);
    const Quad q = quad_at(x);
    const double Qp = 2.0 * q.A * p + q.B;
    const double Qx = q.Ap * p * p + q.Bp * p + q.Cp;
    if (std::abs(Qp) > 1e-5 * (std::abs(2.0 * q.A * p) + std::abs(q.B) + 1.0)) {
        return -Qx / Qp;
    }
    // Root collision: dQ/dp = 0. The two crossing-curve slopes solve
    // Qpp v^2 + 2 Qxp v + Qxx = 0; pick the one matching a secant estimate.
    const double Qpp = 2.0 * q.A;
    const double Qxp = 2.0 * q.Ap * p + q.Bp;
    const double Qxx = q.App * p * p + q.Bpp * p + q.Cpp;
    const double h = 1e-5;
    const double x_lo = std::max(0.0, x - h);
    double x_hi = x + h, p_hi;
    try {
        p_hi = branch_zprime(branch, x_hi);
    } catch (const std::domain_error&) {
        x_hi = x;
        p_hi = p;
    }
    const double secant = (p_hi - branch_zprime(branch, x_lo)) / (x_hi - x_lo);
    double disc = Qxp * Qxp - Qpp * Qxx;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    const double v1 = (-Qxp + sq) / Qpp;
    const double v2 = (-Qxp - sq) / Qpp;
    return (std::abs(v1 - secant) <= std::abs(v2 - secant)) ? v1 : v2;
}

double graph_zpp(double x, double zp) {
    const double w2 = 1.0 + zp * zp;
    return w2 * (x + zp) / (2.0 * zp - x);
}

double first_integral_zpp(double x, double zp) {
    const double w2 = 1.0 + zp * zp;
    return w2 * (x * std::sqrt(w2) + zp) / (2.0 * zp - x);
}

namespace {

/// Cubic Hermite value on a cell of width h, t in [0, 1], end slopes per x.
double hermite(double t, double h, double fa, double da, double fb, double db) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * fa + (t3 - 2 * t2 + t) * h * da +
           (-2 * t3 + 3 * t2) * fb + (t3 - t2) * h * db;
}

/// d/dt of the cell above (divide by h for d/dx).
double hermite_dt(double t, double h, double fa, double da, double fb, double db) {
    const double t2 = t * t;
    return 6 * (t2 - t) * fa + (3 * t2 - 4 * t + 1) * h * da + 6 * (t - t2) * fb +
           (3 * t2 - 2 * t) * h * db;
}

}  // namespace

AxisProfile axis_orthogonal_profile(AxisBranch branch, double x_max) {
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        throw std::invalid_argument("axis_orthogonal_profile: x_max must be finite and > 0");
    const double limit = graph_branch_limit(branch);
    if (x_max >= limit - 1e-3) {
        throw std::domain_error(
            "axis_orthogonal_profile: x_max reaches the vertical asymptote of the branch");
    }

    const double alpha = axis_branch_slope(branch);
    const double beta = 0.25 * alpha * alpha * alpha;  // z' = alpha x + beta x^3 + O(x^5)

    // Node data: p = z'(x), q = z''(x), plus running z and arc length s.
    struct Mesh {
        std::vector<double> x, p, q, z, s;
        double alpha = 0.0;
    };
    auto mesh = std::make_shared<Mesh>();
    mesh->alpha = alpha;
    auto push_node = [&mesh](double x, double p, double q, double z, double s) {
        mesh->x.push_back(x);
        mesh->p.push_back(p);
        mesh->q.push_back(q);
        mesh->z.push_back(z);
        mesh->s.push_back(s);
    };
    push_node(0.0, 0.0, alpha, 0.0, 0.0);

    // Series seed just off the axis, where the ODE itself is 0/0.
    const double x0 = std::min(1e-3, 0.5 * x_max);
    const double p0 = alpha * x0 + beta * x0 * x0 * x0;
    const double z0 = 0.5 * alpha * x0 * x0 + 0.25 * beta * x0 * x0 * x0 * x0;
    const double s0 = x0 + alpha * alpha * x0 * x0 * x0 / 6.0;

    OdeRhs rhs = [](double x, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = graph_zpp(x, y[0]);
        dy[1] = y[0];
        dy[2] = std::sqrt(1.0 + y[0] * y[0]);
    };
    OdeOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_tol = 1e-14;
    opts.h_max = 0.01;  // caps the Hermite interpolation error well under 1e-6
    OdeObserver observer = [&](double x, const std::vector<double>& y) {
        if (x > mesh->x.back())
            push_node(x, y[0], graph_zpp(x, y[0]), y[1], y[2]);
    };
    const OdeResult r =
        integrate_ode(rhs, {p0, z0, s0}, x0, x_max, opts, nullptr, observer);
    if (r.outcome != OdeOutcome::ReachedEnd)
        throw std::domain_error("axis_orthogonal_profile: branch integration stalled");
    if (mesh->x.back() < x_max) push_node(r.s, r.y[0], graph_zpp(r.s, r.y[0]), r.y[1], r.y[2]);

    const double total = mesh->s.back();
    auto jet = [mesh](double s_query) {
        const auto& m = *mesh;
        const double sq = std::clamp(s_query, 0.0, m.s.back());
        const auto it = std::upper_bound(m.s.begin(), m.s.end(), sq);
        std::size_t j = static_cast<std::size_t>(
            std::max<std::ptrdiff_t>(0, std::distance(m.s.begin(), it) - 1));
        if (j >= m.s.size() - 1) j = m.s.size() - 2;
        const double h = m.x[j + 1] - m.x[j];
        const double wa = std::sqrt(1.0 + m.p[j] * m.p[j]);
        const double wb = std::sqrt(1.0 + m.p[j + 1] * m.p[j + 1]);
        // Invert the arc-length Hermite s(x) on the cell (ds/dx = W >= 1).
        double t = std::clamp((sq - m.s[j]) / (m.s[j + 1] - m.s[j]), 0.0, 1.0);
        for (int k = 0; k < 5; ++k) {
            const double f = hermite(t, h, m.s[j], wa, m.s[j + 1], wb) - sq;
            const double df = hermite_dt(t, h, m.s[j], wa, m.s[j + 1], wb);
            t = std::clamp(t - f / df, 0.0, 1.0);
        }
        const double x = m.x[j] + t * h;
        const double p = hermite(t, h, m.p[j], m.q[j], m.p[j + 1], m.q[j + 1]);
        // z'' of the interpolant itself, so downstream curvature evaluations
        // measure how well the curve solves the equation instead of assuming
        // it.
        const double q = hermite_dt(t, h, m.p[j], m.q[j], m.p[j + 1], m.q[j + 1]) / h;
        const double w = std::sqrt(1.0 + p * p);
        const double w4 = w * w * w * w;
        ProfilePoint out;
        out.x = x;
        out.z = hermite(t, h, m.z[j], m.p[j], m.z[j + 1], m.p[j + 1]);
        out.xp = 1.0 / w;
        out.zp = p / w;
        out.xpp = -p * q / w4;
        out.zpp = q / w4;
        return out;
    };

    AxisProfile ap{ProfileCurve(jet, 0.0, total), x_max, total, branch};

    // Pointwise K = 1/2 self-check away from the axis.
    const RotationalSurface surf(ap.curve);
    const double s_lo = std::min(0.2 * total, total - 1e-9);
    for (int i = 0; i <= 8; ++i) {
        const double s =
            std::min(total, s_lo + (total - s_lo) * static_cast<double>(i) / 8.0);
        if (std::abs(rotational_K_axis_aligned(surf, s) - 0.5) > 1e-4)
            throw std::logic_error("axis_orthogonal_profile: K = 1/2 self-check failed");
    }
    return ap;
}

ShootResult profile_ode_shoot(double K, double x0, double z0, double phi0, double s_max,
                              double output_step) {
    if (x0 <= kShootAxisTol)
        throw std::invalid_argument("profile_ode_shoot: x0 must start off the axis");
    if (std::abs(2.0 * std::sin(phi0) - x0 * std::cos(phi0)) < kShootSingularTol)
        throw std::invalid_argument("profile_ode_shoot: initial point on the singular set");
    if (!(s_max > 0.0) || !(output_step > 0.0))
        throw std::invalid_argument("profile_ode_shoot: s_max and output_step must be positive");

    auto kappa_of = [K](double x, double phi) {
        const double sp = std::sin(phi), cp = std::cos(phi);
        return (2.0 * K * x - sp * (x * sp - cp)) / (2.0 * sp - x * cp);
    };
    OdeRhs rhs = [&kappa_of](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = std::cos(y[2]);
        dy[1] = std::sin(y[2]);
        dy[2] = kappa_of(y[0], y[2]);
    };
    OdePredicate stop = [](double, const std::vector<double>& y) {
        return y[0] < kShootAxisTol ||
               std::abs(2.0 * std::sin(y[2]) - y[0] * std::cos(y[2])) < kShootSingularTol;
    };

    std::vector<ShootState> states;
    auto push = [&](double s, const std::vector<double>& y) {
        states.push_back({s, y[0], y[1], y[2], kappa_of(y[0], y[2])});
    };

    std::vector<double> y = {x0, z0, phi0};
    double s = 0.0;
    push(s, y);
    OdeOptions opts;
    ShootStop reason = ShootStop::ReachedSMax;
    while (s < s_max * (1.0 - 1e-15)) {
        const double s_next = std::min(s + output_step, s_max);
        OdeResult r = integrate_ode(rhs, y, s, s_next, opts, stop);
        s = r.s;
        y = r.y;
        push(s, y);
        if (r.outcome == OdeOutcome::StopTriggered || r.outcome == OdeOutcome::StepUnderflow) {
            reason = (y[0] < 2.0 * kShootAxisTol) ? ShootStop::AxisApproach
                                                  : ShootStop::SingularSet;
            break;
        }
    }
    const double s_end = s;

    // Cubic-Hermite view of the trace; on solutions x' = cos(phi),
    // z' = sin(phi) exactly, so the interpolated curve stays unit-speed.
    auto trace = std::make_shared<std::vector<ShootState>>(states);
    auto kap = kappa_of;
    auto jet = [trace, kap](double s_query) {
        const auto& tr = *trace;
        std::size_t j = 0;
        {
            std::size_t lo = 0, hi = tr.size() - 1;
            while (hi - lo > 1) {
                const std::size_t mid = (lo + hi) / 2;
                if (tr[mid].s <= s_query) lo = mid; else hi = mid;
            }
            j = lo;
        }
        const ShootState& A = tr[j];
        const ShootState& B = tr[std::min(j + 1, tr.size() - 1)];
        const double d = B.s - A.s;
        double x, phi;
        if (d <= 0.0) {
            x = A.x;
            phi = A.phi;
        } else {
            const double t = (s_query - A.s) / d;
            const double t2 = t * t, t3 = t2 * t;
            const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
            const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
            x = h00 * A.x + h10 * d * std::cos(A.phi) + h01 * B.x + h11 * d * std::cos(B.phi);
            phi = h00 * A.phi + h10 * d * A.kappa + h01 * B.phi + h11 * d * B.kappa;
        }
        ProfilePoint out;
        const double k = kap(x, phi);
        out.x = x;
        out.xp = std::cos(phi);
        out.zp = std::sin(phi);
        out.xpp = -std::sin(phi) * k;
        out.zpp = std::cos(phi) * k;
        // z by the same Hermite rule.
        const double dz = B.s - A.s;
        if (dz <= 0.0) {
            out.z = A.z;
        } else {
            const double t = (s_query - A.s) / dz;
            const double t2 = t * t, t3 = t2 * t;
            out.z = (2 * t3 - 3 * t2 + 1) * A.z + (t3 - 2 * t2 + t) * dz * std::sin(A.phi) +
                    (-2 * t3 + 3 * t2) * B.z + (t3 - t2) * dz * std::sin(B.phi);
        }
        return out;
    };
    return ShootResult{std::move(states), reason, s_end, ProfileCurve(jet, 0.0, s_end)};
}

}  // namespace snm
