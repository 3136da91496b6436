#pragma once

#include <functional>

#include "snm/vec3.hpp"

namespace snm {

/// Position and all partial derivatives of a parametrised surface up to
/// second order at one parameter point.
struct SurfaceJet2 {
    Vec3 p;    ///< psi(s, t)
    Vec3 ps;   ///< d psi / ds
    Vec3 pt;   ///< d psi / dt
    Vec3 pss;  ///< d2 psi / ds2
    Vec3 pst;  ///< d2 psi / ds dt
    Vec3 ptt;  ///< d2 psi / dt2
};

struct Domain2 {
    double s_min = 0.0, s_max = 1.0;
    double t_min = 0.0, t_max = 1.0;
    bool contains(double s, double t) const {
        return s >= s_min && s <= s_max && t >= t_min && t <= t_max;
    }
    bool contains_with_margin(double s, double t, double m) const {
        return s >= s_min + m && s <= s_max - m && t >= t_min + m && t <= t_max - m;
    }
};

enum class JetMethod {
    Auto,              ///< analytic jets when available, finite differences otherwise
    Analytic,          ///< require analytic jets (error if absent)
    FiniteDifference,  ///< force the central-difference stencil
};

/// Immersed parametric patch psi : D c R^2 -> R^3. Jets may be supplied in
/// closed form; otherwise they are recovered by second-order central
/// differences of the point evaluator.
class ParametricPatch {
public:
    using PointFn = std::function<Vec3(double, double)>;
    using JetFn = std::function<SurfaceJet2(double, double)>;

    ParametricPatch(PointFn point, Domain2 domain)
        : point_(std::move(point)), domain_(domain) {}
    ParametricPatch(PointFn point, JetFn jet, Domain2 domain)
        : point_(std::move(point)), jet_(std::move(jet)), domain_(domain) {}

    Vec3 point(double s, double t) const;
    bool has_analytic_jets() const { return static_cast<bool>(jet_); }
    const Domain2& domain() const { return domain_; }
    SurfaceJet2 analytic_jet(double s, double t) const;

private:
    PointFn point_;
    JetFn jet_;
    Domain2 domain_;
};

/// Default finite-difference step at a parameter point: 1e-4 * max(1, |s|, |t|).
double default_fd_step(double s, double t);

/// Second-order jet of the patch at (s, t). `step` = 0 selects the default
/// finite-difference step; finite differencing requires (s, t) to sit inside
/// the domain with a margin of at least twice the step. Throws
/// std::domain_error outside the domain and std::runtime_error if the
/// evaluated point is not an immersion (|ps x pt| ~ 0).
SurfaceJet2 jet2(const ParametricPatch& patch, double s, double t,
                 JetMethod method = JetMethod::Auto, double step = 0.0);

}  // namespace snm
