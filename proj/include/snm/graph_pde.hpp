#pragma once

#include <functional>

#include "snm/patch.hpp"

namespace snm {

/// Value and derivatives of a graph function u(x, y) up to second order.
struct GraphJet2 {
    double u = 0;
    double ux = 0, uy = 0;
    double uxx = 0, uxy = 0, uyy = 0;
};

/// Surface given as the graph z = u(x, y) over a rectangle, with analytic
/// derivatives. The patch orientation is the upward normal (psi_x x psi_y).
class GraphSurface {
public:
    using JetFn = std::function<GraphJet2(double, double)>;

    GraphSurface(JetFn jet, Domain2 domain) : jet_(std::move(jet)), domain_(domain) {}

    GraphJet2 jet(double x, double y) const;
    const Domain2& domain() const { return domain_; }

    ParametricPatch patch() const;

private:
    JetFn jet_;
    Domain2 domain_;
};

/// Residual of the curvature-balance equation G = <C, N> H for C = dz on a
/// graph, cleared of denominators:
///   2 (uxx uyy - uxy^2) - [ (1+uy^2) uxx - 2 ux uy uxy + (1+ux^2) uyy ].
/// It vanishes identically exactly on surfaces with K = K_tilde.
double pde_residual(const GraphSurface& surf, double x, double y);

/// Separated form of the same equation for u = f(x) + g(y):
///   2 f'' g'' - f''(1 + g'^2) - g''(1 + f'^2).
double separable_residual(double fpp, double fp, double gpp, double gp);

/// One-parameter family of separable solutions
///   u(x, y) = -(1/c) log cos(cx) - ((2c-1)/c) log cos(cy/(2c-1)),
/// defined on the open rectangle |cx| < pi/2, |cy/(2c-1)| < pi/2.
/// The degenerate parameters c = 0 and c = 1/2 are rejected
/// (std::invalid_argument).
GraphSurface solution_family(double c);

/// Convenience: the positivity rectangle half-widths (wx, wy) of the family.
void solution_family_halfwidths(double c, double& wx, double& wy);

}  // namespace snm
