#include "snm/graph_pde.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace snm {

GraphJet2 GraphSurface::jet(double x, double y) const {
    if (!domain_.contains(x, y)) throw std::domain_error("GraphSurface: point outside domain");
    return jet_(x, y);
}

ParametricPatch GraphSurface::patch() const {
    const JetFn j = jet_;
    auto value = [j](double x, double y) {
        const GraphJet2 g = j(x, y);
        return Vec3{x, y, g.u};
    };
    auto jet = [j](double x, double y) {
        const GraphJet2 g = j(x, y);
        SurfaceJet2 out;
        out.p = {x, y, g.u};
        out.ps = {1, 0, g.ux};
        out.pt = {0, 1, g.uy};
        out.pss = {0, 0, g.uxx};
        out.pst = {0, 0, g.uxy};
        out.ptt = {0, 0, g.uyy};
        return out;
    };
    return ParametricPatch(value, jet, domain_);
}

double pde_residual(const GraphSurface& surf, double x, double y) {
    const GraphJet2 g = surf.jet(x, y);
    return 2.0 * (g.uxx * g.uyy - g.uxy * g.uxy) -
           ((1.0 + g.uy * g.uy) * g.uxx - 2.0 * g.ux * g.uy * g.uxy +
            (1.0 + g.ux * g.ux) * g.uyy);
}

double separable_residual(double fpp, double fp, double gpp, double gp) {
    return 2.0 * fpp * gpp - fpp * (1.0 + gp * gp) - gpp * (1.0 + fp * fp);
}

void solution_family_halfwidths(double c, double& wx, double& wy) {
    if (c == 0.0 || c == 0.5)
        throw std::invalid_argument("solution_family: parameter c must avoid 0 and 1/2");
    wx = std::numbers::pi / (2.0 * std::abs(c));
    wy = std::numbers::pi * std::abs(2.0 * c - 1.0) / (2.0 * std::abs(c));
}

GraphSurface solution_family(double c) {
    double wx, wy;
    solution_family_halfwidths(c, wx, wy);  // validates c
    const double m = c / (2.0 * c - 1.0);
    auto jet = [c, m](double x, double y) {
        GraphJet2 g;
        const double tx = std::tan(c * x);
        const double ty = std::tan(m * y);
        g.u = -std::log(std::cos(c * x)) / c - std::log(std::cos(m * y)) / m;
        g.ux = tx;
        g.uy = ty;
        g.uxx = c * (1.0 + tx * tx);
        g.uxy = 0.0;
        g.uyy = m * (1.0 + ty * ty);
        return g;
    };
    return GraphSurface(jet, Domain2{-wx, wx, -wy, wy});
}

}  // namespace snm
