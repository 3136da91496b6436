#include "snm/patch.hpp"

#include <cmath>
#include <stdexcept>

namespace snm {

Vec3 ParametricPatch::point(double s, double t) const {
    if (!domain_.contains(s, t)) throw std::domain_error("ParametricPatch: point outside domain");
    return point_(s, t);
}

SurfaceJet2 ParametricPatch::analytic_jet(double s, double t) const {
    if (!jet_) throw std::runtime_error("ParametricPatch: no analytic jets available");
    if (!domain_.contains(s, t)) throw std::domain_error("ParametricPatch: point outside domain");
    return jet_(s, t);
}

double default_fd_step(double s, double t) {
    return 1e-4 * std::max({1.0, std::abs(s), std::abs(t)});
}

SurfaceJet2 jet2(const ParametricPatch& patch, double s, double t, JetMethod method, double step) {
    if (!patch.domain().contains(s, t)) throw std::domain_error("jet2: point outside domain");

    const bool analytic = (method == JetMethod::Analytic) ||
                          (method == JetMethod::Auto && patch.has_analytic_jets());
    SurfaceJet2 j;
    if (analytic) {
        j = patch.analytic_jet(s, t);
    } else {
        const double h = (step > 0.0) ? step : default_fd_step(s, t);
        if (!patch.domain().contains_with_margin(s, t, 2.0 * h))
            throw std::domain_error("jet2: insufficient margin for finite differences");
        const auto f = [&](double a, double b) { return patch.point(a, b); };
        const Vec3 p = f(s, t);
        const Vec3 pe = f(s + h, t), pw = f(s - h, t);
        const Vec3 pn = f(s, t + h), pso = f(s, t - h);
        const Vec3 pne = f(s + h, t + h), pnw = f(s - h, t + h);
        const Vec3 pse = f(s + h, t - h), psw = f(s - h, t - h);
        j.p = p;
        j.ps = (pe - pw) / (2.0 * h);
        j.pt = (pn - pso) / (2.0 * h);
        j.pss = (pe - 2.0 * p + pw) / (h * h);
        j.ptt = (pn - 2.0 * p + pso) / (h * h);
        j.pst = (pne - pnw - pse + psw) / (4.0 * h * h);
    }

    // |ps x pt|^2 equals the metric determinant (Lagrange identity), so this
    // matches the degeneracy tolerance used for the fundamental forms.
    if (norm2(cross(j.ps, j.pt)) < 1e-12)
        throw std::runtime_error("jet2: degenerate parametrisation (ps x pt vanishes)");
    return j;
}

}  // namespace snm
