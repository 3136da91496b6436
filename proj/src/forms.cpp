#include "snm/forms.hpp"

#include <stdexcept>

namespace snm {

FundamentalForms fundamental_forms(const SurfaceJet2& jet) {
    FundamentalForms f;
    f.g11 = dot(jet.ps, jet.ps);
    f.g12 = dot(jet.ps, jet.pt);
    f.g22 = dot(jet.pt, jet.pt);
    const double det_g = f.g11 * f.g22 - f.g12 * f.g12;
    if (det_g < kMetricDegeneracyTol)
        throw std::runtime_error("fundamental_forms: degenerate metric");
    f.N = cross(jet.ps, jet.pt) / std::sqrt(det_g);
    f.h11 = dot(jet.pss, f.N);
    f.h12 = dot(jet.pst, f.N);
    f.h22 = dot(jet.ptt, f.N);
    return f;
}

ClassicalCurvatures classical_curvatures(const FundamentalForms& f) {
    const double det_g = f.g11 * f.g22 - f.g12 * f.g12;
    if (det_g < kMetricDegeneracyTol)
        throw std::runtime_error("classical_curvatures: degenerate metric");
    ClassicalCurvatures c;
    c.G = (f.h11 * f.h22 - f.h12 * f.h12) / det_g;
    c.H = (f.g11 * f.h22 - 2.0 * f.g12 * f.h12 + f.g22 * f.h11) / (2.0 * det_g);
    c.N = f.N;
    return c;
}

}  // namespace snm
