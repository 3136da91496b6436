#include "snm/profile.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "snm/quadrature.hpp"

namespace snm {

ProfileCurve::ProfileCurve(JetFn jet, double s_min, double s_max)
    : jet_(std::move(jet)), s_min_(s_min), s_max_(s_max) {
    if (!(s_min < s_max)) throw std::invalid_argument("ProfileCurve: empty parameter interval");
}

ProfilePoint ProfileCurve::at(double s) const {
    if (s < s_min_ || s > s_max_)
        throw std::domain_error("ProfileCurve: parameter outside domain");
    return jet_(s);
}

bool ProfileCurve::bounded_below() const { return std::isfinite(s_min_); }
bool ProfileCurve::bounded_above() const { return std::isfinite(s_max_); }

ProfileCurve line_profile(double x0, double z0, double theta, double s_min, double s_max) {
    const double c = std::cos(theta), sn = std::sin(theta);
    return ProfileCurve(
        [=](double s) {
            ProfilePoint p;
            p.x = x0 + s * c;
            p.z = z0 + s * sn;
            p.xp = c;
            p.zp = sn;
            return p;
        },
        s_min, s_max);
}

ProfileCurve circle_profile(double c1, double c2, double r) {
    if (r <= 0.0) throw std::invalid_argument("circle_profile: radius must be positive");
    const double inf = std::numeric_limits<double>::infinity();
    return ProfileCurve(
        [=](double s) {
            const double a = s / r;
            ProfilePoint p;
            p.x = c1 + r * std::cos(a);
            p.z = c2 + r * std::sin(a);
            p.xp = -std::sin(a);
            p.zp = std::cos(a);
            p.xpp = -std::cos(a) / r;
            p.zpp = -std::sin(a) / r;
            return p;
        },
        -inf, inf);
}

ProfileCurve turning_angle_profile(std::function<double(double)> phi,
                                   std::function<double(double)> dphi, double x0, double z0,
                                   double s_min, double s_max) {
    auto xi = [phi](double s) { return std::cos(phi(s)); };
    auto zi = [phi](double s) { return std::sin(phi(s)); };
    auto jet = [=](double s) {
        ProfilePoint p;
        p.x = x0 + integrate(xi, 0.0, s, 1e-13);
        p.z = z0 + integrate(zi, 0.0, s, 1e-13);
        const double a = phi(s), da = dphi(s);
        p.xp = std::cos(a);
        p.zp = std::sin(a);
        p.xpp = -std::sin(a) * da;
        p.zpp = std::cos(a) * da;
        return p;
    };
    return ProfileCurve(jet, s_min, s_max);
}

}  // namespace snm
