#include "snm/cylindrical.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "snm/quadrature.hpp"

namespace snm {
namespace {

Vec3 least_aligned_axis(const Vec3& w) {
    const double ax = std::abs(w.x), ay = std::abs(w.y), az = std::abs(w.z);
    if (ax <= ay && ax <= az) return {1, 0, 0};
    if (ay <= az) return {0, 1, 0};
    return {0, 0, 1};
}

}  // namespace

CylinderSpec::CylinderSpec(const Vec3& ruling, ProfileCurve profile)
    : CylinderSpec(ruling, least_aligned_axis(normalized(ruling)), std::move(profile)) {}

CylinderSpec::CylinderSpec(const Vec3& ruling, const Vec3& plane_x, ProfileCurve profile)
    : w_(normalized(ruling)), profile_(std::move(profile)) {
    const Vec3 raw = plane_x - dot(plane_x, w_) * w_;
    if (norm(raw) < 1e-10)
        throw std::invalid_argument("CylinderSpec: plane_x parallel to the ruling");
    e1_ = normalized(raw);
    e2_ = cross(e1_, w_);
}

Vec3 CylinderSpec::curve_point(double s) const {
    const ProfilePoint p = profile_.at(s);
    return p.x * e1_ + p.z * e2_;
}

Vec3 CylinderSpec::curve_tangent(double s) const {
    const ProfilePoint p = profile_.at(s);
    return p.xp * e1_ + p.zp * e2_;
}

Vec3 CylinderSpec::curve_normal(double s) const {
    // gamma' x w = x' (e1 x w) + z' (e2 x w) = x' e2 - z' e1.
    const ProfilePoint p = profile_.at(s);
    return p.xp * e2_ - p.zp * e1_;
}

double CylinderSpec::curve_kappa(double s) const { return profile_.at(s).kappa(); }

ParametricPatch CylinderSpec::patch(double t_min, double t_max) const {
    Domain2 dom{profile_.s_min(), profile_.s_max(), t_min, t_max};
    const Vec3 w = w_, e1 = e1_, e2 = e2_;
    const ProfileCurve prof = profile_;
    auto value = [=](double s, double t) {
        const ProfilePoint p = prof.at(s);
        return p.x * e1 + p.z * e2 + t * w;
    };
    auto jet = [=](double s, double t) {
        const ProfilePoint p = prof.at(s);
        SurfaceJet2 j;
        j.p = p.x * e1 + p.z * e2 + t * w;
        j.ps = p.xp * e1 + p.zp * e2;
        j.pt = w;
        j.pss = p.xpp * e1 + p.zpp * e2;
        j.pst = {0, 0, 0};
        j.ptt = {0, 0, 0};
        return j;
    };
    return ParametricPatch(value, jet, dom);
}

double cylinder_K(const CylinderSpec& cyl, const CanonicalConnection& conn, double s) {
    const Vec3& c = conn.C();
    const double cw = dot(cyl.ruling(), c);
    const double ct = dot(cyl.curve_tangent(s), c);
    const double cn = dot(cyl.curve_normal(s), c);
    return 0.5 * (cw * cw + ct * ct - cyl.curve_kappa(s) * cn);
}

ProfileCurve generating_curve(double K) {
    const double inf = std::numeric_limits<double>::infinity();

    if (K > 0.0) {
        const double w = std::sqrt(2.0 * K);
        double s_lim = inf;
        if (2.0 * K > 1.0) s_lim = std::atanh(1.0 / w) / w;
        auto zp = [w](double s) { return -w * std::tanh(w * s); };
        auto jet = [=](double s) {
            ProfilePoint p;
            p.z = -std::log(std::cosh(w * s));
            p.zp = zp(s);
            const double sech = 1.0 / std::cosh(w * s);
            p.zpp = -w * w * sech * sech;
            p.x = integrate([&](double u) { return std::sqrt(std::max(0.0, 1.0 - zp(u) * zp(u))); },
                            0.0, s, 1e-13);
            p.xp = std::sqrt(std::max(0.0, 1.0 - p.zp * p.zp));
            p.xpp = -p.zp * p.zpp / p.xp;  // +-inf where x' = 0 (interval ends)
            return p;
        };
        return ProfileCurve(jet, -s_lim, s_lim);
    }

    if (K == 0.0) {
        auto jet = [](double s) {
            ProfilePoint p;
            p.z = -std::log(s);
            p.zp = -1.0 / s;
            p.zpp = 1.0 / (s * s);
            const double r = std::sqrt(std::max(0.0, s * s - 1.0));
            p.x = r - std::atan(r);  // integral of sqrt(1 - 1/s^2) from 1
            p.xp = r / s;
            p.xpp = -p.zp * p.zpp / p.xp;  // +inf at s = 1
            return p;
        };
        return ProfileCurve(jet, 1.0, inf);
    }

    const double w = std::sqrt(-2.0 * K);
    const double s_lim = std::atan(1.0 / w) / w;
    auto zp = [w](double s) { return w * std::tan(w * s); };
    auto jet = [=](double s) {
        ProfilePoint p;
        p.z = -std::log(std::cos(w * s));
        p.zp = zp(s);
        const double sec = 1.0 / std::cos(w * s);
        p.zpp = w * w * sec * sec;
        p.x = integrate([&](double u) { return std::sqrt(std::max(0.0, 1.0 - zp(u) * zp(u))); },
                        0.0, s, 1e-13);
        p.xp = std::sqrt(std::max(0.0, 1.0 - p.zp * p.zp));
        p.xpp = -p.zp * p.zpp / p.xp;
        return p;
    };
    return ProfileCurve(jet, -s_lim, s_lim);
}

ProfileCurve closed_form_curve_k_half() {
    const double inf = std::numeric_limits<double>::infinity();
    auto jet = [](double s) {
        ProfilePoint p;
        const double ch = std::cosh(s), th = std::tanh(s);
        p.x = std::atan(std::sinh(s));
        p.z = -std::log(ch);
        p.xp = 1.0 / ch;
        p.zp = -th;
        p.xpp = -th / ch;
        p.zpp = -1.0 / (ch * ch);
        return p;
    };
    return ProfileCurve(jet, -inf, inf);
}

ProfileCurve closed_form_curve_k_minus_half() {
    auto jet = [](double s) {
        ProfilePoint p;
        const double sq2 = std::numbers::sqrt2;
        const double cot = 1.0 / std::tan(s);
        // arccot(y) = atan(1/y); IEEE propagation handles s = 0 and s = pi/4.
        p.x = sq2 * std::asin(sq2 * std::sin(s)) -
              std::atan(1.0 / std::sqrt(std::max(0.0, cot * cot - 1.0)));
        p.z = -std::log(std::cos(s));
        const double t = std::tan(s);
        p.zp = t;
        p.zpp = 1.0 + t * t;
        p.xp = std::sqrt(std::max(0.0, 1.0 - t * t));
        p.xpp = -p.zp * p.zpp / p.xp;
        return p;
    };
    return ProfileCurve(jet, 0.0, std::numbers::pi / 4.0);
}

}  // namespace snm
