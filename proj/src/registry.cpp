#include "snm/registry.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

#include "snm/cylindrical.hpp"
#include "snm/graph_pde.hpp"
#include "snm/rotational.hpp"

namespace snm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

std::string format_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Merges user parameters over the family defaults; rejects unknown keys.
std::map<std::string, double> merge_params(const std::string& name,
                                           const std::map<std::string, double>& defaults,
                                           const std::map<std::string, double>& given) {
    std::map<std::string, double> out = defaults;
    for (const auto& [key, value] : given) {
        auto it = out.find(key);
        if (it == out.end()) {
            std::string allowed;
            for (const auto& [k, v] : defaults) {
                (void)v;
                allowed += allowed.empty() ? k : ", " + k;
            }
            throw std::invalid_argument("surface '" + name + "': unknown parameter '" + key +
                                        "' (allowed: " + (allowed.empty() ? "none" : allowed) +
                                        ")");
        }
        if (!std::isfinite(value)) {
            throw std::invalid_argument("surface '" + name + "': parameter '" + key +
                                        "' must be finite");
        }
        it->second = value;
    }
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

RegistryEntry make_plane(const std::map<std::string, double>&) {
    Domain2 dom{-5.0, 5.0, -5.0, 5.0};
    ParametricPatch patch(
        [](double s, double t) { return Vec3{s, t, 0.0}; },
        [](double s, double t) {
            SurfaceJet2 j;
            j.p = Vec3{s, t, 0.0};
            j.ps = Vec3{1.0, 0.0, 0.0};
            j.pt = Vec3{0.0, 1.0, 0.0};
            return j;
        },
        dom);
    auto closed = [](double, double, const CanonicalConnection& conn) {
        return ambient_sectional_curvature({Vec3{1, 0, 0}, Vec3{0, 1, 0}}, conn);
    };
    return RegistryEntry{std::move(patch), Domain2{-2.0, 2.0, -2.0, 2.0}, "plane", closed,
                         nullptr};
}

RegistryEntry make_round_cylinder(const std::map<std::string, double>& p) {
    const double r = p.at("r");
    require(r > 0.0, "surface 'cylinder': r must be positive");
    // Arc-length angle a = s / r; rulings along the z-axis.
    auto jet = [r](double s, double t) {
        const double a = s / r;
        const double c = std::cos(a), sn = std::sin(a);
        SurfaceJet2 j;
        j.p = Vec3{r * c, r * sn, t};
        j.ps = Vec3{-sn, c, 0.0};
        j.pt = Vec3{0.0, 0.0, 1.0};
        j.pss = Vec3{-c / r, -sn / r, 0.0};
        return j;
    };
    ParametricPatch patch([jet](double s, double t) { return jet(s, t).p; }, jet,
                          Domain2{-kInf, kInf, -kInf, kInf});
    auto closed = [r](double s, double, const CanonicalConnection& conn) {
        const double a = s / r;
        const Vec3 tangent{-std::sin(a), std::cos(a), 0.0};
        // n = gamma' x w points inward for this counter-clockwise circle, and
        // the matching signed curvature is +1/r.
        const Vec3 normal{-std::cos(a), -std::sin(a), 0.0};
        const double cw = conn.C().z;
        const double ct = dot(tangent, conn.C());
        const double cn = dot(normal, conn.C());
        return 0.5 * (cw * cw + ct * ct - (1.0 / r) * cn);
    };
    return RegistryEntry{std::move(patch), Domain2{0.0, 2.0 * kPi * r, -1.0, 1.0}, "cylindrical",
                         closed, nullptr};
}

RegistryEntry make_rotational_entry(ProfileCurve profile, Domain2 window) {
    RotationalSurface surf(std::move(profile));
    ParametricPatch patch = surf.patch(-1.0, 2.0 * kPi + 1.0);
    auto closed = [surf](double s, double t, const CanonicalConnection& conn) {
        return rotational_K_general(surf, conn, s, t);
    };
    auto closed_axis = [surf](double s) { return rotational_K_axis_aligned(surf, s); };
    return RegistryEntry{std::move(patch), window, "rotational", closed, closed_axis};
}

RegistryEntry make_sphere(const std::map<std::string, double>& p) {
    const double r = p.at("r");
    require(r > 0.0, "surface 'sphere': r must be positive");
    auto jet = [r](double s) {
        const double a = s / r;
        ProfilePoint q;
        q.x = r * std::sin(a);
        q.z = -r * std::cos(a);
        q.xp = std::cos(a);
        q.zp = std::sin(a);
        q.xpp = -std::sin(a) / r;
        q.zpp = std::cos(a) / r;
        return q;
    };
    // The window keeps the poles: they are legitimate singular points of the
    // parametrisation and should surface as degenerate rows, not as errors.
    return make_rotational_entry(ProfileCurve(jet, 0.0, kPi * r),
                                 Domain2{0.0, kPi * r, 0.0, 2.0 * kPi});
}

RegistryEntry make_torus(const std::map<std::string, double>& p) {
    const double R = p.at("R"), r = p.at("r");
    require(r > 0.0, "surface 'torus': r must be positive");
    require(R - r >= 0.05, "surface 'torus': need R - r >= 0.05 to stay clear of the axis");
    return make_rotational_entry(circle_profile(R, 0.0, r),
                                 Domain2{0.0, 2.0 * kPi * r, 0.0, 2.0 * kPi});
}

RegistryEntry make_cone(const std::map<std::string, double>& p) {
    const double theta = p.at("theta"), c1 = p.at("c1"), c2 = p.at("c2");
    require(c1 - std::abs(std::cos(theta)) >= 0.05,
            "surface 'cone': profile line meets the rotation axis; increase c1");
    return make_rotational_entry(line_profile(c1, c2, theta, -1.0, 1.0),
                                 Domain2{-0.95, 0.95, 0.0, 2.0 * kPi});
}

RegistryEntry make_catenoid(const std::map<std::string, double>&) {
    auto jet = [](double s) {
        const double w2 = 1.0 + s * s;
        const double w = std::sqrt(w2);
        ProfilePoint q;
        q.x = w;
        q.z = std::asinh(s);
        q.xp = s / w;
        q.zp = 1.0 / w;
        q.xpp = 1.0 / (w2 * w);
        q.zpp = -s / (w2 * w);
        return q;
    };
    return make_rotational_entry(ProfileCurve(jet, -kInf, kInf),
                                 Domain2{-1.5, 1.5, 0.0, 2.0 * kPi});
}

RegistryEntry make_profile_cylinder(ProfileCurve profile) {
    CylinderSpec cyl(Vec3{0.0, 1.0, 0.0}, Vec3{1.0, 0.0, 0.0}, std::move(profile));
    const ProfileCurve& prof = cyl.profile();

    // Sampling window: inset a finite profile domain by 2%, clamp an
    // unbounded one to a unit-scale band.
    double lo = prof.s_min(), hi = prof.s_max();
    if (std::isfinite(lo) && std::isfinite(hi)) {
        const double inset = 0.02 * (hi - lo);
        lo += inset;
        hi -= inset;
    } else if (std::isfinite(lo)) {
        lo += 0.05 * std::max(1.0, std::abs(lo));
        hi = lo + 3.0;
    } else if (std::isfinite(hi)) {
        hi -= 0.05 * std::max(1.0, std::abs(hi));
        lo = hi - 3.0;
    } else {
        lo = -2.0;
        hi = 2.0;
    }
    Domain2 window{lo, hi, -1.0, 1.0};
    ParametricPatch patch = cyl.patch(-kInf, kInf);
    auto closed = [cyl](double s, double, const CanonicalConnection& conn) {
        return cylinder_K(cyl, conn, s);
    };
    return RegistryEntry{std::move(patch), window, "cylindrical", closed, nullptr};
}

RegistryEntry make_grim_reaper(const std::map<std::string, double>&) {
    return make_profile_cylinder(closed_form_curve_k_half());
}

RegistryEntry make_gen_cylinder(const std::map<std::string, double>& p) {
    return make_profile_cylinder(generating_curve(p.at("K")));
}

RegistryEntry make_log_cos_graph(const std::map<std::string, double>& p) {
    GraphSurface surf = solution_family(p.at("c"));
    double wx = 0, wy = 0;
    solution_family_halfwidths(p.at("c"), wx, wy);
    return RegistryEntry{surf.patch(), Domain2{-0.85 * wx, 0.85 * wx, -0.85 * wy, 0.85 * wy},
                         "graph", nullptr, nullptr};
}

RegistryEntry make_quadric_graph(const std::map<std::string, double>& p) {
    const double a = p.at("a"), b = p.at("b");
    GraphSurface surf(
        [a, b](double x, double y) {
            GraphJet2 j;
            j.u = a * x * x + b * y * y;
            j.ux = 2.0 * a * x;
            j.uy = 2.0 * b * y;
            j.uxx = 2.0 * a;
            j.uyy = 2.0 * b;
            return j;
        },
        Domain2{-2.0, 2.0, -2.0, 2.0});
    return RegistryEntry{surf.patch(), Domain2{-1.0, 1.0, -1.0, 1.0}, "graph", nullptr, nullptr};
}

struct Family {
    std::map<std::string, double> defaults;
    RegistryEntry (*build)(const std::map<std::string, double>&);
};

const std::map<std::string, Family>& families() {
    static const std::map<std::string, Family> table = {
        {"plane", {{}, make_plane}},
        {"cylinder", {{{"r", 1.0}}, make_round_cylinder}},
        {"sphere", {{{"r", 1.0}}, make_sphere}},
        {"torus", {{{"R", 2.0}, {"r", 0.5}}, make_torus}},
        {"cone", {{{"theta", 0.9}, {"c1", 2.0}, {"c2", 0.0}}, make_cone}},
        {"catenoid", {{}, make_catenoid}},
        {"grim_reaper_cylinder", {{}, make_grim_reaper}},
        {"gen_cylinder", {{{"K", 1.0}}, make_gen_cylinder}},
        {"log_cos_graph", {{{"c", 1.0}}, make_log_cos_graph}},
        {"quadric_graph", {{{"a", 1.0}, {"b", -1.0}}, make_quadric_graph}},
    };
    return table;
}

}  // namespace

SurfaceSpec parse_surface_spec(const std::string& text) {
    SurfaceSpec spec;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) throw std::invalid_argument("surface spec: empty name in '" + text + "'");
    if (colon == std::string::npos) return spec;

    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("surface spec: expected key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (value.empty() || end != value.c_str() + value.size()) {
            throw std::invalid_argument("surface spec: bad numeric value '" + value + "' for '" +
                                        key + "'");
        }
        if (!spec.params.emplace(key, v).second) {
            throw std::invalid_argument("surface spec: duplicate parameter '" + key + "'");
        }
        pos = comma + 1;
    }
    return spec;
}

std::string format_surface_spec(const SurfaceSpec& spec) {
    std::string out = spec.name;
    char sep = ':';
    for (const auto& [key, value] : spec.params) {
        out += sep;
        out += key;
        out += '=';
        out += format_param(value);
        sep = ',';
    }
    return out;
}

RegistryEntry make_surface(const SurfaceSpec& spec) {
    auto it = families().find(spec.name);
    if (it == families().end()) {
        std::string known;
        for (const auto& [name, fam] : families()) {
            (void)fam;
            known += known.empty() ? name : ", " + name;
        }
        throw std::invalid_argument("unknown surface '" + spec.name + "' (known: " + known + ")");
    }
    return it->second.build(merge_params(spec.name, it->second.defaults, spec.params));
}

std::vector<SurfaceSpec> registry_catalog() {
    std::vector<SurfaceSpec> out;
    for (const auto& [name, fam] : families()) out.push_back(SurfaceSpec{name, fam.defaults});
    return out;
}

}  // namespace snm
