#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "snm/connection.hpp"
#include "snm/patch.hpp"

namespace snm {

/// Textual surface description: a family name plus keyed real parameters.
/// Round-trips exactly through format/parse ("torus:R=2,r=0.5").
struct SurfaceSpec {
    std::string name;
    std::map<std::string, double> params;

    bool operator==(const SurfaceSpec&) const = default;
};

SurfaceSpec parse_surface_spec(const std::string& text);
std::string format_surface_spec(const SurfaceSpec& spec);

/// Instantiated catalog surface. `window` is the recommended sampling
/// rectangle: it sits strictly inside the patch domain so that
/// finite-difference stencils never leave it. `closed_form_K` is a direct
/// curvature formula (independent of the jet pipeline) when the family has
/// one, otherwise empty.
struct RegistryEntry {
    ParametricPatch patch;
    Domain2 window;
    std::string family;  ///< plane | cylindrical | rotational | graph
    std::function<double(double s, double t, const CanonicalConnection&)> closed_form_K;
    /// Axis-aligned rotational closed form (C = dz); empty for other families.
    std::function<double(double s)> closed_form_K_axis;
};

/// Builds a surface from its spec. Throws std::invalid_argument for unknown
/// names, unknown parameter keys, or out-of-range parameter values.
RegistryEntry make_surface(const SurfaceSpec& spec);

/// Names accepted by make_surface, with their default parameters.
std::vector<SurfaceSpec> registry_catalog();

}  // namespace snm
