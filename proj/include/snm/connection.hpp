#pragma once

#include "snm/forms.hpp"
#include "snm/patch.hpp"
#include "snm/vec3.hpp"

namespace snm {

/// The canonical semi-symmetric non-metric connection on R^3 determined by a
/// unit direction C:  D_X Y = D0_X Y + <C, Y> X  (D0 the flat derivative).
class CanonicalConnection {
public:
    /// Normalises `direction`; throws std::invalid_argument on a zero vector.
    explicit CanonicalConnection(const Vec3& direction) : c_(normalized(direction)) {}
    const Vec3& C() const { return c_; }

private:
    Vec3 c_;
};

/// Plane through the origin spanned by u, v (any basis, not necessarily
/// orthonormal).
struct PlaneSection {
    Vec3 u, v;
};

struct CurvatureReport {
    double K_tilde = 0;  ///< ambient sectional curvature of the tangent plane
    double G = 0;        ///< Gauss curvature
    double H = 0;        ///< mean curvature
    double C_dot_N = 0;  ///< <C, N>
    double K = 0;        ///< surface sectional curvature: K_tilde + G - <C,N> H
};

/// Torsion T(X, Y) = <C, Y> X - <C, X> Y of the connection.
Vec3 torsion(const Vec3& X, const Vec3& Y, const CanonicalConnection& conn);

/// Sectional curvature of the plane section for the canonical connection,
/// using the symmetrised second-order expression; independent of the chosen
/// basis of the plane. Throws std::invalid_argument on a degenerate basis.
double ambient_sectional_curvature(const PlaneSection& plane, const CanonicalConnection& conn);

/// Scalar curvature evaluated on an orthonormal frame (u, v, w); equals
/// |C|^2 = 1 identically. Throws std::invalid_argument when the frame is not
/// orthonormal within 1e-8.
double scalar_curvature(const Vec3& u, const Vec3& v, const Vec3& w,
                        const CanonicalConnection& conn);

/// Curvature data of a surface point from its classical invariants and the
/// tangent section.
CurvatureReport surface_sectional_curvature(const ClassicalCurvatures& curv,
                                            const PlaneSection& tangent,
                                            const CanonicalConnection& conn);

/// Full pipeline at a parameter point: jets -> fundamental forms -> classical
/// curvatures -> sectional curvature of the tangent plane.
CurvatureReport curvature_report(const ParametricPatch& patch, double s, double t,
                                 const CanonicalConnection& conn,
                                 JetMethod method = JetMethod::Auto, double step = 0.0);

}  // namespace snm
