#include "snm/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace snm {

Vec3 torsion(const Vec3& X, const Vec3& Y, const CanonicalConnection& conn) {
    const Vec3& c = conn.C();
    return dot(c, Y) * X - dot(c, X) * Y;
}

double ambient_sectional_curvature(const PlaneSection& plane, const CanonicalConnection& conn) {
    const Vec3& u = plane.u;
    const Vec3& v = plane.v;
    const Vec3 w = cross(u, v);
    // |u x v|^2 = |u|^2 |v|^2 - <u,v>^2, so this rejects the same degenerate
    // bases as a Gram-determinant test would.
    if (norm2(w) <= 1e-12 * std::max(1.0, norm2(u) * norm2(v)))
        throw std::invalid_argument("ambient_sectional_curvature: degenerate plane basis");
    // Evaluate through the unit normal of the plane instead of the rational
    // general-basis expression: the latter cancels catastrophically for nearly
    // parallel bases, while the normal depends only on the plane itself.
    const double cn = dot(normalized(w), conn.C());
    return 0.5 * (1.0 - cn * cn);
}

double scalar_curvature(const Vec3& u, const Vec3& v, const Vec3& w,
                        const CanonicalConnection& conn) {
    constexpr double tol = 1e-8;
    const bool unit = std::abs(norm2(u) - 1.0) < tol && std::abs(norm2(v) - 1.0) < tol &&
                      std::abs(norm2(w) - 1.0) < tol;
    const bool orth = std::abs(dot(u, v)) < tol && std::abs(dot(u, w)) < tol &&
                      std::abs(dot(v, w)) < tol;
    if (!unit || !orth) throw std::invalid_argument("scalar_curvature: frame is not orthonormal");
    // Sum of the sectional curvatures over the three coordinate planes of the
    // frame; equals |C|^2 = 1 for every orthonormal frame.
    return ambient_sectional_curvature({u, v}, conn) + ambient_sectional_curvature({u, w}, conn) +
           ambient_sectional_curvature({v, w}, conn);
}

CurvatureReport surface_sectional_curvature(const ClassicalCurvatures& curv,
                                            const PlaneSection& tangent,
                                            const CanonicalConnection& conn) {
    CurvatureReport r;
    r.K_tilde = ambient_sectional_curvature(tangent, conn);
    r.G = curv.G;
    r.H = curv.H;
    r.C_dot_N = dot(conn.C(), curv.N);
    r.K = r.K_tilde + r.G - r.C_dot_N * r.H;
    return r;
}

CurvatureReport curvature_report(const ParametricPatch& patch, double s, double t,
                                 const CanonicalConnection& conn, JetMethod method, double step) {
    const SurfaceJet2 j = jet2(patch, s, t, method, step);
    const ClassicalCurvatures curv = classical_curvatures(fundamental_forms(j));
    return surface_sectional_curvature(curv, PlaneSection{j.ps, j.pt}, conn);
}

}  // namespace snm
