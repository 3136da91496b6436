#pragma once

#include <cmath>
#include <stdexcept>

namespace snm {

/// Point or vector in Euclidean 3-space.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double k, const Vec3& a) { return {k * a.x, k * a.y, k * a.z}; }
inline Vec3 operator*(const Vec3& a, double k) { return k * a; }
inline Vec3 operator/(const Vec3& a, double k) { return {a.x / k, a.y / k, a.z / k}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }
inline Vec3& operator-=(Vec3& a, const Vec3& b) { a = a - b; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Determinant of the matrix with rows a, b, c; equals dot(cross(a,b), c).
inline double det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Unit vector in the direction of a; throws on (near-)zero input.
inline Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (n < 1e-14) throw std::invalid_argument("normalized: zero-length vector");
    return a / n;
}

}  // namespace snm
