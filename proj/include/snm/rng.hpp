#pragma once

#include <cstdint>
#include <random>

#include "snm/vec3.hpp"

namespace snm {

/// Deterministic random source. All draws go through an explicit 64-bit
/// mapping so that streams are reproducible bit-for-bit across platforms
/// and standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double canonical() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

    /// Uniformly distributed unit vector (area measure on the sphere).
    Vec3 unit_vector() {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 6.283185307179586476925286766559);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

    Vec3 vector_in_box(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    /// Two independent directions spanning a genuinely 2-dimensional plane
    /// (the pair is rejected until its parallelogram is well-conditioned).
    void plane_basis(Vec3& u, Vec3& v) {
        for (;;) {
            u = vector_in_box(-1.0, 1.0);
            v = vector_in_box(-1.0, 1.0);
            const double nu = norm(u), nv = norm(v);
            if (nu < 0.1 || nv < 0.1) continue;
            if (norm(cross(u, v)) > 0.2 * nu * nv) return;
        }
    }

    /// Right-handed orthonormal frame (u, v, w).
    void orthonormal_frame(Vec3& u, Vec3& v, Vec3& w) {
        u = unit_vector();
        for (;;) {
            const Vec3 h = unit_vector();
            const Vec3 t = h - dot(h, u) * u;
            if (norm(t) > 0.2) {
                v = normalized(t);
                break;
            }
        }
        w = cross(u, v);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace snm
