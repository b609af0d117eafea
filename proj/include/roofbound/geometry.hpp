#pragma once

#include "roofbound/linalg.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace roofbound {

/// One zero of the invariant as a point of the Bloch disc section:
/// p = 1/(1+|z|^2), Z = p z, so |Z| = sqrt(p(1-p)) <= 1/2.
struct AxisPoint {
    cplx Z;
    double p = 0.0;
};

struct AxisInterval {
    double p_min = 0.0, p_max = 0.0;
    std::vector<double> witness_min, witness_max;  // convex weights over the input points
};

/// Exact range of Sum mu_j p_j over convex weights mu with Sum mu_j Z_j = 0.
/// Enumerates every support of size <= 3 (the basic feasible solutions of the
/// three-constraint LP); empty when the origin lies outside the hull of Z.
std::optional<AxisInterval> axis_interval(std::span<const AxisPoint> points);

/// Largest convex minorant of the samples, evaluated at the same abscissae.
/// Input p must be strictly increasing (UnsortedInput otherwise).
std::vector<std::pair<double, double>>
lower_convex_envelope(std::span<const std::pair<double, double>> samples);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

struct HullProjection {
    Vec3 point;                   // closest point of the hull
    double dist = 0.0;
    std::vector<double> weights;  // convex weights over all vertices
};

/// Closest point of conv(verts) to x, by exact enumeration of vertex subsets
/// (at most 4 vertices arise here: the D <= 4 zero states).
HullProjection closest_point_on_hull(const Vec3& x, std::span<const Vec3> verts);

} // namespace roofbound
