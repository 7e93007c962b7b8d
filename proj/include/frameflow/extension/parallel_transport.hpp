#pragma once

#include <vector>

#include "frameflow/base/disk.hpp"

namespace frameflow::extension {

/// Tangent vector of the disk in hyperbolic-orthonormal components: the
/// Euclidean direction of `w` is the direction of the vector and |w| is its
/// hyperbolic length.
struct DiskTangent {
  base::DiskPoint base;
  base::Complex w;
};

/// Rotation angle accumulated by Levi-Civita transport along the piecewise
/// geodesic through the samples (not reduced mod 2π). For a counterclockwise
/// simple loop this equals minus the enclosed area.
///
/// Throws std::invalid_argument when two consecutive samples are further
/// apart than `max_step` in the hyperbolic metric.
double transport_angle(const std::vector<base::DiskPoint>& curve, double max_step = 1e-2);

/// Transport v0 from curve.front() to curve.back().
DiskTangent parallel_transport_disk(const std::vector<base::DiskPoint>& curve, base::Complex v0,
                                    double max_step = 1e-2);

/// Closed piecewise-geodesic loop through the vertices, back to the first,
/// sampled with spacing at most max_step.
std::vector<base::DiskPoint> geodesic_polygon(const std::vector<base::Complex>& vertices, double max_step);

/// Interior angles of the geodesic polygon.
std::vector<double> polygon_angles(const std::vector<base::Complex>& vertices);

/// Hyperbolic area of a geodesic triangle, π − (sum of angles).
double triangle_area(base::Complex a, base::Complex b, base::Complex c);

}  // namespace frameflow::extension
