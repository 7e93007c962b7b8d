#pragma once

#include <functional>

#include <Eigen/Dense>

namespace frameflow::harmonics {

using SphereMap = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

struct DegreeResult {
  int degree = 0;
  double raw = 0.0;       // signed image area / 4π before rounding
  double residual = 0.0;  // |raw − degree|
};

/// Degree of a map S² → S²: each face of an octahedron with `mesh`
/// subdivisions per edge is mapped to the spherical triangle through the
/// images of its corners, and the signed solid angles are summed.
/// Throws std::invalid_argument for mesh < 64 and NumericalError
/// ("underresolved or discontinuous map") when the residual is ≥ 0.05.
DegreeResult topological_degree_s2(const SphereMap& xi, int mesh);

/// Signed solid angle of the spherical triangle (a, b, c), unit vectors.
double solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c);

}  // namespace frameflow::harmonics
