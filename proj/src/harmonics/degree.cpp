#include "frameflow/harmonics/degree.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "frameflow/errors.hpp"

namespace frameflow::harmonics {

double solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  // Van Oosterom–Strackee
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

DegreeResult topological_degree_s2(const SphereMap& xi, int mesh) {
  if (mesh < 64) throw std::invalid_argument("mesh must be at least 64");
  using V = Eigen::Vector3d;
  // octahedron faces, counterclockwise seen from outside
  const std::array<V, 6> corner = {V(1, 0, 0), V(-1, 0, 0), V(0, 1, 0), V(0, -1, 0), V(0, 0, 1), V(0, 0, -1)};
  const std::array<std::array<int, 3>, 8> faces = {{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                                    {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}}};
  double total = 0.0;
  std::vector<V> img(static_cast<std::size_t>((mesh + 1) * (mesh + 2) / 2));
  for (const auto& f : faces) {
    const V& p0 = corner[static_cast<std::size_t>(f[0])];
    const V& p1 = corner[static_cast<std::size_t>(f[1])];
    const V& p2 = corner[static_cast<std::size_t>(f[2])];
    // barycentric grid: vertex (i, j) = p0 + i/mesh (p1−p0) + j/mesh (p2−p0), i + j ≤ mesh
    auto at = [mesh](int i, int j) { return static_cast<std::size_t>(i * (mesh + 1) - i * (i - 1) / 2 + j); };
    for (int i = 0; i <= mesh; ++i) {
      for (int j = 0; i + j <= mesh; ++j) {
        const V x = (p0 + (p1 - p0) * (static_cast<double>(i) / mesh) + (p2 - p0) * (static_cast<double>(j) / mesh))
                        .normalized();
        const V y = xi(x);
        const double ny = y.norm();
        if (!(ny > 0.0) || !std::isfinite(ny)) throw NumericalError("map leaves the sphere");
        img[at(i, j)] = y / ny;
      }
    }
    for (int i = 0; i < mesh; ++i) {
      for (int j = 0; i + j < mesh; ++j) {
        total += solid_angle(img[at(i, j)], img[at(i + 1, j)], img[at(i, j + 1)]);
        if (i + j + 1 < mesh) total += solid_angle(img[at(i + 1, j)], img[at(i + 1, j + 1)], img[at(i, j + 1)]);
      }
    }
  }
  DegreeResult r;
  r.raw = total / (4.0 * M_PI);
  r.degree = static_cast<int>(std::lround(r.raw));
  r.residual = std::abs(r.raw - r.degree);
  if (r.residual >= 0.05) throw NumericalError("underresolved or discontinuous map");
  return r;
}

}  // namespace frameflow::harmonics
