#include "frameflow/extension/parallel_transport.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace frameflow::extension {

using base::Complex;

namespace {

// Gauss–Legendre 5-point nodes and weights on [−1, 1].
constexpr std::array<double, 5> kNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                          0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kWeights = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                            0.4786286704993665, 0.2369268850561891};

// Rotation of the transported vector over the geodesic arc from z0 to z1.
// With V' = −2 z̄ ż V/(1−|z|²), the orthonormal components rotate at rate
// −2 Im(z̄ ż)/(1−|z|²) per unit parameter.
double arc_rotation(Complex z0, Complex z1) {
  const double len = base::hyperbolic_distance(z0, z1);
  if (len == 0.0) return 0.0;
  const Complex dir = std::polar(1.0, std::arg((z1 - z0) / (1.0 - std::conj(z0) * z1)));
  double total = 0.0;
  for (std::size_t q = 0; q < kNodes.size(); ++q) {
    const double s = 0.5 * len * (kNodes[q] + 1.0);
    const Complex u = std::tanh(s / 2.0) * dir;
    const Complex du = 0.5 / (std::cosh(s / 2.0) * std::cosh(s / 2.0)) * dir;
    const Complex denom = 1.0 + std::conj(z0) * u;
    const Complex z = (u + z0) / denom;
    const Complex dz = (1.0 - std::norm(z0)) / (denom * denom) * du;
    total += kWeights[q] * (-2.0 * std::imag(std::conj(z) * dz) / (1.0 - std::norm(z)));
  }
  return 0.5 * len * total;
}

}  // namespace

double transport_angle(const std::vector<base::DiskPoint>& curve, double max_step) {
  double angle = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const Complex z0 = curve[i - 1].z();
    const Complex z1 = curve[i].z();
    if (base::hyperbolic_distance(z0, z1) > max_step) {
      throw std::invalid_argument("curve sampling too coarse for parallel transport");
    }
    angle += arc_rotation(z0, z1);
  }
  return angle;
}

DiskTangent parallel_transport_disk(const std::vector<base::DiskPoint>& curve, Complex v0, double max_step) {
  if (curve.empty()) throw std::invalid_argument("empty curve");
  const double angle = transport_angle(curve, max_step);
  return {curve.back(), v0 * std::polar(1.0, angle)};
}

std::vector<base::DiskPoint> geodesic_polygon(const std::vector<Complex>& vertices, double max_step) {
  if (vertices.size() < 2) throw std::invalid_argument("polygon needs at least two vertices");
  std::vector<base::DiskPoint> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto seg = base::geodesic_segment(vertices[i], vertices[(i + 1) % vertices.size()], max_step);
    out.insert(out.end(), out.empty() ? seg.begin() : seg.begin() + 1, seg.end());
  }
  return out;
}

std::vector<double> polygon_angles(const std::vector<Complex>& vertices) {
  const std::size_t n = vertices.size();
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex v = vertices[i];
    const double to_next = base::direction_to(v, vertices[(i + 1) % n]);
    const double to_prev = base::direction_to(v, vertices[(i + n - 1) % n]);
    out.push_back(std::abs(base::angle_difference(to_next, to_prev)));
  }
  return out;
}

double triangle_area(Complex a, Complex b, Complex c) {
  const auto ang = polygon_angles({a, b, c});
  return M_PI - (ang[0] + ang[1] + ang[2]);
}

}  // namespace frameflow::extension
