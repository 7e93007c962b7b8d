#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace frameflow::base {

using Complex = std::complex<double>;

/// Point of the Poincaré disk, |z| < 1.
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex z);
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  Complex z() const { return z_; }

 private:
  Complex z_{0.0, 0.0};
};

/// Unit tangent vector: base point plus direction angle in [0, 2π).
class UnitTangent {
 public:
  UnitTangent() = default;
  UnitTangent(DiskPoint base, double angle);

  const DiskPoint& base() const { return base_; }
  Complex z() const { return base_.z(); }
  double angle() const { return angle_; }

 private:
  DiskPoint base_;
  double angle_ = 0.0;
};

double wrap_angle(double a);
/// Signed difference a − b reduced to (−π, π].
double angle_difference(double a, double b);

/// Orientation-preserving isometry z ↦ (a z + b)/(conj(b) z + conj(a)),
/// stored as the SU(1,1) matrix [[a, b], [conj b, conj a]].
class MobiusIsometry {
 public:
  /// Checks det = 1 within 1e−12 and that the boundary circle is preserved.
  MobiusIsometry(Complex a, Complex b);
  static MobiusIsometry identity() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }
  /// Hyperbolic translation by distance d along the geodesic through 0 with direction phi.
  static MobiusIsometry translation(double phi, double d);
  /// Rotation about the origin by angle phi.
  static MobiusIsometry rotation(double phi);
  /// The isometry taking 0 to z with derivative direction `angle` at 0.
  static MobiusIsometry frame(const UnitTangent& s);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  Complex apply(Complex z) const;
  DiskPoint apply(const DiskPoint& p) const { return DiskPoint(apply(p.z())); }
  UnitTangent apply(const UnitTangent& s) const;
  MobiusIsometry operator*(const MobiusIsometry& o) const;
  MobiusIsometry inverse() const { return unchecked(std::conj(a_), -b_); }

  /// min over ±1 of the max entry difference, since ±M act identically.
  double distance(const MobiusIsometry& o) const;

  static MobiusIsometry unchecked(Complex a, Complex b);

 private:
  struct NoCheck {};
  MobiusIsometry(Complex a, Complex b, NoCheck) : a_(a), b_(b) {}
  Complex a_;
  Complex b_;
};

/// Exact time-t geodesic flow in curvature −1: the frame g is moved to g·A_t
/// with A_t = [[cosh t/2, sinh t/2], [sinh t/2, cosh t/2]].
UnitTangent geodesic_flow(const UnitTangent& s, double t);

double hyperbolic_distance(Complex z, Complex w);
double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q);

/// Direction at z of the geodesic heading to w.
double direction_to(Complex z, Complex w);

/// `samples` + 1 points on the geodesic from s.base(), spaced length/samples.
std::vector<DiskPoint> sample_geodesic(const UnitTangent& s, double length, int samples);
/// Points on the geodesic segment [z, w] with hyperbolic spacing at most max_step.
std::vector<DiskPoint> geodesic_segment(Complex z, Complex w, double max_step);

/// Regular hyperbolic octagon with interior angles π/4 and its side pairings.
///
/// Side k is the geodesic orthogonal to the ray at angle kπ/4 at hyperbolic
/// distance ρ from 0, cosh ρ = cot(π/8). Generator k translates by 2ρ along
/// that ray and carries side k+4 onto side k; generator k+4 is its inverse.
class FuchsianDomain {
 public:
  static FuchsianDomain regular_octagon();

  const std::vector<MobiusIsometry>& generators() const { return generators_; }
  /// pairing_table()[k] = side mapped onto side k by generator k.
  const std::vector<int>& pairing_table() const { return pairing_; }
  /// Generator order whose product is ±I.
  const std::vector<int>& relation() const { return relation_; }
  const std::vector<Complex>& vertices() const { return vertices_; }

  /// Euclidean circle of side k: center and radius.
  std::pair<Complex, double> side_circle(int k) const;
  /// Positive when z lies beyond side k, by (radius − |z − center|).
  double side_violation(Complex z, int k) const;
  bool contains(Complex z, double tol = 1e-12) const;

  double inradius() const { return inradius_; }

  /// Max over sides k of the displacement of the two endpoints of side
  /// pairing_table()[k] from side k's endpoints under generator k.
  double pairing_residual() const;
  /// Distance of the ordered relation product from ±I.
  double relation_residual() const;

 private:
  std::vector<MobiusIsometry> generators_;
  std::vector<int> pairing_;
  std::vector<int> relation_;
  std::vector<Complex> vertices_;  // vertex k sits between sides k and k+1
  std::vector<Complex> centers_;
  double radius_ = 0.0;
  double inradius_ = 0.0;
};

struct Reduction {
  UnitTangent state;
  MobiusIsometry element = MobiusIsometry::identity();  // element.apply(state) = input
  int pairings = 0;
};

/// Greedy reduction: repeatedly undo the side pairing of the most violated side.
/// Throws NumericalError after `max_iterations` pairings.
Reduction reduce_to_domain(const UnitTangent& s, const FuchsianDomain& dom, int max_iterations = 64);

}  // namespace frameflow::base
