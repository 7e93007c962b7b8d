#include "frameflow/base/disk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frameflow/errors.hpp"

namespace frameflow::base {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

UnitTangent from_frame(Complex a, Complex b) {
  return {DiskPoint(b / std::conj(a)), 2.0 * std::arg(a)};
}

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("non-finite disk point");
  }
  if (std::abs(z) >= 1.0) throw std::invalid_argument("disk point must satisfy |z| < 1");
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_difference(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -M_PI) d += kTwoPi;
  return d;
}

UnitTangent::UnitTangent(DiskPoint base, double angle) : base_(base), angle_(wrap_angle(angle)) {
  if (!std::isfinite(angle)) throw std::invalid_argument("non-finite angle");
}

MobiusIsometry::MobiusIsometry(Complex a, Complex b) : a_(a), b_(b) {
  const double det = std::norm(a) - std::norm(b);
  if (std::abs(det - 1.0) > 1e-12 * std::max(1.0, std::norm(a))) {
    throw std::invalid_argument("isometry must have unit determinant");
  }
  for (int j = 0; j < 4; ++j) {
    const Complex w = std::polar(1.0, j * M_PI / 2.0 + 0.3);
    if (std::abs(std::abs(apply(w)) - 1.0) > 1e-10) {
      throw std::invalid_argument("isometry does not preserve the unit circle");
    }
  }
}

MobiusIsometry MobiusIsometry::unchecked(Complex a, Complex b) { return {a, b, NoCheck{}}; }

MobiusIsometry MobiusIsometry::translation(double phi, double d) {
  // R_phi · A_d · R_{−phi} with R_phi = diag(e^{iφ/2}, e^{−iφ/2})
  return unchecked(Complex(std::cosh(d / 2.0), 0.0), std::polar(std::sinh(d / 2.0), phi));
}

MobiusIsometry MobiusIsometry::rotation(double phi) {
  return unchecked(std::polar(1.0, phi / 2.0), Complex(0.0, 0.0));
}

MobiusIsometry MobiusIsometry::frame(const UnitTangent& s) {
  const Complex z = s.z();
  const Complex a = std::polar(1.0 / std::sqrt(1.0 - std::norm(z)), s.angle() / 2.0);
  return unchecked(a, z * std::conj(a));
}

Complex MobiusIsometry::apply(Complex z) const {
  return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

UnitTangent MobiusIsometry::apply(const UnitTangent& s) const {
  const MobiusIsometry g = (*this) * frame(s);
  return from_frame(g.a_, g.b_);
}

MobiusIsometry MobiusIsometry::operator*(const MobiusIsometry& o) const {
  // [[a, b], [b̄, ā]]·[[c, d], [d̄, c̄]]
  return unchecked(a_ * o.a_ + b_ * std::conj(o.b_), a_ * o.b_ + b_ * std::conj(o.a_));
}

double MobiusIsometry::distance(const MobiusIsometry& o) const {
  const double plus = std::max(std::abs(a_ - o.a_), std::abs(b_ - o.b_));
  const double minus = std::max(std::abs(a_ + o.a_), std::abs(b_ + o.b_));
  return std::min(plus, minus);
}

UnitTangent geodesic_flow(const UnitTangent& s, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("flow time must be finite");
  if (t == 0.0) return s;
  const MobiusIsometry g = MobiusIsometry::frame(s);
  const double c = std::cosh(t / 2.0);
  const double sh = std::sinh(t / 2.0);
  // g·A_t, first row
  const Complex a = g.a() * c + g.b() * sh;
  const Complex b = g.a() * sh + g.b() * c;
  return from_frame(a, b);
}

double hyperbolic_distance(Complex z, Complex w) {
  const double ratio = std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
  return 2.0 * std::atanh(std::min(ratio, 1.0));
}

double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q) {
  return hyperbolic_distance(p.z(), q.z());
}

double direction_to(Complex z, Complex w) {
  return wrap_angle(std::arg((w - z) / (1.0 - std::conj(z) * w)));
}

std::vector<DiskPoint> sample_geodesic(const UnitTangent& s, double length, int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  std::vector<DiskPoint> out;
  out.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) out.push_back(geodesic_flow(s, length * i / samples).base());
  return out;
}

std::vector<DiskPoint> geodesic_segment(Complex z, Complex w, double max_step) {
  if (!(max_step > 0)) throw std::invalid_argument("max_step must be positive");
  const double len = hyperbolic_distance(z, w);
  const int n = std::max(1, static_cast<int>(std::ceil(len / max_step)));
  return sample_geodesic(UnitTangent(DiskPoint(z), direction_to(z, w)), len, n);
}

FuchsianDomain FuchsianDomain::regular_octagon() {
  FuchsianDomain d;
  const double cot = 1.0 / std::tan(M_PI / 8.0);
  d.inradius_ = std::acosh(cot);
  const double s = std::tanh(d.inradius_ / 2.0);
  const double center = 0.5 * (s + 1.0 / s);
  d.radius_ = 0.5 * (1.0 / s - s);
  const double vertex_radius = std::tanh(std::acosh(cot * cot) / 2.0);
  for (int k = 0; k < 8; ++k) {
    const double phi = k * M_PI / 4.0;
    d.generators_.push_back(MobiusIsometry::translation(phi, 2.0 * d.inradius_));
    d.pairing_.push_back((k + 4) % 8);
    d.centers_.push_back(std::polar(center, phi));
    d.vertices_.push_back(std::polar(vertex_radius, phi + M_PI / 8.0));
  }
  d.relation_ = {0, 3, 6, 1, 4, 7, 2, 5};
  return d;
}

std::pair<Complex, double> FuchsianDomain::side_circle(int k) const {
  return {centers_.at(static_cast<std::size_t>(k)), radius_};
}

double FuchsianDomain::side_violation(Complex z, int k) const {
  return radius_ - std::abs(z - centers_[static_cast<std::size_t>(k)]);
}

bool FuchsianDomain::contains(Complex z, double tol) const {
  for (int k = 0; k < 8; ++k) {
    if (side_violation(z, k) > tol) return false;
  }
  return true;
}

double FuchsianDomain::pairing_residual() const {
  // side k runs from vertex k−1 to vertex k; orientation reverses under the pairing
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const int src = pairing_[static_cast<std::size_t>(k)];
    const Complex p0 = vertices_[static_cast<std::size_t>((src + 7) % 8)];
    const Complex p1 = vertices_[static_cast<std::size_t>(src)];
    const Complex q0 = vertices_[static_cast<std::size_t>((k + 7) % 8)];
    const Complex q1 = vertices_[static_cast<std::size_t>(k)];
    const Complex i0 = generators_[static_cast<std::size_t>(k)].apply(p0);
    const Complex i1 = generators_[static_cast<std::size_t>(k)].apply(p1);
    const double direct = std::max(std::abs(i0 - q0), std::abs(i1 - q1));
    const double swapped = std::max(std::abs(i0 - q1), std::abs(i1 - q0));
    worst = std::max(worst, std::min(direct, swapped));
  }
  return worst;
}

double FuchsianDomain::relation_residual() const {
  MobiusIsometry prod = MobiusIsometry::identity();
  for (int k : relation_) prod = prod * generators_[static_cast<std::size_t>(k)];
  return prod.distance(MobiusIsometry::identity());
}

Reduction reduce_to_domain(const UnitTangent& s, const FuchsianDomain& dom, int max_iterations) {
  constexpr double kBoundaryTol = 1e-12;
  Reduction r;
  r.state = s;
  const auto& gens = dom.generators();
  while (true) {
    int worst = -1;
    double worst_violation = kBoundaryTol;
    for (int k = 0; k < 8; ++k) {
      const double v = dom.side_violation(r.state.z(), k);
      if (v > worst_violation) {
        worst_violation = v;
        worst = k;
      }
    }
    if (worst < 0) return r;
    if (r.pairings >= max_iterations) {
      throw NumericalError("fundamental domain reduction did not terminate");
    }
    const auto inv = static_cast<std::size_t>((worst + 4) % 8);
    r.state = gens[inv].apply(r.state);
    r.element = r.element * gens[static_cast<std::size_t>(worst)];
    ++r.pairings;
  }
}

}  // namespace frameflow::base
