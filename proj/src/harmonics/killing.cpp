#include "frameflow/harmonics/killing.hpp"

#include <cmath>
#include <stdexcept>

#include "frameflow/transitivity/tensors.hpp"

namespace frameflow::harmonics {

namespace {

// φ and ∇φ of the conformal factor.
double conformal_log(MetricModel model, const Vector& x, Vector& grad) {
  grad = Vector::Zero(x.size());
  if (model == MetricModel::flat) return 0.0;
  const double s = 1.0 - x.squaredNorm();
  if (s <= 0.0) throw std::invalid_argument("sample point outside the unit ball");
  grad = 2.0 * x / s;
  return std::log(2.0 / s);
}

Matrix derivative_of(const FormField& omega, const Vector& x, double h) {
  if (omega.derivative) return omega.derivative(x);
  const Vector c0 = omega.components(x);
  Matrix d(omega.n, c0.size());
  for (int a = 0; a < omega.n; ++a) {
    Vector e = Vector::Zero(omega.n);
    e(a) = h;
    d.row(a) = ((omega.components(x + e) - omega.components(x - e)) / (2.0 * h)).transpose();
  }
  return d;
}

}  // namespace

double killing_form_residual(const FormField& omega, MetricModel model, const std::vector<KillingSample>& samples,
                             double fd_step) {
  const int n = omega.n;
  const int r = omega.degree;
  if (n < 1 || r < 1) throw std::invalid_argument("form needs n >= 1 and degree >= 1");
  double worst = 0.0;
  for (const auto& s : samples) {
    if (s.point.size() != n || s.direction.size() != n) throw std::invalid_argument("sample dimension mismatch");
    Vector dphi;
    const double phi = conformal_log(model, s.point, dphi);
    const Vector v = s.direction.normalized() * std::exp(-phi);
    const Vector w = omega.components(s.point);
    const Matrix dw = derivative_of(omega, s.point, fd_step);

    // ∇_v ω = v^a ∂_a ω − Σ_slots Γ(v) acting on that slot, with
    // Γ(v)_{be} = v^a Γ^e_{ab} = v_e ∂_bφ + δ_be (v·∂φ) − v_b ∂_eφ.
    Vector nabla = dw.transpose() * v;
    const Matrix gamma_v =
        dphi * v.transpose() + v.dot(dphi) * Matrix::Identity(n, n) - v * dphi.transpose();
    for (int slot = 0; slot < r; ++slot) nabla -= transitivity::apply_on_mode(gamma_v, w, n, r, slot);

    // contract the first slot with v
    const Eigen::Index rest = nabla.size() / n;
    Vector t = Vector::Zero(rest);
    for (int b = 0; b < n; ++b) t += v(b) * nabla.segment(b * rest, rest);
    const double g_norm = t.norm() * std::exp(-(r - 1) * phi);
    worst = std::max(worst, g_norm);
  }
  return worst;
}

std::vector<KillingSample> random_samples(int n, int count, Rng& rng, double radius) {
  std::vector<KillingSample> out;
  for (int i = 0; i < count; ++i) {
    KillingSample s;
    s.point = Vector(n);
    s.direction = Vector(n);
    for (int a = 0; a < n; ++a) {
      s.point(a) = uniform(rng, -radius, radius);
      s.direction(a) = uniform(rng, -1.0, 1.0);
    }
    if (s.direction.norm() < 1e-3) s.direction(0) = 1.0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace frameflow::harmonics
