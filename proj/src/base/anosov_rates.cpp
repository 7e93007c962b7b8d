#include "frameflow/base/anosov_rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frameflow/base/disk.hpp"

namespace frameflow::base {

namespace {

constexpr int kBurnIn = 40;
constexpr int kMeasured = 20;
constexpr int kConstantHorizon = 10;

// Mean log growth per step of a renormalized tangent vector under m.
double tangent_rate(const Eigen::Matrix2d& m, Eigen::Vector2d v) {
  v.normalize();
  for (int i = 0; i < kBurnIn; ++i) v = (m * v).normalized();
  double sum = 0.0;
  for (int i = 0; i < kMeasured; ++i) {
    const Eigen::Vector2d w = m * v;
    sum += std::log(w.norm());
    v = w.normalized();
  }
  return sum / kMeasured;
}

// sup_n ‖m^n v‖ / (e^{−λn}‖v‖) over n ≤ kConstantHorizon, for contracting m on v.
double contraction_constant(const Eigen::Matrix2d& m, const Eigen::Vector2d& v, double lambda) {
  double worst = 1.0;
  Eigen::Vector2d w = v.normalized();
  for (int n = 1; n <= kConstantHorizon; ++n) {
    w = m * w;
    worst = std::max(worst, w.norm() / std::exp(-lambda * n));
  }
  return worst;
}

}  // namespace

AnosovRates anosov_rate_check(const ToralAutomorphism& a, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  const Eigen::Matrix2d fwd = a.matrix_d();
  const Eigen::Matrix2d bwd = a.inverse_d();
  double total = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double theta = M_PI * (i + 0.5) / n_samples + 0.1;
    const Eigen::Vector2d v(std::cos(theta), std::sin(theta));
    total += 0.5 * (tangent_rate(fwd, v) + tangent_rate(bwd, v));
  }
  AnosovRates out;
  out.lambda_est = total / n_samples;
  out.c_est = std::max(contraction_constant(fwd, a.stable_dir(), out.lambda_est),
                       contraction_constant(bwd, a.unstable_dir(), out.lambda_est));
  return out;
}

AnosovRates anosov_rate_check(const DiskFlowModel& model, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  if (!(model.horizon > 0) || !(model.epsilon > 0)) {
    throw std::invalid_argument("horizon and epsilon must be positive");
  }
  const double eps = model.epsilon;
  // exp(εX) and exp(εY) for the nilpotent horocycle generators
  // X = [[i, i], [−i, −i]] (unstable) and Y = [[i, −i], [i, −i]] (stable).
  const auto unstable_push = MobiusIsometry::unchecked({1.0, eps}, {0.0, eps});
  const auto stable_push = MobiusIsometry::unchecked({1.0, eps}, {0.0, -eps});
  constexpr int kSteps = 10;

  double rate_sum = 0.0;
  double c_est = 1.0;
  for (int i = 0; i < n_samples; ++i) {
    const double r = 0.4 * (i + 1) / n_samples;
    const UnitTangent s(DiskPoint(std::polar(r, 2.4 * i)), 1.7 * i);
    const MobiusIsometry g = MobiusIsometry::frame(s);
    const auto frame_state = [](const MobiusIsometry& h) {
      return h.apply(UnitTangent(DiskPoint(0.0, 0.0), 0.0));
    };
    const UnitTangent su = frame_state(g * unstable_push);
    const UnitTangent ss = frame_state(g * stable_push);
    const double du0 = hyperbolic_distance(s.base(), su.base());
    const double ds0 = hyperbolic_distance(s.base(), ss.base());
    double du = du0;
    double ds = ds0;
    for (int k = 1; k <= kSteps; ++k) {
      const double t = model.horizon * k / kSteps;
      const UnitTangent base_t = geodesic_flow(s, t);
      du = hyperbolic_distance(base_t.base(), geodesic_flow(su, t).base());
      ds = hyperbolic_distance(base_t.base(), geodesic_flow(ss, t).base());
      c_est = std::max({c_est, ds / (ds0 * std::exp(-t)), du0 / (du * std::exp(-t))});
    }
    const double lambda_u = std::log(du / du0) / model.horizon;
    const double lambda_s = -std::log(ds / ds0) / model.horizon;
    rate_sum += 0.5 * (lambda_u + lambda_s);
  }
  return {c_est, rate_sum / n_samples};
}

}  // namespace frameflow::base
