#include "frameflow/extension/extension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frameflow::extension {

namespace {

void check_fiber(const Rotation& r, const Cocycle& c) {
  if (r.dim() != c.dim()) throw std::invalid_argument("fiber dimension does not match cocycle");
}

template <class State>
void count_multiplication(State& s, const StepOptions& opt) {
  if (++s.since_reortho >= opt.reortho_every) {
    s.fiber = s.fiber.reorthonormalized();
    s.since_reortho = 0;
  }
}

}  // namespace

TorusState step_extension(const TorusState& s, const Cocycle& c, const base::ToralAutomorphism& a, int n,
                          const StepOptions& opt) {
  if (c.kind() != CocycleKind::discrete) {
    throw std::invalid_argument("continuous cocycle cannot drive a discrete extension");
  }
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  check_fiber(s.fiber, c);
  TorusState out = s;
  for (int i = 0; i < n; ++i) {
    out.fiber = c(out.base) * out.fiber;
    out.base = base::cat_step(out.base, a);
    count_multiplication(out, opt);
  }
  return out;
}

FlowState step_extension(const FlowState& s, const Cocycle& c, double dt, const StepOptions& opt) {
  if (c.kind() != CocycleKind::continuous) {
    throw std::invalid_argument("discrete cocycle cannot drive a flow extension");
  }
  if (!std::isfinite(dt)) throw std::invalid_argument("time step must be finite");
  if (!(opt.max_substep > 0)) throw std::invalid_argument("max_substep must be positive");
  check_fiber(s.fiber, c);
  const int substeps = std::max(1, static_cast<int>(std::ceil(std::abs(dt) / opt.max_substep)));
  const double h = dt / substeps;
  const double g1 = 0.5 - std::sqrt(3.0) / 6.0;
  const double g2 = 0.5 + std::sqrt(3.0) / 6.0;
  const double bracket_weight = std::sqrt(3.0) / 12.0 * h * h;
  FlowState out = s;
  for (int i = 0; i < substeps; ++i) {
    const double t0 = i * h;
    const Matrix a1 = c.generator(base::geodesic_flow(s.base, t0 + g1 * h)).matrix();
    const Matrix a2 = c.generator(base::geodesic_flow(s.base, t0 + g2 * h)).matrix();
    const Matrix omega = 0.5 * h * (a1 + a2) + bracket_weight * commutator(a2, a1);
    out.fiber = expm(Skew::projected(omega)) * out.fiber;
    count_multiplication(out, opt);
  }
  out.base = base::geodesic_flow(s.base, dt);
  return out;
}

Rotation cocycle_product(const Cocycle& c, const base::ToralAutomorphism& a, const base::TorusPoint& x,
                         int n) {
  if (n < 0) {
    base::TorusPoint y = x;
    for (int i = 0; i < -n; ++i) y = base::cat_step_inverse(y, a);
    return cocycle_product(c, a, y, -n).inverse();
  }
  Matrix prod = Matrix::Identity(c.dim(), c.dim());
  base::TorusPoint y = x;
  for (int i = 0; i < n; ++i) {
    prod = c(y).matrix() * prod;
    y = base::cat_step(y, a);
  }
  return Rotation::unchecked(std::move(prod));
}

void visit_orbit(const TorusState& start, const Cocycle& c, const base::ToralAutomorphism& a, long steps,
                 const std::function<void(long, const TorusState&)>& visit, const StepOptions& opt) {
  TorusState s = start;
  visit(0, s);
  for (long i = 1; i <= steps; ++i) {
    s = step_extension(s, c, a, 1, opt);
    visit(i, s);
  }
}

void visit_orbit(const FlowState& start, const Cocycle& c, double dt, long steps,
                 const std::function<void(long, const FlowState&)>& visit, const StepOptions& opt) {
  FlowState s = start;
  visit(0, s);
  for (long i = 1; i <= steps; ++i) {
    s = step_extension(s, c, dt, opt);
    visit(i, s);
  }
}

}  // namespace frameflow::extension
