#pragma once

#include <functional>

#include "frameflow/extension/cocycle.hpp"

namespace frameflow::extension {

/// Point of the principal extension: base phase point plus fiber rotation.
template <class Base>
struct ExtendedState {
  Base base;
  Rotation fiber = Rotation::identity(1);
  int since_reortho = 0;  // multiplications since the last polar projection
};

using TorusState = ExtendedState<base::TorusPoint>;
using FlowState = ExtendedState<base::UnitTangent>;

struct StepOptions {
  int reortho_every = 64;
  double max_substep = 1e-2;  // continuous kind only
};

/// n steps of (x, R) ↦ (f x, A(x)·R).
TorusState step_extension(const TorusState& s, const Cocycle& c, const base::ToralAutomorphism& a,
                          int n = 1, const StepOptions& opt = {});

/// Time-dt flow: base by the exact geodesic flow, fiber by R' = a(φ_t x)·R
/// integrated with the fourth-order Magnus scheme on substeps ≤ max_substep.
FlowState step_extension(const FlowState& s, const Cocycle& c, double dt, const StepOptions& opt = {});

/// A^{(n)}(x) = A(f^{n−1}x)···A(x) for n ≥ 0, and A^{(n)}(x) = A^{(−n)}(f^n x)^{−1} for n < 0.
Rotation cocycle_product(const Cocycle& c, const base::ToralAutomorphism& a, const base::TorusPoint& x,
                         int n);

/// Streams the discrete orbit to `visit(step_index, state)`, including step 0.
void visit_orbit(const TorusState& start, const Cocycle& c, const base::ToralAutomorphism& a, long steps,
                 const std::function<void(long, const TorusState&)>& visit, const StepOptions& opt = {});

/// Streams the continuous orbit sampled every dt.
void visit_orbit(const FlowState& start, const Cocycle& c, double dt, long steps,
                 const std::function<void(long, const FlowState&)>& visit, const StepOptions& opt = {});

}  // namespace frameflow::extension
