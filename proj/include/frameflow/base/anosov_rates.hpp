#pragma once

#include "frameflow/base/torus.hpp"

namespace frameflow::base {

/// Estimated constants in ‖dφ_t v‖ ≤ C e^{−λt}‖v‖ on the stable bundle
/// (and the mirror bound on the unstable bundle).
struct AnosovRates {
  double c_est = 0.0;
  double lambda_est = 0.0;
};

/// Tangent iteration of the linear map. Unstable rate from renormalized
/// forward iteration, stable rate from backward iteration, averaged.
AnosovRates anosov_rate_check(const ToralAutomorphism& a, int n_samples);

/// Geodesic flow on the disk; samples are base frames at evenly spaced
/// points of a fixed spiral.
struct DiskFlowModel {
  double horizon = 5.0;    // flow time over which growth is measured
  double epsilon = 1e-6;   // horocyclic perturbation size
};

/// Growth of the distance between frames displaced along the stable and
/// unstable horocycles.
AnosovRates anosov_rate_check(const DiskFlowModel& model, int n_samples);

}  // namespace frameflow::base
