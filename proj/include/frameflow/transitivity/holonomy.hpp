#pragma once

#include <utility>
#include <vector>

#include "frameflow/base/torus.hpp"
#include "frameflow/extension/cocycle.hpp"

namespace frameflow::transitivity {

struct HolonomyResult {
  Rotation value = Rotation::identity(1);
  int truncation_depth = 0;
  double cauchy_residual = 0.0;
  std::vector<double> residual_trace;  // Frobenius distance between consecutive partial products
};

struct HolonomyOptions {
  double tol = 1e-12;
  int depth_cap = 200;
};

/// Holonomy along the stable leaf through `anchor`, from the point
/// anchor + from·s_dir to anchor + to·s_dir:
///   H = lim_n A^{(n)}(y)^{−1} A^{(n)}(x).
/// The n-th iterates are taken as anchor_n + λ^{−n}·offset·s_dir, so both
/// points stay on the same local leaf of the computed anchor orbit.
/// Throws std::invalid_argument if the two points are still more than 1e−6
/// apart after 30 steps, and NumericalError if depth_cap is reached.
HolonomyResult stable_holonomy(const base::TorusPoint& anchor, double from, double to,
                               const extension::Cocycle& c, const base::ToralAutomorphism& a,
                               const HolonomyOptions& opt = {});

/// Mirror of stable_holonomy along the unstable leaf with backward iteration:
///   H = lim_n A^{(−n)}(y)^{−1} A^{(−n)}(x).
HolonomyResult unstable_holonomy(const base::TorusPoint& anchor, double from, double to,
                                 const extension::Cocycle& c, const base::ToralAutomorphism& a,
                                 const HolonomyOptions& opt = {});

struct BrinOptions {
  HolonomyOptions holonomy;
  int forward_cut = 4;   // K: orbit followed up to f^K p before the stable return
  int backward_cut = 4;  // J: orbit entered at f^{−J} p after the unstable departure
};

/// Holonomy of the homoclinic loop through p based at the fixed point 0:
///   ρ(p) = A(0)^{−K} H^s(f^K p → 0) A^{(K+J)}(f^{−J} p) H^u(0 → f^{−J} p) A(0)^{−J}.
/// The powers of A(0) make the result independent of the cuts K and J.
Rotation brin_rho(const base::HomoclinicPoint& p, const extension::Cocycle& c,
                  const base::ToralAutomorphism& a, const BrinOptions& opt = {});

/// Word in the homoclinic generators: letters (index into `rhos`, power).
struct BrinWord {
  std::vector<std::pair<int, int>> letters;
  Rotation value = Rotation::identity(1);
};

/// Ordered product ρ_{i1}^{k1}···ρ_{ip}^{kp}; throws on an out-of-range index.
BrinWord make_word(const std::vector<std::pair<int, int>>& letters, const std::vector<Rotation>& rhos);

/// Least-squares fit residual(d) ≈ C·θ^d on the positive entries of a trace.
struct DecayFit {
  double c = 0.0;
  double theta = 0.0;
};
DecayFit fit_decay(const std::vector<double>& trace);

}  // namespace frameflow::transitivity
