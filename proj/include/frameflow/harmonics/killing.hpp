#pragma once

#include <functional>
#include <vector>

#include "frameflow/lie.hpp"

namespace frameflow::harmonics {

/// Conformally flat models g = e^{2φ}|dx|² on a coordinate patch.
enum class MetricModel { flat, poincare_ball };

/// Differential r-form on a patch of R^n, as full antisymmetric components
/// ω_{i1…ir} (row-major, first index slowest).
struct FormField {
  int n = 0;
  int degree = 0;
  std::function<Vector(const Vector&)> components;
  /// Optional: row a holds ∂_a ω. Central differences are used when empty.
  std::function<Matrix(const Vector&)> derivative;
};

struct KillingSample {
  Vector point;
  Vector direction;  // any nonzero vector; rescaled to g-unit length
};

/// max over samples of |(∇_v ω)(v, ·, …, ·)|_g, which vanishes identically
/// iff ∇ω is totally skew (ω is a Killing form).
double killing_form_residual(const FormField& omega, MetricModel model, const std::vector<KillingSample>& samples,
                             double fd_step = 1e-5);

/// Points uniform in the cube [−radius, radius]^n (inside the unit ball for
/// the ball model when radius < 1/√n) with random directions.
std::vector<KillingSample> random_samples(int n, int count, Rng& rng, double radius = 0.3);

}  // namespace frameflow::harmonics
