#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "frameflow/base/disk.hpp"
#include "frameflow/base/torus.hpp"
#include "frameflow/lie.hpp"

namespace frameflow::extension {

enum class CocycleKind { discrete, continuous };

std::string to_string(CocycleKind k);

/// Fiber motion rule of an SO(m) extension. A discrete cocycle assigns a
/// rotation to each torus point; a continuous one assigns a generator in so(m)
/// to each unit tangent of the disk.
class Cocycle {
 public:
  using DiscreteFn = std::function<Rotation(const base::TorusPoint&)>;
  using ContinuousFn = std::function<Skew(const base::UnitTangent&)>;

  static Cocycle discrete(int m, DiscreteFn fn, double lipschitz);
  static Cocycle continuous(int m, ContinuousFn fn, double lipschitz);

  CocycleKind kind() const { return kind_; }
  int dim() const { return dim_; }
  /// Upper bound on the Lipschitz constant with respect to base coordinates
  /// (operator norm on the fiber side).
  double lipschitz() const { return lipschitz_; }

  /// Throws std::invalid_argument if the kind is continuous.
  Rotation operator()(const base::TorusPoint& x) const;
  /// Throws std::invalid_argument if the kind is discrete.
  Skew generator(const base::UnitTangent& s) const;

 private:
  CocycleKind kind_ = CocycleKind::discrete;
  int dim_ = 0;
  double lipschitz_ = 0.0;
  DiscreteFn discrete_;
  ContinuousFn continuous_;
};

Cocycle trivial_cocycle(int m, CocycleKind kind);
Cocycle constant_cocycle(const Rotation& value);
Cocycle constant_generator(const Skew& value);

/// Coefficients of a trigonometric-polynomial cocycle: for each algebra basis
/// element B_j, c_j(x) = a_j + Σ_f (α_jf cos 2π⟨f,x⟩ + β_jf sin 2π⟨f,x⟩) over
/// the frequency list. The cocycle value is exp(Σ_j c_j(x) B_j).
///
/// On the disk the same form is used with the feature vector
/// (Re z, Im z, cos θ, sin θ) in place of the torus phases, so the generator is
/// Σ_j (a_j + Σ_i w_ji·feature_i) B_j.
struct TrigCocycleSpec {
  std::vector<Matrix> basis;
  std::vector<double> constant;
  std::vector<std::vector<double>> cos_coeff;  // [j][f]
  std::vector<std::vector<double>> sin_coeff;  // [j][f]
};

/// Frequencies (0,0)-free: (1,0), (0,1), (1,1), (1,−1).
const std::vector<std::array<int, 2>>& trig_frequencies();

/// Seeded random coefficients in [−amplitude, amplitude] over `basis`.
TrigCocycleSpec random_trig_spec(const std::vector<Matrix>& basis, Rng& rng, double amplitude);

/// Cocycle built from a spec; kind selects torus phases or disk features.
Cocycle trig_cocycle(const TrigCocycleSpec& spec, CocycleKind kind);

/// Generic random cocycle over all of so(m).
Cocycle random_trig_cocycle(int m, CocycleKind kind, Rng& rng, double amplitude = 1.0);

/// Random cocycle with values in U(m/2) ⊂ SO(m): every value commutes with
/// the standard complex structure. Throws std::invalid_argument for odd m.
Cocycle kahler_like_cocycle(int m, CocycleKind kind, Rng& rng, double amplitude = 1.0);

}  // namespace frameflow::extension
