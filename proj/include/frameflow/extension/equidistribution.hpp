#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frameflow/extension/extension.hpp"

namespace frameflow::extension {

/// Function on the fiber group, typically a matrix coefficient of a
/// nontrivial irreducible representation (Haar mean zero).
struct FiberObservable {
  std::string name;
  std::function<double(const Rotation&)> f;
};

/// R ↦ R(i, j); for SO(m), m ≥ 2, these lie in the standard representation.
FiberObservable matrix_coefficient(int i, int j);
/// R ↦ (RᵀJR)(1, 0) with J the standard complex structure, i.e. ⟨J R e₁, R e₂⟩.
/// Invariant under left multiplication by anything commuting with J.
FiberObservable complex_structure_observable(int m);

struct BirkhoffEstimate {
  std::string name;
  double average = 0.0;
  double standard_error = 0.0;
};

/// Streaming Birkhoff averages with batch-means standard errors. Samples are
/// accumulated as deviations from the first value, so a frozen observable
/// averages to its initial value exactly.
class BirkhoffAccumulator {
 public:
  static constexpr long kMinLength = 1000;
  static constexpr int kBatches = 32;

  /// Throws std::invalid_argument for an empty observable list or length < kMinLength.
  BirkhoffAccumulator(std::vector<FiberObservable> observables, long expected_length);

  void add(const Rotation& fiber);
  long count() const { return count_; }
  /// Throws std::logic_error unless exactly expected_length samples were added.
  std::vector<BirkhoffEstimate> finish() const;

 private:
  std::vector<FiberObservable> obs_;
  long expected_ = 0;
  long count_ = 0;
  std::vector<double> shift_;
  std::vector<std::vector<double>> batch_sum_;  // [observable][batch]
  std::vector<long> batch_count_;
};

/// Batch-means report over a stored orbit of fibers.
template <class Base>
std::vector<BirkhoffEstimate> fiber_equidistribution(const std::vector<ExtendedState<Base>>& orbit,
                                                     const std::vector<FiberObservable>& tests) {
  BirkhoffAccumulator acc(tests, static_cast<long>(orbit.size()));
  for (const auto& s : orbit) acc.add(s.fiber);
  return acc.finish();
}

}  // namespace frameflow::extension
