#include "frameflow/extension/equidistribution.hpp"

#include <cmath>
#include <stdexcept>

#include "frameflow/algebras.hpp"

namespace frameflow::extension {

FiberObservable matrix_coefficient(int i, int j) {
  return {"R(" + std::to_string(i) + "," + std::to_string(j) + ")",
          [i, j](const Rotation& r) { return r(i, j); }};
}

FiberObservable complex_structure_observable(int m) {
  const Matrix jm = complex_structure(m);
  return {"J-pairing", [jm](const Rotation& r) {
            const Matrix& a = r.matrix();
            return a.col(1).dot(jm * a.col(0));
          }};
}

BirkhoffAccumulator::BirkhoffAccumulator(std::vector<FiberObservable> observables, long expected_length)
    : obs_(std::move(observables)), expected_(expected_length) {
  if (obs_.empty()) throw std::invalid_argument("no equidistribution tests given");
  if (expected_ < kMinLength) throw std::invalid_argument("orbit shorter than 1000 samples");
  shift_.assign(obs_.size(), 0.0);
  batch_sum_.assign(obs_.size(), std::vector<double>(kBatches, 0.0));
  batch_count_.assign(kBatches, 0);
}

void BirkhoffAccumulator::add(const Rotation& fiber) {
  if (count_ >= expected_) throw std::logic_error("more samples than announced");
  const auto batch = static_cast<std::size_t>(count_ * kBatches / expected_);
  for (std::size_t o = 0; o < obs_.size(); ++o) {
    const double v = obs_[o].f(fiber);
    if (count_ == 0) shift_[o] = v;
    batch_sum_[o][batch] += v - shift_[o];
  }
  ++batch_count_[batch];
  ++count_;
}

std::vector<BirkhoffEstimate> BirkhoffAccumulator::finish() const {
  if (count_ != expected_) throw std::logic_error("orbit shorter than announced");
  std::vector<BirkhoffEstimate> out;
  for (std::size_t o = 0; o < obs_.size(); ++o) {
    double total = 0.0;
    for (int b = 0; b < kBatches; ++b) total += batch_sum_[o][static_cast<std::size_t>(b)];
    const double mean_dev = total / static_cast<double>(count_);
    double ss = 0.0;
    for (int b = 0; b < kBatches; ++b) {
      const double bm = batch_sum_[o][static_cast<std::size_t>(b)] / batch_count_[static_cast<std::size_t>(b)];
      ss += (bm - mean_dev) * (bm - mean_dev);
    }
    const double sd = std::sqrt(ss / (kBatches - 1));
    out.push_back({obs_[o].name, shift_[o] + mean_dev, sd / std::sqrt(static_cast<double>(kBatches))});
  }
  return out;
}

}  // namespace frameflow::extension
