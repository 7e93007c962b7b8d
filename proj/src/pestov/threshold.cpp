#include "frameflow/pestov/threshold.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "frameflow/topology/tables.hpp"

namespace frameflow::pestov {

namespace {

bool excludes_target(double delta, double q, int target_degree) {
  return max_invariant_degree_unchecked(delta, q, Parity::odd) < target_degree;
}

}  // namespace

double pinching_threshold(double q, int target_degree) {
  if (target_degree < 1) throw std::invalid_argument("target degree must be positive");
  if (!(q > 0.0)) return 0.0;
  double hi = 1.0;
  while (!excludes_target(hi, q, target_degree)) {
    hi *= 2.0;
    if (hi > 1e12) throw std::invalid_argument("threshold search diverged");
  }
  double lo = 0.0;
  while (hi - lo > kThresholdTol) {
    const double mid = 0.5 * (lo + hi);
    if (mid > 0.0 && excludes_target(mid, q, target_degree)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double calibrate_q(double anchor, int target_degree) {
  if (!(anchor > 0.0)) throw std::invalid_argument("calibration anchor must be positive");
  double lo = 0.0;
  double hi = 1.0;
  while (pinching_threshold(hi, target_degree) < anchor) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pinching_threshold(mid, target_degree) < anchor) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double QEntry::resolve(int target_degree) const {
  if (mode == Mode::direct) return value;
  return calibrate_q(value, target_degree);
}

QTable default_q_table() {
  using M = QEntry::Mode;
  return {{1, {M::calibrated, 0.277}}, {2, {M::calibrated, 0.497}}, {3, {M::calibrated, 0.497}},
          {4, {M::calibrated, 0.557}}};
}

std::vector<ThresholdReport> threshold_curve(int n_min, int n_max, const QTable& table, int target_degree) {
  if (n_min < 3 || n_max < n_min) throw std::invalid_argument("invalid dimension range");
  std::set<int> missing;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& c : topology::reduction_candidates(n)) {
      if (!table.count(c.invariant_case)) missing.insert(c.invariant_case);
    }
  }
  if (!missing.empty()) {
    std::string msg = "q table is missing case(s):";
    for (int c : missing) msg += " " + std::to_string(c);
    throw std::invalid_argument(msg);
  }

  std::map<int, double> resolved;
  for (const auto& [tag, entry] : table) resolved[tag] = entry.resolve(target_degree);

  std::vector<ThresholdReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    ThresholdReport r;
    r.n = n;
    for (const auto& c : topology::reduction_candidates(n)) {
      CaseThreshold ct;
      ct.case_tag = c.invariant_case;
      ct.group = c.group_name;
      ct.q = resolved.at(c.invariant_case);
      ct.delta_threshold = pinching_threshold(ct.q, target_degree);
      ct.k_cutoff = ct.delta_threshold > 0.0 && ct.delta_threshold <= 1.0
                        ? cutoff_degree(CurvatureBoundParams{ct.delta_threshold, ct.q})
                        : 0;
      if (r.cases.empty() || ct.delta_threshold > r.delta_threshold) {
        r.case_tag = ct.case_tag;
        r.group = ct.group;
        r.delta_threshold = ct.delta_threshold;
        r.k_cutoff = ct.k_cutoff;
      }
      r.cases.push_back(ct);
    }
    if (r.k_cutoff > 0) {
      const CurvatureBoundParams p{r.delta_threshold, resolved.at(r.case_tag)};
      for (int k = 0; k <= r.k_cutoff + 2; ++k) r.curve.emplace_back(k, curvature_bound(k, p));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace frameflow::pestov
