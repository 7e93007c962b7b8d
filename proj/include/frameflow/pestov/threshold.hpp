#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frameflow/pestov/pestov.hpp"

namespace frameflow::pestov {

inline constexpr double kThresholdTol = 1e-9;

/// Smallest pinching δ for which every odd degree ≥ target_degree is excluded
/// (bisection with exact integer degree evaluation at each probe, tolerance
/// 1e−9). Returns 0 for q ≤ 0. The search is not capped at δ = 1, so a value
/// above 1 means no admissible pinching suffices.
double pinching_threshold(double q, int target_degree = 3);

/// The q whose threshold equals `anchor` (bisection on q).
double calibrate_q(double anchor, int target_degree = 3);

/// Per-case q: either given directly or calibrated from a threshold anchor.
struct QEntry {
  enum class Mode { direct, calibrated } mode = Mode::direct;
  double value = 0.0;

  double resolve(int target_degree = 3) const;
};
using QTable = std::map<int, QEntry>;

/// Case 1 at 0.277, case 2 at 0.497, case 3 at 0.497, case 4 at 0.557, all calibrated.
QTable default_q_table();

struct CaseThreshold {
  int case_tag = 0;
  std::string group;
  double q = 0.0;
  int k_cutoff = 0;
  double delta_threshold = 0.0;
};

struct ThresholdReport {
  int n = 0;
  int case_tag = 0;  // case attaining the maximum, 0 when there is no candidate
  std::string group;
  int k_cutoff = 0;
  double delta_threshold = 0.0;
  std::vector<std::pair<int, double>> curve;  // (k, bound value) at the threshold
  std::vector<CaseThreshold> cases;
};

/// For each n, takes the maximum threshold over the reduction candidates of
/// that dimension. Throws std::invalid_argument naming every case missing
/// from the table.
std::vector<ThresholdReport> threshold_curve(int n_min, int n_max, const QTable& table, int target_degree = 3);

}  // namespace frameflow::pestov
