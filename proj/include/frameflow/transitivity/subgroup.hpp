#pragma once

#include <string>
#include <vector>

#include "frameflow/lie.hpp"

namespace frameflow::transitivity {

/// Lie algebra of the identity component of the closed group generated by
/// the inputs, as a Frobenius-orthonormal basis of skew matrices.
struct SubgroupEstimate {
  std::vector<Matrix> algebra_basis;
  int dimension = 0;
  int generator_count = 0;
  int words_examined = 0;
  int logs_harvested = 0;
  double closure_residual = 0.0;  // max off-span residual of a bracket of basis elements
};

struct SubgroupOptions {
  int max_word_length = 6;
  long max_words = 200000;
  double injectivity_radius = 0.5;  // ‖w − I‖_F cutoff for taking logs
  double span_tol = 1e-6;           // Gram–Schmidt acceptance threshold
};

/// Harvests principal logarithms of reduced words in the generators and their
/// inverses (breadth first, shortest words first), spans them and closes the
/// span under brackets up to dimension m(m−1)/2.
/// Throws NumericalError("insufficient data") if no word lies within the
/// injectivity radius, std::invalid_argument for an empty input.
SubgroupEstimate estimate_transitivity_group(const std::vector<Rotation>& rhos,
                                             const SubgroupOptions& opt = {});

/// Bracket closure of a span: appends normalized bracket residuals above tol
/// until the span is closed or reaches max_dim.
std::vector<Matrix> bracket_closure(std::vector<Matrix> basis, double tol, int max_dim);

/// Largest off-span residual of [B_i, B_j] over basis pairs.
double closure_residual(const std::vector<Matrix>& basis);

enum class Verdict { ergodic, not_ergodic, inconclusive };
std::string to_string(Verdict v);

/// ergodic iff the estimate fills so(m); not_ergodic for a proper subalgebra
/// backed by at least min_generators generators; inconclusive otherwise.
Verdict ergodicity_verdict(const SubgroupEstimate& h, int m, int min_generators = 8);

}  // namespace frameflow::transitivity
