#pragma once

#include <string>
#include <vector>

#include "frameflow/transitivity/tensors.hpp"

namespace frameflow::topology {

/// ρ(n) = 2^b + 8c for n = odd·2^{b+4c}, b ∈ {0,1,2,3}. S^{n−1} carries
/// ρ(n) − 1 linearly independent vector fields.
int radon_hurwitz(int n);
inline int vector_field_count(int n) { return radon_hurwitz(n) - 1; }

enum class Existence { known, unknown };

/// Structure group K ⊂ SO(n−1) to which the frame bundle of S^{n−1} might
/// reduce, with the bundle case it forces and the invariant's representation.
struct ReductionCandidate {
  int n = 0;
  std::string group_name;
  int p = 0;  // first block size for SO(p)×SO(q), else 0
  int invariant_case = 0;  // 1: V, 2: Λ²V, 3: Λ³V, 4: Sym²V
  transitivity::Representation rep = transitivity::Representation::standard;
  Existence existence = Existence::known;
  bool has_matrix_model = true;
};

/// Empty for odd n ≠ 7; otherwise the subgroups for dimensions 7, 8, 134 and
/// the two residue classes mod 4. Throws std::invalid_argument for n < 3.
std::vector<ReductionCandidate> reduction_candidates(int n);

/// Frobenius-orthonormal basis of the subalgebra of so(n−1) for a candidate
/// with a matrix model. Throws std::invalid_argument for E7.
std::vector<Matrix> candidate_algebra(const ReductionCandidate& c);

struct ConsistencyRow {
  int n = 0;
  std::string group_name;
  std::string status;  // "ok", "skipped: no matrix model shipped", or a failure description
  int kernel_dim = -1;
  double residual = 0.0;
  bool passed = true;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  bool passed = true;
  /// Names of failed rows, empty when passed.
  std::vector<std::string> failures;
};

/// Cross-checks the table: residue-class rows carry the expected case, and
/// for every candidate with n ≤ n_check and a matrix model the advertised
/// invariant is recovered by fixed_tensors with residual < 1e−8. U(3) must
/// give the standard Kähler form and G2 a one-dimensional Λ³ kernel.
ConsistencyReport consistency_check(int n_check = 20);

}  // namespace frameflow::topology
