#pragma once

#include <string>
#include <vector>

#include "frameflow/lie.hpp"
#include "frameflow/transitivity/subgroup.hpp"

namespace frameflow::transitivity {

enum class Representation { standard, lambda2, lambda3, sym2_traceless };

std::string to_string(Representation r);
/// Accepts "standard", "lambda2", "lambda3", "sym2_0"; throws std::invalid_argument otherwise.
Representation representation_from_string(const std::string& s);

int tensor_rank(Representation r);

/// Orthonormal embedding of a representation space into the full tensor
/// space (R^m)^{⊗rank}, with tensors stored row-major (first index slowest).
class TensorRepresentation {
 public:
  TensorRepresentation(Representation rep, int m);

  Representation rep() const { return rep_; }
  int m() const { return m_; }
  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(embedding_.cols()); }
  /// Columns: orthonormal basis of the representation space in full components.
  const Matrix& embedding() const { return embedding_; }

  /// Matrix of the induced Lie-algebra action X·T on representation coordinates.
  Matrix algebra_action(const Matrix& x) const;
  /// Group action g·T on full tensor components.
  Vector group_action_full(const Matrix& g, const Vector& full) const;

 private:
  Representation rep_;
  int m_;
  int rank_;
  Matrix embedding_;
};

/// Apply matrix `a` to tensor slot `mode` of a full tensor of the given rank.
Vector apply_on_mode(const Matrix& a, const Vector& full, int m, int rank, int mode);

struct InvariantTensor {
  Representation representation = Representation::standard;
  Vector coefficients;  // coordinates in the representation basis, unit norm
  Vector components;    // full tensor components
  double residual = 0.0;  // max over basis elements X of ‖exp(X)·T − T‖
};

/// Orthonormal basis of the joint kernel of the induced action of the
/// algebra basis, singular values below zero_tol treated as zero. The kernel
/// is narrowed one generator at a time before a final stacked check.
std::vector<InvariantTensor> fixed_tensors(const std::vector<Matrix>& algebra_basis, Representation rep,
                                           int m, double zero_tol = 1e-8);
std::vector<InvariantTensor> fixed_tensors(const SubgroupEstimate& h, Representation rep, int m,
                                           double zero_tol = 1e-8);

/// max over group elements g of ‖g·T − T‖ for a tensor in full components.
double group_residual(const TensorRepresentation& rep, const Vector& full, const std::vector<Rotation>& group);

/// Full components of the 2-form Σ_b e_{2b}∧e_{2b+1} (rank-2, antisymmetric).
Vector standard_kahler_form(int m);
/// Full components of φ = Σ φ_ijk e_i⊗e_j⊗e_k on R^7.
Vector associative_three_form();

}  // namespace frameflow::transitivity
