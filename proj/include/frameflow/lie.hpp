#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace frameflow {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Uniform double in [lo, hi) from the raw 64-bit stream, so seeded runs are
/// reproducible independently of the standard library's distributions.
double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

/// Largest absolute entry.
double max_abs(const Matrix& m);

double frobenius_inner(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Element of SO(m). Construction checks orthogonality and orientation.
class Rotation {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  explicit Rotation(Matrix m, double tol = kDefaultTolerance);

  static Rotation identity(int m);
  /// Skips the invariant check; for products of already-valid rotations.
  static Rotation unchecked(Matrix m);

  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  double operator()(int i, int j) const { return mat_(i, j); }

  Rotation inverse() const { return unchecked(mat_.transpose()); }
  Rotation operator*(const Rotation& other) const { return unchecked(mat_ * other.mat_); }

  /// ‖RᵀR − I‖∞
  double orthogonality_residual() const;
  /// Nearest rotation in the Frobenius sense (polar factor via SVD).
  Rotation reorthonormalized() const;

 private:
  struct NoCheck {};
  Rotation(Matrix m, NoCheck) : mat_(std::move(m)) {}
  Matrix mat_;
};

/// Element of so(m).
class Skew {
 public:
  explicit Skew(Matrix m, double tol = 1e-12);
  static Skew zero(int m);
  /// (M − Mᵀ)/2, no check.
  static Skew projected(const Matrix& m);

  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  double norm() const { return mat_.norm(); }

 private:
  struct NoCheck {};
  Skew(Matrix m, NoCheck) : mat_(std::move(m)) {}
  Matrix mat_;
};

Rotation expm(const Skew& s);
Rotation expm(const Matrix& skew);
/// Principal logarithm. Well conditioned only away from rotation angle π.
Skew logm(const Rotation& r);

/// Plane rotation by `angle` in the (i, j) coordinate plane.
Rotation givens(int m, int i, int j, double angle);
/// Product of Givens rotations over every coordinate plane with independent
/// uniform angles. Covers SO(m) but is not Haar distributed.
Rotation random_rotation(int m, Rng& rng);

/// Frobenius-orthonormal basis of so(m): (E_ij − E_ji)/√2 for i < j.
std::vector<Matrix> so_basis(int m);

/// Component of `candidate` Frobenius-orthogonal to the span of an
/// orthonormal family (two passes of modified Gram–Schmidt).
Matrix orthogonal_residual(const std::vector<Matrix>& basis, const Matrix& candidate);

}  // namespace frameflow
