#include "frameflow/lie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace frameflow {

double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double frobenius_inner(const Matrix& a, const Matrix& b) { return (a.array() * b.array()).sum(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rotation::Rotation(Matrix m, double tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
    throw std::invalid_argument("rotation must be a nonempty square matrix");
  }
  if (!mat_.allFinite()) throw std::invalid_argument("rotation has non-finite entries");
  const double res = orthogonality_residual();
  if (res >= tol) {
    throw std::invalid_argument("rotation orthogonality residual " + std::to_string(res));
  }
  if (std::abs(mat_.determinant() - 1.0) >= tol) {
    throw std::invalid_argument("rotation determinant differs from +1");
  }
}

Rotation Rotation::identity(int m) { return Rotation(Matrix::Identity(m, m), NoCheck{}); }

Rotation Rotation::unchecked(Matrix m) { return Rotation(std::move(m), NoCheck{}); }

double Rotation::orthogonality_residual() const {
  const Matrix r = mat_.transpose() * mat_ - Matrix::Identity(mat_.rows(), mat_.cols());
  return max_abs(r);
}

Rotation Rotation::reorthonormalized() const {
  // already orthonormal to rounding: leave the bits alone
  if (orthogonality_residual() <= 4.0 * std::numeric_limits<double>::epsilon()) return *this;
  Eigen::JacobiSVD<Matrix> svd(mat_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  // keep det = +1 when drift is large enough to flip the smallest singular pair
  if ((u * v.transpose()).determinant() < 0) u.col(u.cols() - 1) *= -1.0;
  return unchecked(u * v.transpose());
}

Skew::Skew(Matrix m, double tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) throw std::invalid_argument("skew matrix must be square");
  if (max_abs(mat_ + mat_.transpose()) >= tol) {
    throw std::invalid_argument("matrix is not skew-symmetric");
  }
}

Skew Skew::zero(int m) { return Skew(Matrix::Zero(m, m), NoCheck{}); }

Skew Skew::projected(const Matrix& m) { return Skew(0.5 * (m - m.transpose()), NoCheck{}); }

Rotation expm(const Matrix& s) {
  const auto m = s.rows();
  if (m == 1) return Rotation::identity(1);
  if (m == 2) {
    const double a = s(1, 0);
    Matrix r(2, 2);
    r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return Rotation::unchecked(std::move(r));
  }
  if (m == 3) {
    // Rodrigues
    const Eigen::Vector3d w(s(2, 1), s(0, 2), s(1, 0));
    const double theta = w.norm();
    Matrix k = s;
    Matrix r = Matrix::Identity(3, 3);
    if (theta < 1e-8) {
      r += k + 0.5 * k * k;
    } else {
      k /= theta;
      r += std::sin(theta) * k + (1.0 - std::cos(theta)) * (k * k);
    }
    return Rotation::unchecked(std::move(r));
  }
  Matrix r = s.exp();
  return Rotation::unchecked(std::move(r));
}

Rotation expm(const Skew& s) { return expm(s.matrix()); }

Skew logm(const Rotation& r) {
  const Matrix& a = r.matrix();
  if (a.rows() == 2) {
    Matrix l = Matrix::Zero(2, 2);
    const double angle = std::atan2(a(1, 0), a(0, 0));
    l(1, 0) = angle;
    l(0, 1) = -angle;
    return Skew::projected(l);
  }
  if (a.rows() == 3) {
    const double c = std::clamp(0.5 * (a.trace() - 1.0), -1.0, 1.0);
    const double theta = std::acos(c);
    const Matrix anti = 0.5 * (a - a.transpose());
    if (theta < 1e-6) {
      // sin θ/θ ≈ 1 − θ²/6
      return Skew::projected(anti * (1.0 + theta * theta / 6.0));
    }
    if (theta < 3.0) return Skew::projected(anti * (theta / std::sin(theta)));
  }
  Matrix l = a.log();
  return Skew::projected(l);
}

Rotation givens(int m, int i, int j, double angle) {
  Matrix g = Matrix::Identity(m, m);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  g(i, i) = c;
  g(j, j) = c;
  g(i, j) = -s;
  g(j, i) = s;
  return Rotation::unchecked(std::move(g));
}

Rotation random_rotation(int m, Rng& rng) {
  Matrix r = Matrix::Identity(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      r = givens(m, i, j, uniform(rng, -M_PI, M_PI)).matrix() * r;
    }
  }
  return Rotation::unchecked(std::move(r));
}

std::vector<Matrix> so_basis(int m) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
  const double c = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Matrix e = Matrix::Zero(m, m);
      e(i, j) = -c;
      e(j, i) = c;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

Matrix orthogonal_residual(const std::vector<Matrix>& basis, const Matrix& candidate) {
  Matrix r = candidate;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) r -= frobenius_inner(b, r) * b;
  }
  return r;
}

}  // namespace frameflow
