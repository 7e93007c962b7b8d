#include "frameflow/algebras.hpp"

#include <cmath>
#include <stdexcept>

namespace frameflow {

Matrix complex_structure(int m) {
  if (m % 2 != 0) throw std::invalid_argument("complex structure needs even dimension");
  Matrix j = Matrix::Zero(m, m);
  for (int b = 0; b < m; b += 2) {
    j(b, b + 1) = -1.0;
    j(b + 1, b) = 1.0;
  }
  return j;
}

namespace {

// Realification of a k×k complex matrix given by real and imaginary parts;
// the complex unit maps to the block [[0,−1],[1,0]].
Matrix realify(const Matrix& re, const Matrix& im) {
  const auto k = re.rows();
  Matrix out = Matrix::Zero(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      out(2 * a, 2 * b) = re(a, b);
      out(2 * a, 2 * b + 1) = -im(a, b);
      out(2 * a + 1, 2 * b) = im(a, b);
      out(2 * a + 1, 2 * b + 1) = re(a, b);
    }
  }
  return out;
}

}  // namespace

std::vector<Matrix> unitary_basis(int k) {
  std::vector<Matrix> basis;
  const Matrix zero = Matrix::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    Matrix im = zero;
    im(a, a) = 1.0;
    basis.push_back(realify(zero, im));
    for (int b = a + 1; b < k; ++b) {
      Matrix re = zero;
      re(a, b) = 1.0;
      re(b, a) = -1.0;
      basis.push_back(realify(re, zero));
      Matrix im2 = zero;
      im2(a, b) = 1.0;
      im2(b, a) = 1.0;
      basis.push_back(realify(zero, im2));
    }
  }
  for (auto& b : basis) b /= b.norm();
  return basis;
}

std::vector<Matrix> block_so_basis(int p, int q) {
  const int m = p + q;
  std::vector<Matrix> basis;
  for (const auto& e : so_basis(p)) {
    Matrix x = Matrix::Zero(m, m);
    x.topLeftCorner(p, p) = e;
    basis.push_back(std::move(x));
  }
  for (const auto& e : so_basis(q)) {
    Matrix x = Matrix::Zero(m, m);
    x.bottomRightCorner(q, q) = e;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Matrix> stabilizer_basis(int m) { return block_so_basis(1, m - 1); }

const std::vector<OctonionTriple>& octonion_triples() {
  static const std::vector<OctonionTriple> triples = {
      {{1, 2, 3}, 1},  {{1, 4, 5}, 1},  {{1, 6, 7}, 1},  {{2, 4, 6}, 1},
      {{2, 5, 7}, -1}, {{3, 4, 7}, -1}, {{3, 5, 6}, -1},
  };
  return triples;
}

double cross_product_constant(int i, int j, int k) {
  // 0-based indices
  for (const auto& t : octonion_triples()) {
    const int a = t.idx[0] - 1;
    const int b = t.idx[1] - 1;
    const int c = t.idx[2] - 1;
    const double s = t.sign;
    if (i == a && j == b && k == c) return s;
    if (i == b && j == c && k == a) return s;
    if (i == c && j == a && k == b) return s;
    if (i == b && j == a && k == c) return -s;
    if (i == a && j == c && k == b) return -s;
    if (i == c && j == b && k == a) return -s;
  }
  return 0.0;
}

std::vector<Matrix> g2_basis() {
  // Linear map so(7) → R^7, X ↦ (Σ_{j<k} φ_ijk X_jk)_i on the coordinates of so_basis(7).
  const auto so7 = so_basis(7);
  Matrix constraint(7, static_cast<Eigen::Index>(so7.size()));
  for (std::size_t c = 0; c < so7.size(); ++c) {
    for (int i = 0; i < 7; ++i) {
      double s = 0.0;
      for (int j = 0; j < 7; ++j) {
        for (int k = 0; k < 7; ++k) s += cross_product_constant(i, j, k) * so7[c](j, k);
      }
      constraint(i, static_cast<Eigen::Index>(c)) = s;
    }
  }
  Eigen::JacobiSVD<Matrix> svd(constraint, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Matrix& v = svd.matrixV();
  std::vector<Matrix> basis;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    if (c < sv.size() && sv(c) > 1e-10) continue;
    Matrix x = Matrix::Zero(7, 7);
    for (std::size_t b = 0; b < so7.size(); ++b) x += v(static_cast<Eigen::Index>(b), c) * so7[b];
    basis.push_back(std::move(x));
  }
  if (basis.size() != 14) throw std::logic_error("g2 model has wrong dimension");
  return orthonormalize(basis);
}

std::vector<Matrix> orthonormalize(const std::vector<Matrix>& family, double tol) {
  std::vector<Matrix> out;
  for (const auto& x : family) {
    Matrix r = orthogonal_residual(out, x);
    const double n = r.norm();
    if (n > tol) out.push_back(r / n);
  }
  return out;
}

}  // namespace frameflow
