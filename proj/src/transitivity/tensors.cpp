#include "frameflow/transitivity/tensors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "frameflow/algebras.hpp"

namespace frameflow::transitivity {

std::string to_string(Representation r) {
  switch (r) {
    case Representation::standard:
      return "standard";
    case Representation::lambda2:
      return "lambda2";
    case Representation::lambda3:
      return "lambda3";
    case Representation::sym2_traceless:
      return "sym2_0";
  }
  return "standard";
}

Representation representation_from_string(const std::string& s) {
  if (s == "standard") return Representation::standard;
  if (s == "lambda2") return Representation::lambda2;
  if (s == "lambda3") return Representation::lambda3;
  if (s == "sym2_0") return Representation::sym2_traceless;
  throw std::invalid_argument("unknown representation '" + s + "'");
}

int tensor_rank(Representation r) {
  switch (r) {
    case Representation::standard:
      return 1;
    case Representation::lambda2:
    case Representation::sym2_traceless:
      return 2;
    case Representation::lambda3:
      return 3;
  }
  return 1;
}

namespace {

Eigen::Index full_size(int m, int rank) {
  Eigen::Index s = 1;
  for (int i = 0; i < rank; ++i) s *= m;
  return s;
}

Matrix build_embedding(Representation rep, int m) {
  switch (rep) {
    case Representation::standard:
      return Matrix::Identity(m, m);
    case Representation::lambda2: {
      Matrix e = Matrix::Zero(m * m, m * (m - 1) / 2);
      int c = 0;
      const double w = 1.0 / std::sqrt(2.0);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j, ++c) {
          e(i * m + j, c) = w;
          e(j * m + i, c) = -w;
        }
      }
      return e;
    }
    case Representation::lambda3: {
      const int d = m * (m - 1) * (m - 2) / 6;
      Matrix e = Matrix::Zero(full_size(m, 3), d);
      int c = 0;
      const double w = 1.0 / std::sqrt(6.0);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          for (int k = j + 1; k < m; ++k, ++c) {
            const std::array<std::array<int, 3>, 6> perms = {
                {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}}};
            for (int p = 0; p < 6; ++p) {
              const auto& q = perms[static_cast<std::size_t>(p)];
              e((q[0] * m + q[1]) * m + q[2], c) = p < 3 ? w : -w;
            }
          }
        }
      }
      return e;
    }
    case Representation::sym2_traceless: {
      Matrix e = Matrix::Zero(m * m, m * (m + 1) / 2 - 1);
      int c = 0;
      const double w = 1.0 / std::sqrt(2.0);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j, ++c) {
          e(i * m + j, c) = w;
          e(j * m + i, c) = w;
        }
      }
      // Helmert-type diagonal: (Σ_{i<k} e_ii − k e_kk)/√(k(k+1))
      for (int k = 1; k < m; ++k, ++c) {
        const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) e(i * m + i, c) = 1.0 / norm;
        e(k * m + k, c) = -k / norm;
      }
      return e;
    }
  }
  throw std::logic_error("unhandled representation");
}

}  // namespace

Vector apply_on_mode(const Matrix& a, const Vector& full, int m, int rank, int mode) {
  // Index = (outer · m + i) · inner + rest, with inner = m^{rank−1−mode}.
  Eigen::Index inner = 1;
  for (int i = mode + 1; i < rank; ++i) inner *= m;
  const Eigen::Index outer = full.size() / (inner * m);
  Vector out = Vector::Zero(full.size());
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double aij = a(i, j);
        if (aij == 0.0) continue;
        const Eigen::Index dst = (o * m + i) * inner;
        const Eigen::Index src = (o * m + j) * inner;
        out.segment(dst, inner) += aij * full.segment(src, inner);
      }
    }
  }
  return out;
}

TensorRepresentation::TensorRepresentation(Representation rep, int m)
    : rep_(rep), m_(m), rank_(tensor_rank(rep)) {
  if (m < 1) throw std::invalid_argument("dimension must be positive");
  if (rep == Representation::lambda3 && m > 16) throw std::invalid_argument("lambda3 supported for m <= 16");
  embedding_ = build_embedding(rep, m);
}

Matrix TensorRepresentation::algebra_action(const Matrix& x) const {
  Matrix out(embedding_.cols(), embedding_.cols());
  for (Eigen::Index c = 0; c < embedding_.cols(); ++c) {
    const Vector col = embedding_.col(c);
    Vector img = Vector::Zero(col.size());
    for (int mode = 0; mode < rank_; ++mode) img += apply_on_mode(x, col, m_, rank_, mode);
    out.col(c) = embedding_.transpose() * img;
  }
  return out;
}

Vector TensorRepresentation::group_action_full(const Matrix& g, const Vector& full) const {
  Vector out = full;
  for (int mode = 0; mode < rank_; ++mode) out = apply_on_mode(g, out, m_, rank_, mode);
  return out;
}

double group_residual(const TensorRepresentation& rep, const Vector& full, const std::vector<Rotation>& group) {
  double worst = 0.0;
  for (const auto& g : group) {
    const double r = (rep.group_action_full(g.matrix(), full) - full).norm();
    if (!(r <= worst)) worst = r;  // propagates NaN
  }
  return worst;
}

namespace {

// Right singular vectors of `a` with singular value below tol (including the
// directions beyond the row count). JacobiSVD rather than BDCSVD: the latter
// returns wrong singular vectors on some of these block-structured actions
// in Eigen 3.4.
Matrix null_space(const Matrix& a, double tol) {
  if (a.rows() == 0) return Matrix::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (c >= sv.size() || sv(c) < tol) keep.push_back(c);
  }
  Matrix out(a.cols(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = svd.matrixV().col(keep[i]);
  return out;
}

}  // namespace

std::vector<InvariantTensor> fixed_tensors(const std::vector<Matrix>& algebra_basis, Representation rep, int m,
                                           double zero_tol) {
  const TensorRepresentation tr(rep, m);
  std::vector<Matrix> actions;
  actions.reserve(algebra_basis.size());
  for (const auto& x : algebra_basis) {
    if (x.rows() != m) throw std::invalid_argument("algebra basis has the wrong dimension");
    actions.push_back(tr.algebra_action(x));
  }

  Matrix kernel = Matrix::Identity(tr.dim(), tr.dim());
  for (const auto& act : actions) {
    if (kernel.cols() == 0) break;
    kernel = kernel * null_space(act * kernel, zero_tol);
  }
  if (kernel.cols() > 0 && !actions.empty()) {
    Matrix stacked(static_cast<Eigen::Index>(actions.size()) * tr.dim(), kernel.cols());
    for (std::size_t i = 0; i < actions.size(); ++i) {
      stacked.block(static_cast<Eigen::Index>(i) * tr.dim(), 0, tr.dim(), kernel.cols()) = actions[i] * kernel;
    }
    kernel = kernel * null_space(stacked, zero_tol);
  }
  // Re-orthonormalize against accumulated rounding.
  if (kernel.cols() > 0) {
    Eigen::HouseholderQR<Matrix> qr(kernel);
    kernel = qr.householderQ() * Matrix::Identity(kernel.rows(), kernel.cols());
  }

  std::vector<Rotation> group;
  for (const auto& x : algebra_basis) group.push_back(expm(x));
  std::vector<InvariantTensor> out;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    InvariantTensor t;
    t.representation = rep;
    t.coefficients = kernel.col(c);
    t.components = tr.embedding() * t.coefficients;
    t.residual = group_residual(tr, t.components, group);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<InvariantTensor> fixed_tensors(const SubgroupEstimate& h, Representation rep, int m, double zero_tol) {
  return fixed_tensors(h.algebra_basis, rep, m, zero_tol);
}

Vector standard_kahler_form(int m) {
  if (m % 2 != 0) throw std::invalid_argument("kahler form needs even dimension");
  Vector out = Vector::Zero(m * m);
  for (int b = 0; b < m; b += 2) {
    out(b * m + b + 1) = 1.0;
    out((b + 1) * m + b) = -1.0;
  }
  return out;
}

Vector associative_three_form() {
  Vector out = Vector::Zero(343);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) out((i * 7 + j) * 7 + k) = cross_product_constant(i, j, k);
    }
  }
  return out;
}

}  // namespace frameflow::transitivity
