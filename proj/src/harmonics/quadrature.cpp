#include "frameflow/harmonics/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "frameflow/harmonics/sym_tensor.hpp"

namespace frameflow::harmonics {

double SphereQuadrature::constant_error() const {
  double s = 0.0;
  for (double w : weights) s += w;
  const double vol = sphere_volume(n);
  return std::abs(s - vol) / vol;
}

void gauss_jacobi(int points, double alpha, double beta, std::vector<double>& nodes, std::vector<double>& weights) {
  if (points < 1) throw std::invalid_argument("gauss_jacobi needs at least one point");
  if (alpha <= -1.0 || beta <= -1.0) throw std::invalid_argument("gauss_jacobi needs alpha, beta > -1");
  const double ab = alpha + beta;
  Matrix t = Matrix::Zero(points, points);
  for (int k = 0; k < points; ++k) {
    const double s = 2.0 * k + ab;
    t(k, k) = k == 0 ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (k + 1 < points) {
      const double j = k + 1.0;
      const double sj = 2.0 * j + ab;
      const double b2 = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (sj * sj * (sj + 1.0) * (sj - 1.0));
      t(k, k + 1) = t(k + 1, k) = std::sqrt(b2);
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(t);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  nodes.resize(static_cast<std::size_t>(points));
  weights.resize(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    nodes[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
  }
}

SphereQuadrature product_quadrature(int n, int degree) {
  if (n < 2) throw std::invalid_argument("product_quadrature needs n >= 2");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  SphereQuadrature q;
  q.n = n;
  q.exact_degree = degree;
  if (n == 2) {
    // M equally spaced points integrate trigonometric polynomials of degree < M.
    const int m = degree + 1;
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * M_PI * (i + 0.5) / m;
      Vector v(2);
      v << std::cos(a), std::sin(a);
      q.nodes.push_back(v);
      q.weights.push_back(2.0 * M_PI / m);
    }
    return q;
  }
  const SphereQuadrature sub = product_quadrature(n - 1, degree);
  std::vector<double> t;
  std::vector<double> w;
  const double a = (n - 3) / 2.0;
  gauss_jacobi(degree / 2 + 1, a, a, t, w);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
    for (std::size_t j = 0; j < sub.size(); ++j) {
      Vector v(n);
      v.head(n - 1) = r * sub.nodes[j];
      v(n - 1) = t[i];
      q.nodes.push_back(std::move(v));
      q.weights.push_back(w[i] * sub.weights[j]);
    }
  }
  return q;
}

}  // namespace frameflow::harmonics
