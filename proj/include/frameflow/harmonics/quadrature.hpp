#pragma once

#include <vector>

#include "frameflow/lie.hpp"

namespace frameflow::harmonics {

/// Node/weight rule on S^{n−1} ⊂ R^n.
struct SphereQuadrature {
  int n = 0;
  int exact_degree = 0;  // integrates polynomials up to this total degree exactly
  std::vector<Vector> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  /// |Σ weights − |S^{n−1}|| relative to the sphere volume.
  double constant_error() const;
};

/// Product rule: uniform circle grid for S¹, and for higher spheres a
/// Gauss–Jacobi rule in the last coordinate (weight (1−t²)^{(n−3)/2})
/// times the rule on the equatorial sphere. Throws for n < 2.
SphereQuadrature product_quadrature(int n, int degree);

/// Gauss–Jacobi nodes and weights for the weight (1−t)^α(1+t)^β on [−1, 1]
/// via the Golub–Welsch eigenvalue method.
void gauss_jacobi(int points, double alpha, double beta, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace frameflow::harmonics
