#pragma once

#include <map>
#include <vector>

#include "frameflow/lie.hpp"

namespace frameflow::harmonics {

using MultiIndex = std::vector<int>;  // sorted slot indices, length k
using Exponent = std::vector<int>;    // monomial exponents, length n

/// Homogeneous polynomial in n variables, sparse by exponent vector.
class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Exponent, double>& terms() const { return terms_; }
  void add(const Exponent& e, double c);
  double operator()(const Vector& x) const;

  Polynomial laplacian() const;
  /// Multiplication by |x|².
  Polynomial times_radius_squared() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(double s) const;
  int degree() const;  // total degree of the first term, −1 if empty

 private:
  int n_;
  std::map<Exponent, double> terms_;
};

/// Symmetric k-tensor on R^n stored by sorted multi-index.
class SymTensor {
 public:
  SymTensor(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<MultiIndex, double>& entries() const { return entries_; }

  /// Any index order; sorted internally.
  double get(MultiIndex idx) const;
  void set(MultiIndex idx, double v);

  /// Contraction of two slots (all pairs agree by symmetry); degree k−2.
  SymTensor trace() const;
  /// Largest absolute entry of the trace, 0 for k < 2.
  double max_contraction() const;
  double frobenius_norm() const;  // over all k-index arrays, not only sorted ones

  /// p(x) = K(x, …, x) = Σ_α multinomial(α)·K_α x^α.
  Polynomial polynomial() const;
  static SymTensor from_polynomial(const Polynomial& p, int k);

  SymTensor operator-(const SymTensor& o) const;

 private:
  int n_;
  int k_;
  std::map<MultiIndex, double> entries_;
};

/// Number of distinct orderings of a sorted multi-index.
double multinomial(const MultiIndex& idx);
Exponent exponent_of(const MultiIndex& idx, int n);
MultiIndex multi_index_of(const Exponent& e);

/// Harmonic part of a homogeneous degree-k polynomial,
///   h = Σ_j (−1)^j |x|^{2j} Δ^j p / (2^j j! ∏_{i=1..j}(n + 2k − 2 − 2i)).
Polynomial harmonic_projection(const Polynomial& p, int k);

/// Orthogonal projection onto trace-free tensors: the harmonic projection of
/// the associated polynomial. Throws std::invalid_argument for k > 6 or n > 150.
SymTensor trace_free_project(const SymTensor& t);

/// K(v, …, v)/k!. Throws std::invalid_argument unless |v| = 1 within 1e−12.
double pi_star(const SymTensor& t, const Vector& v);

/// Random symmetric tensor with entries uniform in [−1, 1] on sorted indices.
SymTensor random_sym_tensor(int n, int k, Rng& rng);

/// ∫_{S^{n−1}} x^γ dσ, exact via Gamma functions (0 unless every γ_i is even).
double sphere_moment(const Exponent& gamma);
double sphere_volume(int n);

/// ∫_{S^{n−1}} p q dσ for polynomials, exact.
double sphere_inner(const Polynomial& p, const Polynomial& q);

}  // namespace frameflow::harmonics
