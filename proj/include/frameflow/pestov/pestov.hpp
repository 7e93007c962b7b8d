#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace frameflow::pestov {

using Rational = boost::rational<long long>;

/// Degree-k coefficients of the twisted Pestov identity in dimension n:
///   λ− = (n+k−2)(n+2k−4)/(n+k−3),  λ+ = k(n+2k)/(k+1).
struct PestovCoefficients {
  int n = 0;
  int k = 0;
  Rational lambda_minus_exact;
  Rational lambda_plus_exact;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
};

/// Exact rational evaluation. Throws std::invalid_argument for n < 3, k < 0,
/// or n + k = 3 (pole of λ−).
PestovCoefficients pestov_coeffs(int n, int k);

/// Pinching δ ∈ (0, 1] and curvature constant q ≥ 0 of the twisted bundle.
struct CurvatureBoundParams {
  double delta = 1.0;
  double q = 0.0;

  /// Throws std::invalid_argument outside the admissible range.
  void validate() const;
};

/// Upper bound F(k, δ) for the curvature term at degree k. The default
/// instance is −δk² + kq; any function that is eventually nonpositive in k
/// may be substituted.
using BoundFunction = std::function<double(int k, double delta)>;
BoundFunction quadratic_bound(double q);

/// −δk² + k·q.
double curvature_bound(int k, const CurvatureBoundParams& p);

/// Smallest integer k ≥ 1 with F(j, δ) ≤ 0 for every j ≥ k.
int cutoff_degree(const CurvatureBoundParams& p);
/// Same for a general bound function, scanning degrees up to kScanLimit.
int cutoff_degree(const BoundFunction& f, double delta);
inline constexpr int kScanLimit = 100000;

enum class Parity { odd, even, any };
std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Largest degree of the requested parity an invariant section can carry.
///
/// The cascade gives X₋f_k = 0 for k ≥ k₀ and f_k = 0 for k ≥ k₀+2, so the
/// degree is at most D = k₀+1. For `any` and `even` this returns the largest
/// such degree ≤ D (0 if none). For `odd` the top degree must in addition
/// satisfy F(k, δ) ≥ 0, since a nonzero top component with F(k, δ) < 0 is
/// ruled out by the identity at that degree; the result is the largest odd
/// k ≤ D with F(k, δ) ≥ 0, and 1 if there is none.
int max_invariant_degree(const CurvatureBoundParams& p, Parity parity);
int max_invariant_degree(const BoundFunction& f, double delta, Parity parity);
/// Quadratic-bound version without the δ ≤ 1 check, for solvers probing past 1.
int max_invariant_degree_unchecked(double delta, double q, Parity parity);

/// Outcome of the cascade argument on a sampled nonnegative sequence a_k
/// (a_k standing for ‖X₋f_k‖²).
struct CascadeResult {
  bool hypotheses_hold = false;  // a_k ≤ a_{k+2} for k ≥ k₀ and tail below tail_eps
  bool vanishes = false;         // concluded a_k = 0 for all k ≥ k₀
  int first_violation = -1;      // index breaking monotonicity, or −1
};

/// Each parity chain a_{k₀+j}, a_{k₀+j+2}, … is nondecreasing and tends to 0,
/// hence identically 0. The proof is checked on the finite sample: the
/// hypotheses are monotonicity on every chain and a last value per chain
/// below tail_eps; the conclusion is that every sampled a_k (k ≥ k₀) is at
/// most the chain's last value.
CascadeResult cascade_prove(const std::vector<double>& a, int k0, double tail_eps);

}  // namespace frameflow::pestov
