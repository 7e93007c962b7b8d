#include "frameflow/pestov/pestov.hpp"

#include <boost/rational.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frameflow::pestov {

PestovCoefficients pestov_coeffs(int n, int k) {
  if (n < 3) throw std::invalid_argument("pestov_coeffs needs n >= 3");
  if (k < 0) throw std::invalid_argument("pestov_coeffs needs k >= 0");
  if (n + k == 3) throw std::invalid_argument("lambda_minus has a pole at n + k = 3");
  PestovCoefficients c;
  c.n = n;
  c.k = k;
  const long long nn = n;
  const long long kk = k;
  c.lambda_minus_exact = Rational((nn + kk - 2) * (nn + 2 * kk - 4), nn + kk - 3);
  c.lambda_plus_exact = Rational(kk * (nn + 2 * kk), kk + 1);
  c.lambda_minus = boost::rational_cast<double>(c.lambda_minus_exact);
  c.lambda_plus = boost::rational_cast<double>(c.lambda_plus_exact);
  return c;
}

void CurvatureBoundParams::validate() const {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
  if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("q must be finite and nonnegative");
}

BoundFunction quadratic_bound(double q) {
  return [q](int k, double delta) { return -delta * k * k + k * q; };
}

double curvature_bound(int k, const CurvatureBoundParams& p) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  return -p.delta * k * k + k * p.q;
}

namespace {

// k₀ for the quadratic bound without range validation; used by the
// threshold solver when probing δ > 1.
int quadratic_cutoff(double delta, double q) {
  if (q <= 0.0) return 1;
  const double ratio = q / delta;
  // beyond int range every practical degree is admissible
  if (ratio > 1e9) return 1'000'000'001;
  const auto f = quadratic_bound(q);
  int k = std::max(1, static_cast<int>(std::ceil(ratio)));
  // ceil of a rounded quotient can be off by one at integral q/δ
  while (k > 1 && f(k - 1, delta) <= 0.0) --k;
  while (f(k, delta) > 0.0) ++k;
  return k;
}

int largest_with_parity(int d, Parity parity) {
  if (parity == Parity::any) return std::max(d, 0);
  const int want = parity == Parity::odd ? 1 : 0;
  while (d >= 0 && (d % 2) != want) --d;
  return std::max(d, 0);
}

int max_degree_from_cutoff(int k0, const BoundFunction& f, double delta, Parity parity) {
  const int d = k0 + 1;
  if (parity != Parity::odd) return largest_with_parity(d, parity);
  for (int k = largest_with_parity(d, Parity::odd); k >= 3; k -= 2) {
    if (f(k, delta) >= 0.0) return k;
  }
  return 1;
}

}  // namespace

int max_invariant_degree_unchecked(double delta, double q, Parity parity) {
  return max_degree_from_cutoff(quadratic_cutoff(delta, q), quadratic_bound(q), delta, parity);
}

int cutoff_degree(const CurvatureBoundParams& p) {
  p.validate();
  return quadratic_cutoff(p.delta, p.q);
}

int cutoff_degree(const BoundFunction& f, double delta) {
  int last_positive = 0;
  for (int k = 1; k <= kScanLimit; ++k) {
    if (f(k, delta) > 0.0) last_positive = k;
  }
  if (last_positive == kScanLimit) throw std::invalid_argument("bound function is not eventually nonpositive");
  return last_positive + 1;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::odd:
      return "odd";
    case Parity::even:
      return "even";
    case Parity::any:
      return "any";
  }
  return "any";
}

Parity parity_from_string(const std::string& s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  if (s == "any") return Parity::any;
  throw std::invalid_argument("unknown parity '" + s + "'");
}

int max_invariant_degree(const CurvatureBoundParams& p, Parity parity) {
  p.validate();
  return max_invariant_degree_unchecked(p.delta, p.q, parity);
}

int max_invariant_degree(const BoundFunction& f, double delta, Parity parity) {
  return max_degree_from_cutoff(cutoff_degree(f, delta), f, delta, parity);
}

CascadeResult cascade_prove(const std::vector<double>& a, int k0, double tail_eps) {
  if (k0 < 0) throw std::invalid_argument("k0 must be nonnegative");
  CascadeResult r;
  const int n = static_cast<int>(a.size());
  if (k0 >= n) {
    r.hypotheses_hold = true;
    r.vanishes = true;
    return r;
  }
  for (int k = 0; k < n; ++k) {
    if (a[static_cast<std::size_t>(k)] < 0.0) throw std::invalid_argument("sequence must be nonnegative");
  }
  bool ok = true;
  for (int k = k0; k + 2 < n; ++k) {
    if (a[static_cast<std::size_t>(k)] > a[static_cast<std::size_t>(k + 2)]) {
      ok = false;
      r.first_violation = k;
      break;
    }
  }
  // Chain tails: the last sampled element of each parity class.
  double tail = 0.0;
  for (int k = std::max(k0, n - 2); k < n; ++k) tail = std::max(tail, a[static_cast<std::size_t>(k)]);
  r.hypotheses_hold = ok && tail < tail_eps;
  if (!r.hypotheses_hold) return r;
  // Monotone chains bounded by a tail below every resolvable level are zero.
  r.vanishes = true;
  for (int k = k0; k < n; ++k) {
    if (a[static_cast<std::size_t>(k)] > tail) r.vanishes = false;
  }
  return r;
}

}  // namespace frameflow::pestov
