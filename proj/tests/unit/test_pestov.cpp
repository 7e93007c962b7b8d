#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "frameflow/pestov/pestov.hpp"
#include "frameflow/pestov/threshold.hpp"

using namespace frameflow::pestov;

namespace {

// Smallest δ on a uniform grid for which no odd k ≥ target with k ≤ k₀+1
// has −δk² + kq ≥ 0; k₀ found by direct scan of the bound.
double scan_threshold(double q, int target, double step) {
  for (double delta = step;; delta += step) {
    int last_positive = 0;
    for (int k = 1; k < 1000; ++k) {
      if (-delta * k * k + k * q > 0.0) last_positive = k;
    }
    const int top = last_positive + 2;
    bool excluded = true;
    for (int k = (target % 2 == 1 ? target : target + 1); k <= top; k += 2) {
      if (-delta * k * k + k * q >= 0.0) excluded = false;
    }
    if (excluded) return delta;
  }
}

}  // namespace

TEST_CASE("coefficient examples") {
  auto c = pestov_coeffs(3, 2);
  CHECK(c.lambda_minus_exact == Rational(9, 2));
  CHECK(c.lambda_plus_exact == Rational(14, 3));
  c = pestov_coeffs(7, 3);
  CHECK(c.lambda_minus_exact == Rational(72, 7));
  CHECK(c.lambda_plus_exact == Rational(39, 4));
  CHECK(c.lambda_minus == doctest::Approx(72.0 / 7.0));
  CHECK(pestov_coeffs(5, 0).lambda_plus_exact == Rational(0));
  CHECK_THROWS_AS(pestov_coeffs(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(pestov_coeffs(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(pestov_coeffs(4, -1), std::invalid_argument);
}

TEST_CASE("coefficient positivity grid") {
  for (int n = 3; n <= 200; ++n) {
    for (int k = 0; k <= 50; ++k) {
      if (n + k == 3) continue;
      const auto c = pestov_coeffs(n, k);
      // cross-multiplied form of the closed expressions
      CHECK(c.lambda_minus_exact * (n + k - 3) == Rational((n + k - 2) * (n + 2 * k - 4)));
      CHECK(c.lambda_plus_exact * (k + 1) == Rational(k * (n + 2 * k)));
      CHECK(c.lambda_plus >= 0.0);
      if (k >= 1 || n >= 5) {
        CHECK(c.lambda_minus > 0.0);
      } else {
        // n = 4, k = 0: the factor n + 2k − 4 vanishes
        CHECK(c.lambda_minus == 0.0);
      }
    }
  }
}

TEST_CASE("curvature bound examples and decay") {
  CHECK(curvature_bound(0, {0.7, 2.0}) == 0.0);
  CHECK(curvature_bound(3, {1.0, 3.0}) == 0.0);
  CHECK(curvature_bound(10, {0.5, 3.0}) == doctest::Approx(-20.0));
  CHECK_THROWS_AS(curvature_bound(-1, {1.0, 1.0}), std::invalid_argument);
  for (double q : {0.5, 2.0, 7.0}) {
    for (double d : {0.1, 0.5, 1.0}) {
      const CurvatureBoundParams p{d, q};
      for (int k = static_cast<int>(std::floor(q / (2 * d))) + 1; k < 500; ++k) {
        CHECK(curvature_bound(k + 1, p) < curvature_bound(k, p));
      }
      CHECK(curvature_bound(100000, p) < -1e8 * d);
    }
  }
}

TEST_CASE("cutoff degree examples") {
  CHECK(cutoff_degree({0.3, 0.0}) == 1);
  CHECK(cutoff_degree({1.0, 3.0}) == 3);
  CHECK(cutoff_degree({0.25, 1.0}) == 4);
  CHECK(cutoff_degree({0.1, 0.3}) == 3);  // q/δ is 3 only up to rounding
  CHECK_THROWS_AS(cutoff_degree({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(cutoff_degree({1.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(cutoff_degree({0.5, -1.0}), std::invalid_argument);
}

TEST_CASE("cutoff degree is monotone on a 100x100 grid and matches a scan") {
  std::vector<std::vector<int>> k0(100, std::vector<int>(100));
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double delta = (i + 1) / 100.0;
      const double q = j * 0.05;
      k0[i][j] = cutoff_degree({delta, q});
      const auto f = quadratic_bound(q);
      CHECK(cutoff_degree(f, delta) == k0[i][j]);
      CHECK(curvature_bound(k0[i][j], {delta, q}) <= 0.0);
      if (k0[i][j] > 1) CHECK(curvature_bound(k0[i][j] - 1, {delta, q}) > 0.0);
    }
  }
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      if (i + 1 < 100) CHECK(k0[i + 1][j] <= k0[i][j]);
      if (j + 1 < 100) CHECK(k0[i][j + 1] >= k0[i][j]);
    }
  }
}

TEST_CASE("max invariant degree examples") {
  CHECK(max_invariant_degree({1.0, 3.0}, Parity::odd) == 3);
  CHECK(max_invariant_degree({0.5, 0.0}, Parity::odd) == 1);
  CHECK(max_invariant_degree({0.25, 1.0}, Parity::any) == 5);
  CHECK(max_invariant_degree({0.25, 1.0}, Parity::even) == 4);
  CHECK(parity_from_string("odd") == Parity::odd);
  CHECK(to_string(Parity::even) == "even");
  CHECK_THROWS_AS(parity_from_string("both"), std::invalid_argument);
}

TEST_CASE("odd max degree is odd, and 1 when the cutoff is at most 2") {
  for (int i = 1; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const CurvatureBoundParams p{i / 100.0, j * 0.07};
      const int d = max_invariant_degree(p, Parity::odd);
      CHECK((d == 0 || d % 2 == 1));
      CHECK(d <= cutoff_degree(p) + 1);
      if (cutoff_degree(p) <= 2) CHECK(d == 1);
      CHECK(max_invariant_degree(p, Parity::any) >= d);
    }
  }
}

TEST_CASE("cascade prover on random sequences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> len(4, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = len(rng);
    const int k0 = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<double> a(static_cast<std::size_t>(n));
    for (int k = 0; k < k0; ++k) a[static_cast<std::size_t>(k)] = u(rng);
    const int kind = trial % 3;
    if (kind == 0) {
      // hypotheses hold: chains nondecreasing with a vanishing tail, so zero
      for (int k = k0; k < n; ++k) a[static_cast<std::size_t>(k)] = 0.0;
      const auto r = cascade_prove(a, k0, 1e-12);
      CHECK(r.hypotheses_hold);
      CHECK(r.vanishes);
    } else if (kind == 1) {
      // nondecreasing chains with a positive tail: hypotheses fail
      double level = 0.0;
      for (int k = k0; k < n; ++k) {
        level += u(rng) + 1e-3;
        a[static_cast<std::size_t>(k)] = level;
      }
      const auto r = cascade_prove(a, k0, 1e-12);
      CHECK_FALSE(r.hypotheses_hold);
      CHECK(r.first_violation == -1);
    } else {
      // decaying to zero without monotone chains: the first drop is reported
      for (int k = k0; k < n; ++k) a[static_cast<std::size_t>(k)] = 1.0 / (k + 1.0);
      const auto r = cascade_prove(a, k0, 1.0);
      if (k0 + 2 < n) {
        CHECK_FALSE(r.hypotheses_hold);
        CHECK(r.first_violation == k0);
      } else {
        CHECK(r.hypotheses_hold);
      }
    }
  }
  CHECK_THROWS_AS(cascade_prove({1.0, -0.5, 0.0}, 0, 1e-9), std::invalid_argument);
}

TEST_CASE("pinching threshold") {
  CHECK(pinching_threshold(0.0) == 0.0);
  CHECK(pinching_threshold(-1.0) == 0.0);
  CHECK(pinching_threshold(1e-9) < 1e-8);
  for (double q : {0.1, 0.5, 1.0, 1.491, 2.0, 4.0}) {
    const double t = pinching_threshold(q);
    // excluding odd degrees ≥ 3 needs F(3) < 0 at the top admissible degree: δ > q/3
    CHECK(std::abs(t - q / 3.0) < 2e-9);
    CHECK(std::abs(t - scan_threshold(q, 3, 1e-4)) <= 1e-4 + 1e-9);
    CHECK(std::abs(pinching_threshold(2.0 * q) - 2.0 * t) < 5e-9);
    double prev = t;
    for (int target = 4; target <= 9; ++target) {
      const double next = pinching_threshold(q, target);
      CHECK(next <= prev + 1e-9);
      prev = next;
    }
  }
}

TEST_CASE("calibration reproduces the anchors") {
  for (double anchor : {0.277, 0.497, 0.557}) {
    const double q = calibrate_q(anchor);
    CHECK(std::abs(pinching_threshold(q) - anchor) < 2e-9);
  }
  CHECK(calibrate_q(0.497) == doctest::Approx(1.491).epsilon(1e-8));
  CHECK(QEntry{QEntry::Mode::direct, 2.5}.resolve() == 2.5);
  CHECK_THROWS_AS(calibrate_q(0.0), std::invalid_argument);
}

TEST_CASE("threshold curve") {
  const auto curve = threshold_curve(3, 150, default_q_table());
  REQUIRE(curve.size() == 148);
  for (const auto& r : curve) {
    CHECK(r.delta_threshold <= 1.0);
    if (r.n % 2 == 1 && r.n != 7) {
      CHECK(r.delta_threshold == 0.0);
      CHECK(r.case_tag == 0);
      CHECK(r.cases.empty());
    }
    if (r.k_cutoff >= 1) {
      REQUIRE(r.curve.size() > static_cast<std::size_t>(r.k_cutoff));
      CHECK(r.curve[static_cast<std::size_t>(r.k_cutoff)].second <= 0.0);
      if (r.k_cutoff >= 2) CHECK(r.curve[static_cast<std::size_t>(r.k_cutoff - 1)].second > 0.0);
    }
  }
  const auto at = [&](int n) { return curve[static_cast<std::size_t>(n - 3)]; };
  CHECK(std::abs(at(7).delta_threshold - 0.497) < 2e-9);
  CHECK(at(7).case_tag == 2);
  CHECK(std::abs(at(10).delta_threshold - 0.277) < 2e-9);
  CHECK(std::abs(at(12).delta_threshold - 0.557) < 2e-9);
  CHECK(at(146).delta_threshold < at(148).delta_threshold);
  CHECK(at(150).delta_threshold < at(148).delta_threshold);

  const auto big = threshold_curve(134, 134, default_q_table());
  REQUIRE(big.front().cases.size() == 2);
  CHECK(big.front().case_tag == 3);
  CHECK(big.front().delta_threshold ==
        std::max(big.front().cases[0].delta_threshold, big.front().cases[1].delta_threshold));

  QTable partial = default_q_table();
  partial.erase(4);
  partial.erase(3);
  try {
    threshold_curve(3, 20, partial);
    FAIL("missing cases accepted");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find('3') != std::string::npos);
    CHECK(msg.find('4') != std::string::npos);
  }
  CHECK_NOTHROW(threshold_curve(5, 7, partial));
}
