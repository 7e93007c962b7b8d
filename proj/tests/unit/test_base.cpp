#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "frameflow/base/anosov_rates.hpp"
#include "frameflow/base/disk.hpp"
#include "frameflow/base/torus.hpp"
#include "frameflow/errors.hpp"
#include "frameflow/lie.hpp"

using namespace frameflow;
using namespace frameflow::base;

namespace {

// RK4 on z'' = −2 z̄ z'²/(1 − |z|²), the unit-speed geodesic equation of
// 4|dz|²/(1 − |z|²)², started at unit speed in direction `angle`.
std::pair<Complex, double> geodesic_ode(Complex z, double angle, double t, int steps) {
  Complex v = std::polar((1.0 - std::norm(z)) / 2.0, angle);
  auto acc = [](Complex p, Complex q) { return -2.0 * std::conj(p) * q * q / (1.0 - std::norm(p)); };
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const Complex k1z = v, k1v = acc(z, v);
    const Complex k2z = v + 0.5 * h * k1v, k2v = acc(z + 0.5 * h * k1z, v + 0.5 * h * k1v);
    const Complex k3z = v + 0.5 * h * k2v, k3v = acc(z + 0.5 * h * k2z, v + 0.5 * h * k2v);
    const Complex k4z = v + h * k3v, k4v = acc(z + h * k3z, v + h * k3v);
    z += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return {z, std::arg(v)};
}

UnitTangent random_tangent(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng));
  return {DiskPoint(std::polar(r, uniform(rng, 0.0, 2.0 * M_PI))), uniform(rng, 0.0, 2.0 * M_PI)};
}

}  // namespace

TEST_CASE("cat map examples") {
  const auto a = ToralAutomorphism::cat_map();
  const auto origin = cat_step(TorusPoint(0.0, 0.0), a);
  CHECK(origin.x() == 0.0);
  CHECK(origin.y() == 0.0);
  const auto p = cat_step(TorusPoint(0.5, 0.5), a);
  CHECK(p.x() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.y() == doctest::Approx(0.0).epsilon(1e-15));
  const auto& u = a.unstable_dir();
  CHECK(u(1) / u(0) == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("eigen data residuals") {
  for (const auto& a : {ToralAutomorphism::cat_map(), ToralAutomorphism(3, 2, 1, 1), ToralAutomorphism(1, 1, 2, 3)}) {
    const Eigen::Matrix2d m = a.matrix_d();
    CHECK((m * a.unstable_dir() - a.unstable_eigenvalue() * a.unstable_dir()).norm() < 1e-12);
    CHECK((m * a.stable_dir() - a.stable_eigenvalue() * a.stable_dir()).norm() < 1e-12);
    CHECK(a.unstable_eigenvalue() > 1.0);
    CHECK(a.unstable_dir().norm() == doctest::Approx(1.0).epsilon(1e-15));
  }
  // symmetric matrix: eigen-directions orthogonal
  const auto cat = ToralAutomorphism::cat_map();
  CHECK(std::abs(cat.unstable_dir().dot(cat.stable_dir())) < 1e-12);
}

TEST_CASE("toral automorphism rejects bad matrices") {
  CHECK_THROWS_AS(ToralAutomorphism(2, 1, 1, 2), std::invalid_argument);  // det 3
  CHECK_THROWS_AS(ToralAutomorphism(1, 1, 0, 1), std::invalid_argument);  // trace 2, parabolic
  CHECK_THROWS_AS(ToralAutomorphism(0, -1, 1, 0), std::invalid_argument);  // elliptic
  CHECK_THROWS_AS(ToralAutomorphism(-2, 1, -1, 0), std::invalid_argument);  // trace −2
}

TEST_CASE("torus coordinates stay in [0,1)") {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint p(uniform(rng, -50.0, 50.0), uniform(rng, -50.0, 50.0));
    CHECK((p.x() >= 0.0 && p.x() < 1.0));
    CHECK((p.y() >= 0.0 && p.y() < 1.0));
  }
  const TorusPoint edge(-1e-18, 1.0);
  CHECK(edge.x() < 1.0);
  CHECK(edge.y() == 0.0);
  CHECK_THROWS_AS(TorusPoint(NAN, 0.0), std::invalid_argument);
}

TEST_CASE("cat map preserves Lebesgue measure on a 16x16 grid") {
  const auto a = ToralAutomorphism::cat_map();
  Rng rng(2024);
  const int n = 1000000;
  std::vector<int> counts(256, 0);
  for (int i = 0; i < n; ++i) {
    const auto q = cat_step(TorusPoint(uniform(rng), uniform(rng)), a);
    ++counts[static_cast<std::size_t>(static_cast<int>(q.x() * 16) * 16 + static_cast<int>(q.y() * 16))];
  }
  const double p = 1.0 / 256.0;
  const double mean = n * p;
  const double sigma = std::sqrt(n * p * (1.0 - p));
  double worst = 0.0;
  for (int c : counts) worst = std::max(worst, std::abs(c - mean) / sigma);
  CHECK(worst < 4.0);
}

TEST_CASE("homoclinic points") {
  const auto a = ToralAutomorphism::cat_map();
  const auto pts = homoclinic_points(a, 1);
  CHECK(pts.size() == 8);
  for (const auto& h : pts) {
    CHECK(torus_distance(h.point, TorusPoint(0.0, 0.0)) > 1e-6);
    // plain iteration of the torus map, independent of the closed form
    TorusPoint fwd = h.point;
    TorusPoint bwd = h.point;
    for (int k = 0; k < 20; ++k) {
      fwd = cat_step(fwd, a);
      bwd = cat_step_inverse(bwd, a);
    }
    CHECK(torus_distance(fwd, TorusPoint(0.0, 0.0)) < 1e-4);
    CHECK(torus_distance(bwd, TorusPoint(0.0, 0.0)) < 1e-4);
    TorusPoint it = h.point;
    for (int k = 1; k <= 10; ++k) {
      it = cat_step(it, a);
      CHECK(torus_distance(it, h.orbit(a, k)) < 1e-9);
    }
    it = h.point;
    for (int k = 1; k <= 10; ++k) {
      it = cat_step_inverse(it, a);
      CHECK(torus_distance(it, h.orbit(a, -k)) < 1e-9);
    }
    // lift lies on both leaves: t·u − r·s = lattice vector
    const Eigen::Vector2d gap = h.unstable_coord * a.unstable_dir() - h.stable_coord * a.stable_dir();
    CHECK(gap(0) == doctest::Approx(h.lattice[0]).epsilon(1e-12));
    CHECK(gap(1) == doctest::Approx(h.lattice[1]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(homoclinic_points(a, 0), std::invalid_argument);
}

TEST_CASE("homoclinic coordinates are odd under m -> -m") {
  const auto a = ToralAutomorphism::cat_map();
  const auto pts = homoclinic_points(a, 3);
  int pairs = 0;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (q.lattice[0] == -p.lattice[0] && q.lattice[1] == -p.lattice[1]) {
        CHECK(q.unstable_coord == -p.unstable_coord);
        CHECK(q.stable_coord == -p.stable_coord);
        ++pairs;
      }
    }
  }
  CHECK(pairs == static_cast<int>(pts.size()));
}

TEST_CASE("stable direction contracts monotonically") {
  // 100-digit oracle: exact stable eigenvector (1, −φ) of [[2,1],[1,1]] iterated 50 times
  using Big = boost::multiprecision::cpp_bin_float_100;
  const Big phi = (1 + boost::multiprecision::sqrt(Big(5))) / 2;
  Big x = 1, y = -phi;
  Big prev = boost::multiprecision::sqrt(x * x + y * y);
  const Big mu = 1 / (phi * phi);
  for (int k = 0; k < 50; ++k) {
    const Big nx = 2 * x + y;
    const Big ny = x + y;
    x = nx;
    y = ny;
    const Big norm = boost::multiprecision::sqrt(x * x + y * y);
    CHECK(norm < prev);
    CHECK(static_cast<double>(norm / prev) == doctest::Approx(static_cast<double>(mu)).epsilon(1e-14));
    prev = norm;
  }
  const auto a = ToralAutomorphism::cat_map();
  const Big ox = 1 / boost::multiprecision::sqrt(1 + phi * phi);
  const Big oy = -phi * ox;
  CHECK(std::abs(a.stable_dir()(0) - static_cast<double>(ox)) < 1e-15);
  CHECK(std::abs(a.stable_dir()(1) - static_cast<double>(oy)) < 1e-15);
  CHECK(a.stable_eigenvalue() == doctest::Approx(static_cast<double>(mu)).epsilon(1e-15));
  // the closed-form forward orbit of a homoclinic point shrinks monotonically
  const auto h = homoclinic_points(a, 1).front();
  double last = 1.0;
  for (int k = 3; k <= 50; ++k) {
    const double d = torus_distance(h.orbit(a, k), TorusPoint(0.0, 0.0));
    CHECK(d < last);
    last = d;
  }
}

TEST_CASE("anosov rates") {
  const auto cat = anosov_rate_check(ToralAutomorphism::cat_map(), 16);
  CHECK(cat.lambda_est == doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-6));
  CHECK(cat.lambda_est == doctest::Approx(0.9624).epsilon(1e-4));
  CHECK(cat.c_est >= 1.0 - 1e-9);
  const auto disk = anosov_rate_check(DiskFlowModel{}, 16);
  CHECK(std::abs(disk.lambda_est - 1.0) < 1e-3);
}

TEST_CASE("disk point and isometry invariants") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(MobiusIsometry(Complex(2.0, 0.0), Complex(0.0, 0.0)), std::invalid_argument);
  CHECK_NOTHROW(MobiusIsometry(Complex(std::cosh(0.3), 0.0), Complex(0.0, std::sinh(0.3))));
  CHECK(UnitTangent(DiskPoint(0.0, 0.0), -0.5).angle() == doctest::Approx(2.0 * M_PI - 0.5));
  CHECK(UnitTangent(DiskPoint(0.0, 0.0), 4.0 * M_PI).angle() == doctest::Approx(0.0));
  const auto t = MobiusIsometry::translation(0.7, 1.3);
  CHECK(std::abs(t.apply(Complex(0.0, 0.0)) - std::polar(std::tanh(0.65), 0.7)) < 1e-15);
  CHECK((t * t.inverse()).distance(MobiusIsometry::identity()) < 1e-14);
}

TEST_CASE("geodesic flow through the origin") {
  for (double t : {0.0, 0.5, 1.0, 3.0, -2.0}) {
    const auto s = geodesic_flow(UnitTangent(DiskPoint(0.0, 0.0), 0.0), t);
    CHECK(s.z().real() == doctest::Approx(std::tanh(t / 2.0)).epsilon(1e-14));
    CHECK(std::abs(s.z().imag()) < 1e-15);
    CHECK(std::abs(angle_difference(s.angle(), 0.0)) < 1e-14);
  }
}

TEST_CASE("geodesic flow matches the geodesic ODE") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_tangent(rng, 0.6);
    const double t = uniform(rng, 0.2, 2.0);
    const auto exact = geodesic_flow(s, t);
    const auto [z, angle] = geodesic_ode(s.z(), s.angle(), t, 4000);
    CHECK(std::abs(exact.z() - z) < 1e-9);
    CHECK(std::abs(angle_difference(exact.angle(), angle)) < 1e-8);
  }
}

TEST_CASE("geodesic flow group property and isometry") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_tangent(rng, 0.7);
    const double t = uniform(rng, -5.0, 5.0);
    const double u = uniform(rng, -5.0, 5.0);
    const auto a = geodesic_flow(geodesic_flow(s, t), u);
    const auto b = geodesic_flow(s, t + u);
    CHECK(hyperbolic_distance(a.base(), b.base()) < 1e-10);
    CHECK(std::abs(angle_difference(a.angle(), b.angle())) < 1e-10);
    const auto back = geodesic_flow(geodesic_flow(s, t), -t);
    CHECK(std::abs(back.z() - s.z()) < 1e-10);
    CHECK(std::abs(angle_difference(back.angle(), s.angle())) < 1e-10);
    CHECK(geodesic_flow(s, 0.0).z() == s.z());

    // points along one geodesic keep their pairwise distances
    const auto p = geodesic_flow(s, 0.3).base();
    const auto q = geodesic_flow(s, 1.1).base();
    const double before = hyperbolic_distance(p, q);
    const auto p2 = geodesic_flow(UnitTangent(p, geodesic_flow(s, 0.3).angle()), t).base();
    const auto q2 = geodesic_flow(UnitTangent(q, geodesic_flow(s, 1.1).angle()), t).base();
    CHECK(hyperbolic_distance(p2, q2) == doctest::Approx(before).epsilon(1e-10));
  }
}

TEST_CASE("regular octagon") {
  const auto dom = FuchsianDomain::regular_octagon();
  CHECK(dom.generators().size() == 8);
  CHECK(dom.pairing_residual() < 1e-9);
  CHECK(dom.relation_residual() < 1e-6);
  for (int k = 0; k < 8; ++k) CHECK(dom.pairing_table()[static_cast<std::size_t>(k)] == (k + 4) % 8);
  // interior angles π/4: the side circles meet at angle π/4 (or 3π/4)
  for (int k = 0; k < 8; ++k) {
    const Complex v = dom.vertices()[static_cast<std::size_t>(k)];
    const auto [c0, r0] = dom.side_circle(k);
    const auto [c1, r1] = dom.side_circle((k + 1) % 8);
    CHECK(std::abs(v - c0) == doctest::Approx(r0).epsilon(1e-12));
    CHECK(std::abs(v - c1) == doctest::Approx(r1).epsilon(1e-12));
    const double cosang = std::real((v - c0) * std::conj(v - c1)) / (r0 * r1);
    CHECK(std::abs(cosang) == doctest::Approx(std::cos(M_PI / 4.0)).epsilon(1e-12));
  }
  // side k is at hyperbolic distance inradius from the origin
  const auto [c, r] = dom.side_circle(0);
  CHECK(hyperbolic_distance(Complex(0.0, 0.0), Complex(c.real() - r, 0.0)) ==
        doctest::Approx(dom.inradius()).epsilon(1e-12));
  CHECK(dom.contains(Complex(0.0, 0.0)));
  CHECK_FALSE(dom.contains(Complex(0.95, 0.0)));
}

TEST_CASE("domain reduction") {
  const auto dom = FuchsianDomain::regular_octagon();
  const UnitTangent inside(DiskPoint(0.1, -0.2), 1.0);
  const auto r0 = reduce_to_domain(inside, dom);
  CHECK(r0.pairings == 0);
  CHECK(r0.element.distance(MobiusIsometry::identity()) == 0.0);
  CHECK(r0.state.z() == inside.z());

  Rng rng(77);
  const auto& gens = dom.generators();
  for (int i = 0; i < 10000; ++i) {
    // a state in the domain moved by a random word in the generators
    UnitTangent s = random_tangent(rng, 0.5);
    const int len = 1 + static_cast<int>(uniform(rng) * 4);
    for (int l = 0; l < len; ++l) s = gens[static_cast<std::size_t>(uniform(rng) * 8)].apply(s);
    const auto red = reduce_to_domain(s, dom);
    CHECK(dom.contains(red.state.z(), 1e-9));
    const auto back = red.element.apply(red.state);
    CHECK(std::abs(back.z() - s.z()) < 1e-9);
    CHECK(std::abs(angle_difference(back.angle(), s.angle())) < 1e-9);
  }

  UnitTangent s = random_tangent(rng, 0.3);
  for (int i = 0; i < 1000; ++i) {
    s = reduce_to_domain(geodesic_flow(s, 0.37), dom).state;
    CHECK(dom.contains(s.z(), 1e-9));
  }
  const UnitTangent far(DiskPoint(0.99, 0.0), 0.0);
  CHECK_THROWS_AS(reduce_to_domain(far, dom, 0), NumericalError);
}
