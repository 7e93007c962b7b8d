#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "frameflow/algebras.hpp"
#include "frameflow/extension/equidistribution.hpp"
#include "frameflow/extension/extension.hpp"
#include "frameflow/extension/parallel_transport.hpp"

using namespace frameflow;
using namespace frameflow::extension;
using base::Complex;
using base::DiskPoint;
using base::TorusPoint;
using base::UnitTangent;

namespace {

// Angle at a between the geodesics towards b and c, from the Möbius map that
// moves a to the origin.
// Orientation of the geodesic triangle: after moving a to 0, the sides from a are straight.
double geodesic_orientation(Complex a, Complex b, Complex c) {
  const Complex db = (b - a) / (1.0 - std::conj(a) * b);
  const Complex dc = (c - a) / (1.0 - std::conj(a) * c);
  return std::imag(std::conj(db) * dc) > 0 ? 1.0 : -1.0;
}

double vertex_angle(Complex a, Complex b, Complex c) {
  const Complex db = (b - a) / (1.0 - std::conj(a) * b);
  const Complex dc = (c - a) / (1.0 - std::conj(a) * c);
  return std::abs(std::arg(dc / db));
}

Complex random_disk_point(Rng& rng, double radius) {
  return std::polar(radius * std::sqrt(uniform(rng)), uniform(rng, 0.0, 2.0 * M_PI));
}

double op_norm(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); }

}  // namespace

TEST_CASE("trivial cocycle leaves the fiber unchanged") {
  const auto a = base::ToralAutomorphism::cat_map();
  TorusState s{TorusPoint(0.3, 0.4), Rotation::identity(3), 0};
  s = step_extension(s, trivial_cocycle(3, CocycleKind::discrete), a, 10000);
  CHECK(s.fiber.matrix() == Matrix::Identity(3, 3));
  FlowState f{UnitTangent(DiskPoint(0.1, 0.1), 0.3), Rotation::identity(3), 0};
  for (int i = 0; i < 100; ++i) f = step_extension(f, trivial_cocycle(3, CocycleKind::continuous), 0.1);
  CHECK((f.fiber.matrix() - Matrix::Identity(3, 3)).norm() < 1e-15);
}

TEST_CASE("projection property and kind mismatch") {
  Rng rng(1);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c = random_trig_cocycle(3, CocycleKind::discrete, rng);
  const TorusState s{TorusPoint(0.21, 0.77), Rotation::identity(3), 0};
  const auto out = step_extension(s, c, a, 5);
  TorusPoint b = s.base;
  for (int i = 0; i < 5; ++i) b = base::cat_step(b, a);
  CHECK(out.base.x() == b.x());
  CHECK(out.base.y() == b.y());
  const FlowState f{UnitTangent(DiskPoint(0.0, 0.0), 0.0), Rotation::identity(3), 0};
  CHECK_THROWS_AS(step_extension(f, c, 0.1), std::invalid_argument);
  const auto cont = random_trig_cocycle(3, CocycleKind::continuous, rng);
  CHECK_THROWS_AS(step_extension(s, cont, a, 1), std::invalid_argument);
  CHECK_THROWS_AS(cont(TorusPoint(0.0, 0.0)), std::invalid_argument);
  const auto fo = step_extension(f, cont, 0.7);
  CHECK(std::abs(fo.base.z() - base::geodesic_flow(f.base, 0.7).z()) == 0.0);
}

TEST_CASE("right equivariance") {
  Rng rng(2);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c = random_trig_cocycle(4, CocycleKind::discrete, rng);
  const auto cc = random_trig_cocycle(4, CocycleKind::continuous, rng);
  for (int i = 0; i < 20; ++i) {
    const auto r = random_rotation(4, rng);
    const auto g = random_rotation(4, rng);
    const TorusState s{TorusPoint(uniform(rng), uniform(rng)), r, 0};
    TorusState sg = s;
    sg.fiber = r * g;
    const auto lhs = step_extension(sg, c, a, 7);
    const auto rhs = step_extension(s, c, a, 7);
    CHECK((lhs.fiber.matrix() - (rhs.fiber * g).matrix()).norm() < 1e-10);

    const FlowState f{UnitTangent(DiskPoint(0.2, -0.1), uniform(rng, 0.0, 6.0)), r, 0};
    FlowState fg = f;
    fg.fiber = r * g;
    CHECK((step_extension(fg, cc, 0.5).fiber.matrix() - (step_extension(f, cc, 0.5).fiber * g).matrix()).norm() <
          1e-10);
  }
}

TEST_CASE("constant generator matches the matrix exponential") {
  Rng rng(3);
  Matrix x = Matrix::Zero(3, 3);
  for (const auto& b : so_basis(3)) x += uniform(rng, -1.0, 1.0) * b;
  FlowState s{UnitTangent(DiskPoint(0.0, 0.0), 0.0), Rotation::identity(3), 0};
  const auto c = constant_generator(Skew(x));
  for (int i = 0; i < 30; ++i) s = step_extension(s, c, 0.1);
  const Matrix oracle = (3.0 * x).exp();
  CHECK((s.fiber.matrix() - oracle).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("fourth-order fiber integration converges") {
  Rng rng(4);
  const auto c = random_trig_cocycle(3, CocycleKind::continuous, rng);
  const FlowState s{UnitTangent(DiskPoint(0.1, 0.2), 1.0), Rotation::identity(3), 0};
  StepOptions fine;
  fine.max_substep = 1e-3;
  const auto coarse = step_extension(s, c, 2.0);
  const auto ref = step_extension(s, c, 2.0, fine);
  CHECK((coarse.fiber.matrix() - ref.fiber.matrix()).norm() < 1e-8);
}

TEST_CASE("cocycle identity") {
  Rng rng(5);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c = random_trig_cocycle(3, CocycleKind::discrete, rng);
  for (int i = 0; i < 30; ++i) {
    const TorusPoint x(uniform(rng), uniform(rng));
    const int n = static_cast<int>(uniform(rng) * 20);
    const int m = static_cast<int>(uniform(rng) * 20);
    TorusPoint fm = x;
    for (int k = 0; k < m; ++k) fm = base::cat_step(fm, a);
    const Matrix lhs = cocycle_product(c, a, x, n + m).matrix();
    const Matrix rhs = cocycle_product(c, a, fm, n).matrix() * cocycle_product(c, a, x, m).matrix();
    CHECK((lhs - rhs).norm() < 1e-10);
    const Matrix inv = cocycle_product(c, a, fm, -m).matrix() * cocycle_product(c, a, x, m).matrix();
    CHECK(inv.isApprox(Matrix::Identity(3, 3), 1e-9));
  }
}

TEST_CASE("sampled difference quotients respect the Lipschitz bound") {
  Rng rng(6);
  for (int m : {3, 4}) {
    const auto c = random_trig_cocycle(m, CocycleKind::discrete, rng, 0.8);
    CHECK(std::isfinite(c.lipschitz()));
    for (int i = 0; i < 500; ++i) {
      const TorusPoint x(uniform(rng), uniform(rng));
      const TorusPoint y(x.x() + uniform(rng, -1e-3, 1e-3), x.y() + uniform(rng, -1e-3, 1e-3));
      const double d = base::torus_distance(x, y);
      if (d == 0.0) continue;
      CHECK(op_norm(c(x).matrix() - c(y).matrix()) / d <= c.lipschitz() * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("kahler-like cocycle commutes with J") {
  Rng rng(7);
  CHECK_THROWS_AS(kahler_like_cocycle(3, CocycleKind::discrete, rng), std::invalid_argument);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c2 = kahler_like_cocycle(2, CocycleKind::discrete, rng);
  const Matrix j2 = complex_structure(2);
  for (int i = 0; i < 100; ++i) {
    const Matrix v = c2(TorusPoint(uniform(rng), uniform(rng))).matrix();
    CHECK(max_abs(v * j2 - j2 * v) < 1e-15);
  }
  const auto c4 = kahler_like_cocycle(4, CocycleKind::discrete, rng);
  const Matrix j4 = complex_structure(4);
  const auto obs = complex_structure_observable(4);
  double worst = 0.0;
  bool sign_kept = true;
  visit_orbit(TorusState{TorusPoint(0.31, 0.62), Rotation::identity(4), 0}, c4, a, 100000,
              [&](long, const TorusState& s) {
                worst = std::max(worst, max_abs(s.fiber.matrix() * j4 - j4 * s.fiber.matrix()));
                sign_kept = sign_kept && obs.f(s.fiber) > 0.0;
              });
  CHECK(worst < 1e-9);
  CHECK(sign_kept);
}

TEST_CASE("equidistribution: frozen fiber") {
  Rng rng(8);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto r0 = random_rotation(3, rng);
  std::vector<TorusState> orbit;
  visit_orbit(TorusState{TorusPoint(0.1, 0.2), r0, 0}, trivial_cocycle(3, CocycleKind::discrete), a, 1999,
              [&](long, const TorusState& s) { orbit.push_back(s); });
  const auto est = fiber_equidistribution(orbit, {matrix_coefficient(0, 0)});
  CHECK(est[0].average == r0(0, 0));
  CHECK(est[0].standard_error == 0.0);
  CHECK_THROWS_AS(BirkhoffAccumulator({}, 5000), std::invalid_argument);
  CHECK_THROWS_AS(BirkhoffAccumulator({matrix_coefficient(0, 0)}, 999), std::invalid_argument);
}

TEST_CASE("equidistribution: generic SO(3) cocycle over the cat map") {
  Rng rng(9);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c = random_trig_cocycle(3, CocycleKind::discrete, rng);
  const long n = 1000000;
  BirkhoffAccumulator acc({matrix_coefficient(0, 0), matrix_coefficient(1, 2)}, n);
  double worst_orth = 0.0;
  visit_orbit(TorusState{TorusPoint(0.123, 0.456), Rotation::identity(3), 0}, c, a, n,
              [&](long i, const TorusState& s) {
                if (i == 0) return;
                acc.add(s.fiber);
                if (i % 1000 == 0) worst_orth = std::max(worst_orth, s.fiber.orthogonality_residual());
              });
  for (const auto& e : acc.finish()) CHECK(std::abs(e.average) < 5.0 * e.standard_error);
  CHECK(worst_orth < 1e-9);
}

TEST_CASE("equidistribution: kahler observable stays frozen") {
  Rng rng(10);
  const auto a = base::ToralAutomorphism::cat_map();
  const auto c = kahler_like_cocycle(4, CocycleKind::discrete, rng);
  BirkhoffAccumulator acc({complex_structure_observable(4), matrix_coefficient(0, 0)}, 20000);
  visit_orbit(TorusState{TorusPoint(0.5, 0.25), Rotation::identity(4), 0}, c, a, 20000,
              [&](long i, const TorusState& s) {
                if (i > 0) acc.add(s.fiber);
              });
  const auto est = acc.finish();
  CHECK(est[0].average == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est[0].standard_error < 1e-12);
}

TEST_CASE("transport along a geodesic") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const UnitTangent s(DiskPoint(random_disk_point(rng, 0.5)), uniform(rng, 0.0, 2.0 * M_PI));
    const double len = uniform(rng, 0.5, 3.0);
    const auto curve = base::sample_geodesic(s, len, static_cast<int>(std::ceil(len / 0.005)));
    const double end_angle = base::geodesic_flow(s, len).angle();
    const auto vel = parallel_transport_disk(curve, std::polar(1.0, s.angle()));
    CHECK(std::abs(base::angle_difference(std::arg(vel.w), end_angle)) < 1e-8);
    const double beta = uniform(rng, -3.0, 3.0);
    const auto other = parallel_transport_disk(curve, std::polar(2.5, s.angle() + beta));
    CHECK(std::abs(other.w) == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(std::abs(base::angle_difference(std::arg(other.w) - end_angle, beta)) < 1e-8);
  }
}

TEST_CASE("holonomy of the equilateral triangle with angles pi/4") {
  // equilateral triangle with angle α: cosh R = cot(α/2)·cot(π/3)
  const double alpha = M_PI / 4.0;
  const double r = std::tanh(std::acosh(1.0 / std::tan(alpha / 2.0) / std::tan(M_PI / 3.0)) / 2.0);
  std::vector<Complex> v;
  for (int k = 0; k < 3; ++k) v.push_back(std::polar(r, 2.0 * M_PI * k / 3.0));
  for (int k = 0; k < 3; ++k) CHECK(vertex_angle(v[k], v[(k + 1) % 3], v[(k + 2) % 3]) == doctest::Approx(alpha));
  const double hol = transport_angle(geodesic_polygon(v, 5e-3), 1e-2);
  CHECK(std::abs(hol + M_PI / 4.0) < 1e-5);
}

TEST_CASE("degenerate loop has trivial holonomy") {
  const auto curve = geodesic_polygon({Complex(0.1, 0.2), Complex(-0.3, 0.4)}, 5e-3);
  CHECK(std::abs(transport_angle(curve)) < 1e-8);
}

TEST_CASE("triangle holonomy equals area") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Complex a = random_disk_point(rng, 0.8), b = random_disk_point(rng, 0.8), c = random_disk_point(rng, 0.8);
    const double area = M_PI - vertex_angle(a, b, c) - vertex_angle(b, c, a) - vertex_angle(c, a, b);
    CHECK(triangle_area(a, b, c) == doctest::Approx(area).epsilon(1e-12));
    const double orient = geodesic_orientation(a, b, c);
    const double hol = transport_angle(geodesic_polygon({a, b, c}, 5e-3));
    CHECK(std::abs(hol + orient * area) < 1e-5);
  }
}

TEST_CASE("transport preconditions") {
  std::vector<DiskPoint> coarse = {DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)};
  CHECK_THROWS_AS(transport_angle(coarse), std::invalid_argument);
}
