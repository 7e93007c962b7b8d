#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frameflow/algebras.hpp"
#include "frameflow/lie.hpp"

using namespace frameflow;

TEST_CASE("rotation invariants") {
  CHECK_THROWS_AS(Rotation(Matrix::Identity(3, 3) * 2.0), std::invalid_argument);
  Matrix reflect = Matrix::Identity(3, 3);
  reflect(0, 0) = -1.0;
  CHECK_THROWS_AS(Rotation{reflect}, std::invalid_argument);
  Rng rng(1);
  for (int m : {2, 3, 5, 8}) {
    const auto r = random_rotation(m, rng);
    CHECK(r.orthogonality_residual() < 1e-13);
    CHECK(r.matrix().determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("exp and log are inverse near the identity") {
  Rng rng(2);
  for (int m : {3, 4, 7}) {
    for (int i = 0; i < 20; ++i) {
      Matrix a(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) a(r, c) = uniform(rng, -0.4, 0.4);
      const Skew x = Skew::projected(a);
      const Rotation g = expm(x);
      CHECK(g.orthogonality_residual() < 1e-13);
      CHECK((logm(g).matrix() - x.matrix()).norm() < 1e-10);
    }
  }
}

TEST_CASE("exp of a plane generator is a Givens rotation") {
  Matrix x = Matrix::Zero(4, 4);
  x(1, 3) = -0.8;
  x(3, 1) = 0.8;
  CHECK((expm(Skew(x)).matrix() - givens(4, 1, 3, 0.8).matrix()).norm() < 1e-14);
  const auto g = givens(4, 1, 3, 0.8);
  CHECK(g(1, 1) == doctest::Approx(std::cos(0.8)));
  CHECK(g(3, 1) == doctest::Approx(std::sin(0.8)));
}

TEST_CASE("so basis is orthonormal") {
  const auto b = so_basis(5);
  CHECK(b.size() == 10);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      CHECK(frobenius_inner(b[i], b[j]) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("reorthonormalization restores a perturbed rotation") {
  Rng rng(3);
  const auto r = random_rotation(4, rng);
  Matrix noisy = r.matrix();
  noisy(0, 1) += 1e-7;
  const auto fixed = Rotation::unchecked(noisy).reorthonormalized();
  CHECK(fixed.orthogonality_residual() < 1e-14);
  CHECK((fixed.matrix() - r.matrix()).norm() < 1e-6);
}

TEST_CASE("unitary basis commutes with the complex structure") {
  const Matrix j = complex_structure(6);
  const auto u = unitary_basis(3);
  CHECK(u.size() == 9);
  for (const auto& x : u) {
    CHECK(max_abs(commutator(x, j)) < 1e-15);
    CHECK(max_abs(x + x.transpose()) < 1e-15);
  }
  CHECK(orthonormalize(u).size() == 9);
}

TEST_CASE("g2 preserves the cross product") {
  const auto g = g2_basis();
  CHECK(g.size() == 14);
  // X·φ = 0 for the 3-form φ_ijk
  for (const auto& x : g) {
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          double s = 0.0;
          for (int l = 0; l < 7; ++l) {
            s += x(l, i) * cross_product_constant(l, j, k) + x(l, j) * cross_product_constant(i, l, k) +
                 x(l, k) * cross_product_constant(i, j, l);
          }
          worst = std::max(worst, std::abs(s));
        }
    CHECK(worst < 1e-12);
  }
  // every index pair lies in exactly one triple
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j) continue;
      int hits = 0;
      for (int k = 0; k < 7; ++k) hits += cross_product_constant(i, j, k) != 0.0;
      CHECK(hits == 1);
    }
}

TEST_CASE("block and stabilizer algebras") {
  CHECK(block_so_basis(2, 3).size() == 1 + 3);
  CHECK(stabilizer_basis(5).size() == 6);
  for (const auto& x : stabilizer_basis(5)) CHECK(x.row(0).norm() == 0.0);
}
