#pragma once

#include <array>
#include <vector>

#include "frameflow/lie.hpp"

namespace frameflow {

// Matrix models of the structure-group reductions, each returned as a
// Frobenius-orthonormal basis of the subalgebra inside so(m).

/// Standard complex structure on R^m (m even): blocks [[0,−1],[1,0]].
Matrix complex_structure(int m);

/// u(k) ⊂ so(2k): matrices commuting with complex_structure(2k).
std::vector<Matrix> unitary_basis(int k);

/// so(p) ⊕ so(q) acting on the first p and last q coordinates of R^{p+q}.
std::vector<Matrix> block_so_basis(int p, int q);

/// so(m−1) ⊂ so(m) fixing the first coordinate vector.
std::vector<Matrix> stabilizer_basis(int m);

/// Signed octonion triples (1-based, as in e123 + e145 + e167 + e246 − e257 − e347 − e356).
struct OctonionTriple {
  std::array<int, 3> idx;
  int sign;
};
const std::vector<OctonionTriple>& octonion_triples();

/// Totally antisymmetric cross-product constants φ_ijk on R^7.
double cross_product_constant(int i, int j, int k);

/// g2 ⊂ so(7): the complement of {v ↦ φ(v,·,·)}, i.e. all X with
/// Σ_jk φ_ijk X_jk = 0 for every i. Dimension 14.
std::vector<Matrix> g2_basis();

/// Orthonormalize a spanning family (modified Gram–Schmidt, drop below tol).
std::vector<Matrix> orthonormalize(const std::vector<Matrix>& family, double tol = 1e-10);

}  // namespace frameflow
