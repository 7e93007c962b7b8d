#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frameflow/harmonics/quadrature.hpp"
#include "frameflow/harmonics/sym_tensor.hpp"

namespace frameflow::harmonics {

/// Real function on the unit sphere of R^n with the rule used to integrate it.
struct FiberFunction {
  int n = 0;
  std::function<double(const Vector&)> eval;
  SphereQuadrature quadrature;
};

enum class SpectrumParity { even, odd, mixed };
std::string to_string(SpectrumParity p);

struct DegreeSpectrum {
  std::vector<double> energies;  // index k = 0..k_max
  double total = 0.0;            // ‖f‖² by quadrature
  SpectrumParity parity = SpectrumParity::even;
  int degree = 0;
  bool exceeds_k_max = false;  // residual energy above the threshold beyond k_max
  std::string method;          // "basis" or "zonal"
};

/// Orthonormal basis of the degree-k spherical harmonics on S^{n−1}
/// (harmonic parts of all degree-k monomials, Gram–Schmidt under the exact
/// sphere inner product).
std::vector<Polynomial> harmonic_basis(int n, int k);

/// dim of the degree-k harmonics on S^{n−1}.
long harmonic_dimension(int n, int k);

/// Gegenbauer polynomial C_k^λ(t).
double gegenbauer(int k, double lambda, double t);

/// Energy per degree. Full basis for n ≤ 4, zonal reproducing-kernel
/// projection for n > 4 (or when `force_zonal`). Throws std::invalid_argument
/// if the quadrature fails the constant check or is not exact to degree 2·k_max.
DegreeSpectrum degree_spectrum(const FiberFunction& f, int k_max, double rel_threshold = 1e-8,
                               bool force_zonal = false);

/// Rayleigh quotient ⟨f, −Δ_S f⟩/⟨f, f⟩ for f = p|_S with p = K(x, …, x), using
/// −Δ_S f = k(k+n−2)f − (Δp)|_S and exact sphere moments.
double rayleigh_quotient_exact(const SymTensor& t);

/// Same quotient with the sphere Laplacian taken as the ambient Laplacian of
/// the degree-0 extension f(x/|x|), by central differences with step h, and
/// integrals by product quadrature.
double rayleigh_quotient_fd(const SymTensor& t, double h = 1e-3);

}  // namespace frameflow::harmonics
