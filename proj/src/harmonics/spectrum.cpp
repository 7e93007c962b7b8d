#include "frameflow/harmonics/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frameflow::harmonics {

std::string to_string(SpectrumParity p) {
  switch (p) {
    case SpectrumParity::even:
      return "even";
    case SpectrumParity::odd:
      return "odd";
    case SpectrumParity::mixed:
      return "mixed";
  }
  return "mixed";
}

namespace {

void enumerate_exponents(int n, int k, Exponent& cur, int pos, std::vector<Exponent>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = k;
    out.push_back(cur);
    return;
  }
  for (int a = k; a >= 0; --a) {
    cur[static_cast<std::size_t>(pos)] = a;
    enumerate_exponents(n, k - a, cur, pos + 1, out);
  }
}

// P_0..P_kmax at t: Chebyshev T_k for n = 2, Gegenbauer C_k^{(n−2)/2} otherwise.
void zonal_values(int n, int k_max, double t, std::vector<double>& out) {
  out[0] = 1.0;
  if (k_max == 0) return;
  const double lambda = (n - 2) / 2.0;
  out[1] = n == 2 ? t : 2.0 * lambda * t;
  for (int k = 2; k <= k_max; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out[kk] = n == 2 ? 2.0 * t * out[kk - 1] - out[kk - 2]
                     : (2.0 * t * (k + lambda - 1.0) * out[kk - 1] - (k + 2.0 * lambda - 2.0) * out[kk - 2]) / k;
  }
}

}  // namespace

long harmonic_dimension(int n, int k) {
  // C(k+n−1, n−1) − C(k+n−3, n−1)
  auto binom = [](long a, long b) -> long {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(k + n - 1, n - 1) - binom(k + n - 3, n - 1);
}

std::vector<Polynomial> harmonic_basis(int n, int k) {
  std::vector<Exponent> exps;
  Exponent cur(static_cast<std::size_t>(n), 0);
  enumerate_exponents(n, k, cur, 0, exps);
  std::vector<Polynomial> basis;
  const auto target = static_cast<std::size_t>(harmonic_dimension(n, k));
  for (const auto& e : exps) {
    if (basis.size() == target) break;
    Polynomial mono(n);
    mono.add(e, 1.0);
    Polynomial h = k < 2 ? mono : harmonic_projection(mono, k);
    // two passes of Gram–Schmidt under the exact sphere inner product
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) h = h + b * (-sphere_inner(b, h));
    }
    const double norm2 = sphere_inner(h, h);
    if (norm2 > 1e-20) basis.push_back(h * (1.0 / std::sqrt(norm2)));
  }
  return basis;
}

double gegenbauer(int k, double lambda, double t) {
  if (k == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * lambda * t;
  for (int j = 2; j <= k; ++j) {
    const double c2 = (2.0 * t * (j + lambda - 1.0) * c1 - (j + 2.0 * lambda - 2.0) * c0) / j;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

DegreeSpectrum degree_spectrum(const FiberFunction& f, int k_max, double rel_threshold, bool force_zonal) {
  const auto& q = f.quadrature;
  if (q.n != f.n) throw std::invalid_argument("quadrature dimension does not match the function");
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  if (q.constant_error() > 1e-8) throw std::invalid_argument("quadrature fails the constant-integration check");
  if (q.exact_degree < 2 * k_max) throw std::invalid_argument("quadrature underresolved for k_max");

  const std::size_t nq = q.size();
  std::vector<double> values(nq);
  DegreeSpectrum s;
  for (std::size_t i = 0; i < nq; ++i) {
    values[i] = f.eval(q.nodes[i]);
    s.total += q.weights[i] * values[i] * values[i];
  }
  s.energies.assign(static_cast<std::size_t>(k_max) + 1, 0.0);

  const int n = f.n;
  if (n <= 4 && !force_zonal) {
    s.method = "basis";
    for (int k = 0; k <= k_max; ++k) {
      for (const auto& y : harmonic_basis(n, k)) {
        double c = 0.0;
        for (std::size_t i = 0; i < nq; ++i) c += q.weights[i] * values[i] * y(q.nodes[i]);
        s.energies[static_cast<std::size_t>(k)] += c * c;
      }
    }
  } else {
    // ‖f_k‖² = ∬ f(x) Z_k(x·y) f(y), Z_k(t) = (dim H_k/|S|)·P_k(t)/P_k(1) with P_k
    // the Gegenbauer polynomial of index (n−2)/2 (Chebyshev for n = 2).
    s.method = "zonal";
    const double vol = sphere_volume(n);
    std::vector<double> scale(static_cast<std::size_t>(k_max) + 1);
    std::vector<double> pk(static_cast<std::size_t>(k_max) + 1);
    zonal_values(n, k_max, 1.0, pk);
    for (int k = 0; k <= k_max; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      scale[kk] = static_cast<double>(harmonic_dimension(n, k)) / (vol * pk[kk]);
    }
    // the kernel is symmetric: diagonal once, off-diagonal pairs twice
    for (std::size_t i = 0; i < nq; ++i) {
      const double fi = q.weights[i] * values[i];
      if (fi == 0.0) continue;
      for (std::size_t j = i; j < nq; ++j) {
        const double fj = q.weights[j] * values[j];
        if (fj == 0.0) continue;
        zonal_values(n, k_max, std::clamp(q.nodes[i].dot(q.nodes[j]), -1.0, 1.0), pk);
        const double w = (j == i ? 1.0 : 2.0) * fi * fj;
        for (std::size_t k = 0; k < pk.size(); ++k) s.energies[k] += w * pk[k] * scale[k];
      }
    }
    for (auto& e : s.energies) e = std::max(e, 0.0);
  }

  const double thr = rel_threshold * s.total;
  double odd = 0.0;
  double even = 0.0;
  double captured = 0.0;
  s.degree = 0;
  for (int k = 0; k <= k_max; ++k) {
    const double e = s.energies[static_cast<std::size_t>(k)];
    captured += e;
    if (e > thr) {
      s.degree = k;
      (k % 2 == 0 ? even : odd) += e;
    }
  }
  s.exceeds_k_max = s.total - captured > thr;
  if (odd > 0.0 && even > 0.0) {
    s.parity = SpectrumParity::mixed;
  } else if (odd > 0.0) {
    s.parity = SpectrumParity::odd;
  } else {
    s.parity = SpectrumParity::even;
  }
  return s;
}

double rayleigh_quotient_exact(const SymTensor& t) {
  const Polynomial p = t.polynomial();
  const int k = t.k();
  const int n = t.n();
  const double norm2 = sphere_inner(p, p);
  if (norm2 == 0.0) return 0.0;
  const double lap_term = sphere_inner(p, p.laplacian());
  return k * (k + n - 2.0) - lap_term / norm2;
}

double rayleigh_quotient_fd(const SymTensor& t, double h) {
  const Polynomial p = t.polynomial();
  const int n = t.n();
  const SphereQuadrature q = product_quadrature(n, 2 * t.k() + 2);
  auto f = [&](const Vector& x) { return p(x / x.norm()); };
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vector& v = q.nodes[i];
    const double fv = f(v);
    double lap = 0.0;
    for (int a = 0; a < n; ++a) {
      Vector e = Vector::Zero(n);
      e(a) = h;
      lap += (f(v + e) - 2.0 * fv + f(v - e)) / (h * h);
    }
    num += q.weights[i] * fv * (-lap);
    den += q.weights[i] * fv * fv;
  }
  return den == 0.0 ? 0.0 : num / den;
}

}  // namespace frameflow::harmonics
