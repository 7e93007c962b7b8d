#include "frameflow/harmonics/sym_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frameflow::harmonics {

void Polynomial::add(const Exponent& e, double c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::operator()(const Vector& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int i = 0; i < n_; ++i) {
      for (int p = 0; p < e[static_cast<std::size_t>(i)]; ++p) t *= x(i);
    }
    s += t;
  }
  return s;
}

Polynomial Polynomial::laplacian() const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      const int a = e[static_cast<std::size_t>(i)];
      if (a < 2) continue;
      Exponent f = e;
      f[static_cast<std::size_t>(i)] -= 2;
      out.add(f, c * a * (a - 1));
    }
  }
  return out;
}

Polynomial Polynomial::times_radius_squared() const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      Exponent f = e;
      f[static_cast<std::size_t>(i)] += 2;
      out.add(f, c);
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, c);
  return out;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) out.add(e, c * s);
  return out;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int a : terms_.begin()->first) d += a;
  return d;
}

SymTensor::SymTensor(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0) throw std::invalid_argument("invalid tensor shape");
}

double SymTensor::get(MultiIndex idx) const {
  std::sort(idx.begin(), idx.end());
  const auto it = entries_.find(idx);
  return it == entries_.end() ? 0.0 : it->second;
}

void SymTensor::set(MultiIndex idx, double v) {
  if (static_cast<int>(idx.size()) != k_) throw std::invalid_argument("multi-index length mismatch");
  for (int i : idx) {
    if (i < 0 || i >= n_) throw std::invalid_argument("multi-index out of range");
  }
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite tensor entry");
  std::sort(idx.begin(), idx.end());
  if (v == 0.0) {
    entries_.erase(idx);
  } else {
    entries_[idx] = v;
  }
}

double multinomial(const MultiIndex& idx) {
  double r = std::tgamma(static_cast<double>(idx.size()) + 1.0);
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    r /= std::tgamma(static_cast<double>(j - i) + 1.0);
    i = j;
  }
  return std::round(r);
}

Exponent exponent_of(const MultiIndex& idx, int n) {
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int i : idx) ++e[static_cast<std::size_t>(i)];
  return e;
}

MultiIndex multi_index_of(const Exponent& e) {
  MultiIndex idx;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int p = 0; p < e[i]; ++p) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

SymTensor SymTensor::trace() const {
  if (k_ < 2) throw std::invalid_argument("trace needs k >= 2");
  // (tr K)_β = Σ_i K_{β i i}; enumerate the entries containing a repeated pair.
  SymTensor out(n_, k_ - 2);
  std::map<MultiIndex, double> acc;
  for (const auto& [idx, v] : entries_) {
    // each distinct i with multiplicity ≥ 2 contributes to β = idx minus {i, i}
    for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
      if (idx[a] != idx[a + 1] || (a > 0 && idx[a - 1] == idx[a])) continue;
      MultiIndex beta = idx;
      beta.erase(beta.begin() + static_cast<long>(a), beta.begin() + static_cast<long>(a) + 2);
      acc[beta] += v;
    }
  }
  for (const auto& [beta, v] : acc) out.set(beta, v);
  return out;
}

double SymTensor::max_contraction() const {
  if (k_ < 2) return 0.0;
  double m = 0.0;
  const SymTensor t = trace();
  for (const auto& [idx, v] : t.entries()) m = std::max(m, std::abs(v));
  return m;
}

double SymTensor::frobenius_norm() const {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += multinomial(idx) * v * v;
  return std::sqrt(s);
}

Polynomial SymTensor::polynomial() const {
  Polynomial p(n_);
  for (const auto& [idx, v] : entries_) p.add(exponent_of(idx, n_), multinomial(idx) * v);
  return p;
}

SymTensor SymTensor::from_polynomial(const Polynomial& p, int k) {
  SymTensor t(p.n(), k);
  for (const auto& [e, c] : p.terms()) {
    const MultiIndex idx = multi_index_of(e);
    if (static_cast<int>(idx.size()) != k) throw std::invalid_argument("polynomial is not homogeneous of degree k");
    t.set(idx, c / multinomial(idx));
  }
  return t;
}

SymTensor SymTensor::operator-(const SymTensor& o) const {
  if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("tensor shape mismatch");
  SymTensor out = *this;
  for (const auto& [idx, v] : o.entries_) out.set(idx, out.get(idx) - v);
  return out;
}

Polynomial harmonic_projection(const Polynomial& p, int k) {
  const int n = p.n();
  Polynomial h = p;
  Polynomial lap = p;
  double denom = 1.0;
  for (int j = 1; 2 * j <= k; ++j) {
    lap = lap.laplacian();
    denom *= 2.0 * j * (n + 2 * k - 2 - 2 * j);
    Polynomial term = lap;
    for (int r = 0; r < j; ++r) term = term.times_radius_squared();
    h = h + term * ((j % 2 == 0 ? 1.0 : -1.0) / denom);
  }
  // drop cancellation debris far below the input scale
  Polynomial clean(n);
  double scale = 0.0;
  for (const auto& [e, c] : p.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [e, c] : h.terms()) {
    if (std::abs(c) > 1e-15 * scale) clean.add(e, c);
  }
  return clean;
}

SymTensor trace_free_project(const SymTensor& t) {
  if (t.k() > 6) throw std::invalid_argument("trace_free_project supports k <= 6");
  if (t.n() > 150) throw std::invalid_argument("trace_free_project supports n <= 150");
  if (t.k() < 2) return t;
  return SymTensor::from_polynomial(harmonic_projection(t.polynomial(), t.k()), t.k());
}

double pi_star(const SymTensor& t, const Vector& v) {
  if (v.size() != t.n()) throw std::invalid_argument("vector dimension mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-12) throw std::invalid_argument("pi_star needs a unit vector");
  return t.polynomial()(v) / std::tgamma(t.k() + 1.0);
}

SymTensor random_sym_tensor(int n, int k, Rng& rng) {
  SymTensor t(n, k);
  MultiIndex idx(static_cast<std::size_t>(k), 0);
  // enumerate sorted multi-indices in lexicographic order
  while (true) {
    t.set(idx, uniform(rng, -1.0, 1.0));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    const int v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < k; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
  return t;
}

double sphere_moment(const Exponent& gamma) {
  double log_num = 0.0;
  int total = 0;
  for (int g : gamma) {
    if (g % 2 != 0) return 0.0;
    log_num += std::lgamma((g + 1) / 2.0);
    total += g;
  }
  const double n = static_cast<double>(gamma.size());
  return 2.0 * std::exp(log_num - std::lgamma((total + n) / 2.0));
}

double sphere_volume(int n) { return 2.0 * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0); }

double sphere_inner(const Polynomial& p, const Polynomial& q) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    for (const auto& [f, d] : q.terms()) {
      Exponent g = e;
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += f[i];
      s += c * d * sphere_moment(g);
    }
  }
  return s;
}

}  // namespace frameflow::harmonics
