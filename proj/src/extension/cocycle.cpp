#include "frameflow/extension/cocycle.hpp"

#include <cmath>
#include <stdexcept>

#include "frameflow/algebras.hpp"

namespace frameflow::extension {

std::string to_string(CocycleKind k) { return k == CocycleKind::discrete ? "discrete" : "continuous"; }

Cocycle Cocycle::discrete(int m, DiscreteFn fn, double lipschitz) {
  if (m < 1) throw std::invalid_argument("fiber dimension must be positive");
  Cocycle c;
  c.kind_ = CocycleKind::discrete;
  c.dim_ = m;
  c.lipschitz_ = lipschitz;
  c.discrete_ = std::move(fn);
  return c;
}

Cocycle Cocycle::continuous(int m, ContinuousFn fn, double lipschitz) {
  if (m < 1) throw std::invalid_argument("fiber dimension must be positive");
  Cocycle c;
  c.kind_ = CocycleKind::continuous;
  c.dim_ = m;
  c.lipschitz_ = lipschitz;
  c.continuous_ = std::move(fn);
  return c;
}

Rotation Cocycle::operator()(const base::TorusPoint& x) const {
  if (kind_ != CocycleKind::discrete) throw std::invalid_argument("cocycle is not discrete");
  return discrete_(x);
}

Skew Cocycle::generator(const base::UnitTangent& s) const {
  if (kind_ != CocycleKind::continuous) throw std::invalid_argument("cocycle is not continuous");
  return continuous_(s);
}

Cocycle trivial_cocycle(int m, CocycleKind kind) {
  if (kind == CocycleKind::discrete) {
    return Cocycle::discrete(m, [m](const base::TorusPoint&) { return Rotation::identity(m); }, 0.0);
  }
  return Cocycle::continuous(m, [m](const base::UnitTangent&) { return Skew::zero(m); }, 0.0);
}

Cocycle constant_cocycle(const Rotation& value) {
  return Cocycle::discrete(value.dim(), [value](const base::TorusPoint&) { return value; }, 0.0);
}

Cocycle constant_generator(const Skew& value) {
  return Cocycle::continuous(value.dim(), [value](const base::UnitTangent&) { return value; }, 0.0);
}

const std::vector<std::array<int, 2>>& trig_frequencies() {
  static const std::vector<std::array<int, 2>> freqs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  return freqs;
}

TrigCocycleSpec random_trig_spec(const std::vector<Matrix>& basis, Rng& rng, double amplitude) {
  if (basis.empty()) throw std::invalid_argument("cocycle basis is empty");
  TrigCocycleSpec spec;
  spec.basis = basis;
  const auto nf = trig_frequencies().size();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    spec.constant.push_back(uniform(rng, -amplitude, amplitude));
    std::vector<double> c(nf);
    std::vector<double> s(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      c[f] = uniform(rng, -amplitude, amplitude);
      s[f] = uniform(rng, -amplitude, amplitude);
    }
    spec.cos_coeff.push_back(std::move(c));
    spec.sin_coeff.push_back(std::move(s));
  }
  return spec;
}

namespace {

// Disk features: Re z, Im z, cos θ, sin θ (cos/sin coefficient tables reused
// as the first and second pair of linear weights).
std::array<double, 4> disk_features(const base::UnitTangent& s) {
  return {s.z().real(), s.z().imag(), std::cos(s.angle()), std::sin(s.angle())};
}

// ‖exp(S) − exp(S')‖_op ≤ ‖S − S'‖_op ≤ ‖S − S'‖_F for skew S, S', so the
// Frobenius gradient bound of the coefficient map is a Lipschitz bound.
double lipschitz_bound(const TrigCocycleSpec& spec, CocycleKind kind) {
  const auto& freqs = trig_frequencies();
  double sq = 0.0;
  for (std::size_t j = 0; j < spec.basis.size(); ++j) {
    double grad = 0.0;
    for (std::size_t f = 0; f < freqs.size(); ++f) {
      const double coeff = std::abs(spec.cos_coeff[j][f]) + std::abs(spec.sin_coeff[j][f]);
      if (kind == CocycleKind::discrete) {
        grad += 2.0 * M_PI * std::hypot(freqs[f][0], freqs[f][1]) * coeff;
      } else if (f < 2) {
        grad += coeff;
      }
    }
    sq += grad * grad;
  }
  return std::sqrt(sq);
}

}  // namespace

Cocycle trig_cocycle(const TrigCocycleSpec& spec, CocycleKind kind) {
  if (spec.basis.empty()) throw std::invalid_argument("cocycle basis is empty");
  const int m = static_cast<int>(spec.basis.front().rows());
  const double lip = lipschitz_bound(spec, kind);
  if (kind == CocycleKind::discrete) {
    auto fn = [spec, m](const base::TorusPoint& x) {
      const auto& freqs = trig_frequencies();
      std::vector<double> cs(freqs.size());
      std::vector<double> sn(freqs.size());
      for (std::size_t f = 0; f < freqs.size(); ++f) {
        const double phase = 2.0 * M_PI * (freqs[f][0] * x.x() + freqs[f][1] * x.y());
        cs[f] = std::cos(phase);
        sn[f] = std::sin(phase);
      }
      Matrix gen = Matrix::Zero(m, m);
      for (std::size_t j = 0; j < spec.basis.size(); ++j) {
        double c = spec.constant[j];
        for (std::size_t f = 0; f < freqs.size(); ++f) {
          c += spec.cos_coeff[j][f] * cs[f] + spec.sin_coeff[j][f] * sn[f];
        }
        gen += c * spec.basis[j];
      }
      return expm(gen);
    };
    return Cocycle::discrete(m, std::move(fn), lip);
  }
  auto fn = [spec, m](const base::UnitTangent& s) {
    const auto feat = disk_features(s);
    Matrix gen = Matrix::Zero(m, m);
    for (std::size_t j = 0; j < spec.basis.size(); ++j) {
      const double c = spec.constant[j] + spec.cos_coeff[j][0] * feat[0] +
                       spec.cos_coeff[j][1] * feat[1] + spec.sin_coeff[j][0] * feat[2] +
                       spec.sin_coeff[j][1] * feat[3];
      gen += c * spec.basis[j];
    }
    return Skew::projected(gen);
  };
  return Cocycle::continuous(m, std::move(fn), lip);
}

Cocycle random_trig_cocycle(int m, CocycleKind kind, Rng& rng, double amplitude) {
  if (m < 2) throw std::invalid_argument("random cocycle needs m >= 2");
  return trig_cocycle(random_trig_spec(so_basis(m), rng, amplitude), kind);
}

Cocycle kahler_like_cocycle(int m, CocycleKind kind, Rng& rng, double amplitude) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("kahler_like_cocycle needs even m >= 2");
  return trig_cocycle(random_trig_spec(unitary_basis(m / 2), rng, amplitude), kind);
}

}  // namespace frameflow::extension
