#include "frameflow/transitivity/holonomy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "frameflow/errors.hpp"

namespace frameflow::transitivity {

namespace {

constexpr int kApproachSteps = 30;
constexpr double kApproachTol = 1e-6;
constexpr int kReorthoEvery = 64;

enum class Leaf { stable, unstable };

HolonomyResult leaf_holonomy(Leaf leaf, const base::TorusPoint& anchor, double from, double to,
                             const extension::Cocycle& c, const base::ToralAutomorphism& a,
                             const HolonomyOptions& opt) {
  if (c.kind() != extension::CocycleKind::discrete) {
    throw std::invalid_argument("holonomy needs a discrete cocycle");
  }
  const double shrink = a.stable_eigenvalue();
  const double gap = std::abs(to - from) * std::pow(shrink, kApproachSteps);
  if (gap >= kApproachTol) {
    throw std::invalid_argument("points do not approach along the leaf within 30 steps");
  }
  const Eigen::Vector2d dir = leaf == Leaf::stable ? a.stable_dir() : a.unstable_dir();
  const int m = c.dim();

  // px, py: partial products A^{(±n)} at the two points.
  Matrix px = Matrix::Identity(m, m);
  Matrix py = Matrix::Identity(m, m);
  Matrix h = Matrix::Identity(m, m);
  base::TorusPoint an = anchor;
  double scale = 1.0;
  HolonomyResult res;
  for (int n = 1; n <= opt.depth_cap; ++n) {
    if (leaf == Leaf::stable) {
      const base::TorusPoint xn = base::shift_along(an, dir, scale * from);
      const base::TorusPoint yn = base::shift_along(an, dir, scale * to);
      px = c(xn).matrix() * px;
      py = c(yn).matrix() * py;
      an = base::cat_step(an, a);
    } else {
      an = base::cat_step_inverse(an, a);
      const base::TorusPoint xn = base::shift_along(an, dir, scale * shrink * from);
      const base::TorusPoint yn = base::shift_along(an, dir, scale * shrink * to);
      px = c(xn).matrix().transpose() * px;
      py = c(yn).matrix().transpose() * py;
    }
    scale *= shrink;
    if (n % kReorthoEvery == 0) {
      px = Rotation::unchecked(px).reorthonormalized().matrix();
      py = Rotation::unchecked(py).reorthonormalized().matrix();
    }
    const Matrix next = py.transpose() * px;
    const double r = (next - h).norm();
    h = next;
    res.residual_trace.push_back(r);
    if (r < opt.tol) {
      res.value = Rotation::unchecked(h).reorthonormalized();
      res.truncation_depth = n;
      res.cauchy_residual = r;
      return res;
    }
  }
  throw NumericalError("holonomy did not converge within depth " + std::to_string(opt.depth_cap) +
                       "; last residual " + std::to_string(res.residual_trace.back()));
}

Matrix power(const Matrix& g, int k) {
  Matrix out = Matrix::Identity(g.rows(), g.cols());
  const Matrix base = k >= 0 ? g : Matrix(g.transpose());
  for (int i = 0; i < std::abs(k); ++i) out = base * out;
  return out;
}

}  // namespace

HolonomyResult stable_holonomy(const base::TorusPoint& anchor, double from, double to,
                               const extension::Cocycle& c, const base::ToralAutomorphism& a,
                               const HolonomyOptions& opt) {
  return leaf_holonomy(Leaf::stable, anchor, from, to, c, a, opt);
}

HolonomyResult unstable_holonomy(const base::TorusPoint& anchor, double from, double to,
                                 const extension::Cocycle& c, const base::ToralAutomorphism& a,
                                 const HolonomyOptions& opt) {
  return leaf_holonomy(Leaf::unstable, anchor, from, to, c, a, opt);
}

Rotation brin_rho(const base::HomoclinicPoint& p, const extension::Cocycle& c,
                  const base::ToralAutomorphism& a, const BrinOptions& opt) {
  const int k_cut = opt.forward_cut;
  const int j_cut = opt.backward_cut;
  if (k_cut < 0 || j_cut < 0) throw std::invalid_argument("cuts must be nonnegative");
  const double mu = a.stable_eigenvalue();
  const base::TorusPoint origin(0.0, 0.0);

  // f^{−J} p = λ^{−J} t·u_dir on the unstable leaf of 0; f^K p = λ^{−K} r·s_dir on the stable leaf.
  const auto hu = unstable_holonomy(origin, 0.0, std::pow(mu, j_cut) * p.unstable_coord, c, a, opt.holonomy);
  const auto hs = stable_holonomy(origin, std::pow(mu, k_cut) * p.stable_coord, 0.0, c, a, opt.holonomy);

  Matrix transit = Matrix::Identity(c.dim(), c.dim());
  for (int k = -j_cut; k < k_cut; ++k) transit = c(p.orbit(a, k)).matrix() * transit;

  const Matrix a0 = c(origin).matrix();
  const Matrix rho = power(a0, -k_cut) * hs.value.matrix() * transit * hu.value.matrix() * power(a0, -j_cut);
  return Rotation::unchecked(rho).reorthonormalized();
}

BrinWord make_word(const std::vector<std::pair<int, int>>& letters, const std::vector<Rotation>& rhos) {
  if (rhos.empty()) throw std::invalid_argument("no generators");
  BrinWord w;
  w.letters = letters;
  Matrix value = Matrix::Identity(rhos.front().dim(), rhos.front().dim());
  for (const auto& [idx, pw] : letters) {
    if (idx < 0 || idx >= static_cast<int>(rhos.size())) throw std::invalid_argument("letter out of range");
    value = value * power(rhos[static_cast<std::size_t>(idx)].matrix(), pw);
  }
  w.value = Rotation::unchecked(std::move(value));
  return w;
}

DecayFit fit_decay(const std::vector<double>& trace) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t d = 0; d < trace.size(); ++d) {
    if (!(trace[d] > 0)) continue;
    const double x = static_cast<double>(d + 1);
    const double y = std::log(trace[d]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("decay fit needs two positive residuals");
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icept = (sy - slope * sx) / n;
  return {std::exp(icept), std::exp(slope)};
}

}  // namespace frameflow::transitivity
