#include "frameflow/base/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace frameflow::base {

double wrap_unit(double v) {
  double r = v - std::floor(v);
  if (r >= 1.0) r = 0.0;
  return r;
}

TorusPoint::TorusPoint(double x, double y) : x_(wrap_unit(x)), y_(wrap_unit(y)) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("non-finite torus point");
}

ToralAutomorphism::ToralAutomorphism(int a, int b, int c, int d) {
  mat_ << a, b, c, d;
  if (a * d - b * c != 1) throw std::invalid_argument("toral automorphism must have determinant 1");
  const int tr = a + d;
  if (tr <= 2) throw std::invalid_argument("toral automorphism must be hyperbolic (trace > 2)");
  const double t = tr;
  lambda_ = 0.5 * (t + std::sqrt(t * t - 4.0));
  const double mu = 1.0 / lambda_;
  // eigenvectors of [[a,b],[c,d]]: (b, λ−a) or (λ−d, c), pick the better conditioned one
  auto eigvec = [&](double l) {
    Eigen::Vector2d v1(b, l - a);
    Eigen::Vector2d v2(l - d, c);
    Eigen::Vector2d v = v1.norm() >= v2.norm() ? v1 : v2;
    v.normalize();
    if (v(0) < 0 || (v(0) == 0 && v(1) < 0)) v = -v;
    return v;
  };
  unstable_ = eigvec(lambda_);
  stable_ = eigvec(mu);
}

ToralAutomorphism ToralAutomorphism::cat_map() { return {2, 1, 1, 1}; }

Eigen::Matrix2d ToralAutomorphism::inverse_d() const {
  Eigen::Matrix2d inv;
  inv << mat_(1, 1), -mat_(0, 1), -mat_(1, 0), mat_(0, 0);
  return inv;
}

TorusPoint cat_step(const TorusPoint& p, const ToralAutomorphism& a) {
  const auto& m = a.matrix();
  return {m(0, 0) * p.x() + m(0, 1) * p.y(), m(1, 0) * p.x() + m(1, 1) * p.y()};
}

TorusPoint cat_step_inverse(const TorusPoint& p, const ToralAutomorphism& a) {
  const Eigen::Vector2d q = a.inverse_d() * p.coords();
  return {q(0), q(1)};
}

TorusPoint shift_along(const TorusPoint& p, const Eigen::Vector2d& dir, double offset) {
  return {p.x() + offset * dir(0), p.y() + offset * dir(1)};
}

TorusPoint HomoclinicPoint::orbit(const ToralAutomorphism& a, int k) const {
  if (k >= 0) {
    const double scale = std::pow(a.stable_eigenvalue(), k) * stable_coord;
    const Eigen::Vector2d q = scale * a.stable_dir();
    return {q(0), q(1)};
  }
  const double scale = std::pow(a.stable_eigenvalue(), -k) * unstable_coord;
  const Eigen::Vector2d q = scale * a.unstable_dir();
  return {q(0), q(1)};
}

std::vector<HomoclinicPoint> homoclinic_points(const ToralAutomorphism& a, int box_radius,
                                               double dedup_tol) {
  if (box_radius < 1) throw std::invalid_argument("box_radius must be at least 1");
  Eigen::Matrix2d sys;
  sys.col(0) = a.unstable_dir();
  sys.col(1) = -a.stable_dir();
  const double det = sys.determinant();
  if (std::abs(det) < 1e-14) throw std::logic_error("stable and unstable directions are parallel");
  const Eigen::Matrix2d inv = sys.inverse();

  std::vector<HomoclinicPoint> out;
  for (int mx = -box_radius; mx <= box_radius; ++mx) {
    for (int my = -box_radius; my <= box_radius; ++my) {
      if (mx == 0 && my == 0) continue;
      const Eigen::Vector2d sol = inv * Eigen::Vector2d(mx, my);
      HomoclinicPoint h;
      h.lattice = {mx, my};
      h.unstable_coord = sol(0);
      h.stable_coord = sol(1);
      const Eigen::Vector2d lift = sol(0) * a.unstable_dir();
      h.point = TorusPoint(lift(0), lift(1));
      bool duplicate = false;
      for (const auto& e : out) {
        if (torus_distance(e.point, h.point) < dedup_tol) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) out.push_back(h);
    }
  }
  return out;
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
  auto d = [](double a, double b) {
    double x = std::abs(a - b);
    return std::min(x, 1.0 - x);
  };
  return std::hypot(d(p.x(), q.x()), d(p.y(), q.y()));
}

}  // namespace frameflow::base
