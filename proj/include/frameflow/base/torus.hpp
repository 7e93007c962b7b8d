#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace frameflow::base {

/// Point of R²/Z², both coordinates in [0,1).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }
  Eigen::Vector2d coords() const { return {x_, y_}; }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Reduce to [0,1). Guards the case where fmod rounds up to exactly 1.
double wrap_unit(double v);

/// Hyperbolic element of SL(2,Z) with its eigen-data.
class ToralAutomorphism {
 public:
  /// Rows (a b; c d). Throws std::invalid_argument unless det = 1 and trace > 2.
  ToralAutomorphism(int a, int b, int c, int d);
  /// The default [[2,1],[1,1]].
  static ToralAutomorphism cat_map();

  const Eigen::Matrix2i& matrix() const { return mat_; }
  Eigen::Matrix2d matrix_d() const { return mat_.cast<double>(); }
  Eigen::Matrix2d inverse_d() const;
  double unstable_eigenvalue() const { return lambda_; }
  double stable_eigenvalue() const { return 1.0 / lambda_; }
  const Eigen::Vector2d& unstable_dir() const { return unstable_; }
  const Eigen::Vector2d& stable_dir() const { return stable_; }

 private:
  Eigen::Matrix2i mat_;
  double lambda_ = 0.0;
  Eigen::Vector2d unstable_;
  Eigen::Vector2d stable_;
};

/// (A·p) mod 1.
TorusPoint cat_step(const TorusPoint& p, const ToralAutomorphism& a);
/// (A⁻¹·p) mod 1.
TorusPoint cat_step_inverse(const TorusPoint& p, const ToralAutomorphism& a);

/// p + offset·dir, reduced mod 1.
TorusPoint shift_along(const TorusPoint& p, const Eigen::Vector2d& dir, double offset);

/// Transverse intersection of W^u(0) and W^s(0).
///
/// The lift t·u_dir lies on the unstable line through the origin and equals
/// lattice + r·s_dir, i.e. it lies on the stable line through `lattice`.
/// Forward iterates are λ^{-k}·r·s_dir mod 1 and backward iterates are
/// λ^{-k}·t·u_dir mod 1, so the whole orbit has a closed form.
struct HomoclinicPoint {
  TorusPoint point;
  std::array<int, 2> lattice{0, 0};
  double unstable_coord = 0.0;  // t
  double stable_coord = 0.0;    // r

  /// f^k(p) for any integer k, from the closed form.
  TorusPoint orbit(const ToralAutomorphism& a, int k) const;
};

/// One homoclinic point per nonzero lattice vector m with |m|∞ ≤ box_radius,
/// solving t·u_dir − r·s_dir = m; deduplicated within `dedup_tol`.
std::vector<HomoclinicPoint> homoclinic_points(const ToralAutomorphism& a, int box_radius,
                                               double dedup_tol = 1e-10);

/// Distance on the flat torus.
double torus_distance(const TorusPoint& p, const TorusPoint& q);

}  // namespace frameflow::base
