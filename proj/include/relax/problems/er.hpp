#pragma once

#include <cmath>

#include "relax/problem.hpp"

namespace relax {

struct PointSource {
  double x = -0.2;
  double y = 1.0;
  double activation_time = 0.0;
};

// Exact ray-strength solution g = max(0, t - r)^3 / r radiating from the
// source; the state is g times the unit vector from the source.
inline Eigen::Vector2d er_exact(double x, double y, double t, const PointSource& src) {
  const double dx = x - src.x, dy = y - src.y;
  const double r = std::hypot(dx, dy);
  const double te = t - src.activation_time;
  if (r <= 1e-14 || te <= r) return Eigen::Vector2d::Zero();
  const double d = te - r;
  const double g = d * d * d / r;
  return Eigen::Vector2d(g * dx / r, g * dy / r);
}

// Engquist-Runborg geometric-optics system: a single-phase ray of strength
// g = |C| traveling at angle theta = atan2(C2, C1). Both directional
// Jacobians have a defective double eigenvalue (cos theta in x, sin theta
// in y), so the system is weakly hyperbolic everywhere. The flux is
// degree-1 homogeneous and vanishes on the vacuum state.
class ErProblem : public Problem2D {
 public:
  explicit ErProblem(PointSource src = {}) : src_(src) {}

  int n_components() const override { return 2; }
  const PointSource& source() const { return src_; }

  bool has_exact() const override { return true; }
  void exact(double x, double y, double t, Eigen::Ref<Eigen::VectorXd> out) const override {
    out = er_exact(x, y, t, src_);
  }

 protected:
  void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F, Eigen::MatrixXd& G,
                     Eigen::VectorXd& lx_min, Eigen::VectorXd& lx_max,
                     Eigen::VectorXd& ly_min, Eigen::VectorXd& ly_max) const override {
    const Eigen::Index n = C.cols();
    F.resize(2, n);
    G.resize(2, n);
    lx_min.resize(n);
    lx_max.resize(n);
    ly_min.resize(n);
    ly_max.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double c1 = C(0, k), c2 = C(1, k);
      const double g = std::hypot(c1, c2);
      if (g <= 1e-14) {  // vacuum is an exact state
        F.col(k).setZero();
        G.col(k).setZero();
        lx_min(k) = lx_max(k) = 0.0;
        ly_min(k) = ly_max(k) = 0.0;
        continue;
      }
      F(0, k) = c1 * c1 / g;
      F(1, k) = c1 * c2 / g;
      G(0, k) = c1 * c2 / g;
      G(1, k) = c2 * c2 / g;
      const double ct = c1 / g, st = c2 / g;  // defective double eigenvalues
      lx_min(k) = lx_max(k) = ct;
      ly_min(k) = ly_max(k) = st;
    }
  }

 private:
  PointSource src_;
};

}  // namespace relax
