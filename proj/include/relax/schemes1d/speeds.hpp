#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "relax/core/errors.hpp"
#include "relax/core/field.hpp"
#include "relax/problem.hpp"
#include "relax/schemes1d/config.hpp"

namespace relax {

// Per-interface, per-component subcharacteristic speed pair (a-, a+).
// Face f sits between storage cells f and f+1; all storage faces carry
// speeds so that second-order limiter stencils (which reach one face to
// either side of every interior interface) stay inside the arrays.
struct InterfaceSpeeds {
  Eigen::MatrixXd a_minus;  // n_components x n_faces, <= 0
  Eigen::MatrixXd a_plus;   // n_components x n_faces, >= 0

  int n_faces() const { return static_cast<int>(a_plus.cols()); }

  double max_speed() const {
    if (a_plus.size() == 0) return 0.0;
    return std::max(a_plus.maxCoeff(), -a_minus.minCoeff());
  }
};

namespace detail {

// RH divided difference with a degenerate-denominator guard: flash noise on
// near-flat data must not manufacture huge speeds.
inline bool divided_difference(double dC, double dF, double c_scale, double& dd) {
  if (std::abs(dC) <= 1e-12 * std::max(1.0, c_scale)) return false;
  dd = dF / dC;
  return true;
}

}  // namespace detail

// Global constant JX speed: the largest interior spectral radius, combined
// with the problem's admissible-set bound when it is known, scaled by
// speed_safety and floored. The state must already be evaluated (lam bounds
// over storage cells); interior columns only are inspected.
inline double jx_global_speed_from_bounds(const Eigen::VectorXd& lam_min,
                                          const Eigen::VectorXd& lam_max,
                                          const Grid1D& grid, const SchemeConfig& cfg,
                                          double admissible_bound) {
  double a = admissible_bound;
  for (int j = grid.interior_begin(); j < grid.interior_end(); ++j) {
    const double rho = std::max(std::abs(lam_min(j)), std::abs(lam_max(j)));
    if (!std::isfinite(rho)) throw NumericalError("jx_global_speed: non-finite eigenvalue");
    a = std::max(a, rho);
  }
  return std::max(cfg.speed_safety * a, cfg.speed_floor);
}

inline double jx_global_speed(const Problem1D& problem, const StateField1Dd& state,
                              const SchemeConfig& cfg = {}) {
  const Grid1D& g = state.grid();
  Eigen::MatrixXd F;
  Eigen::VectorXd lmin, lmax;
  const auto interior = state.interior_block().eval();
  problem.evaluate(interior, F, lmin, lmax);
  double a = problem.admissible_speed_bound();
  for (int j = 0; j < g.n_cells; ++j) {
    const double rho = std::max(std::abs(lmin(j)), std::abs(lmax(j)));
    if (!std::isfinite(rho)) throw NumericalError("jx_global_speed: non-finite eigenvalue");
    a = std::max(a, rho);
  }
  return std::max(cfg.speed_safety * a, cfg.speed_floor);
}

// Speed selection over all storage faces from per-cell values C, pointwise
// fluxes F and signed eigenvalue bounds. "max over all states between C_{j-1}
// and C_j" is approximated by the endpoint eigenvalues plus the per-component
// Rankine-Hugoniot divided difference, which is exactly the quantity the
// monotonicity/TVD theorems require.
inline InterfaceSpeeds select_speeds(SchemeKind kind, const Eigen::MatrixXd& C,
                                     const Eigen::MatrixXd& F, const Eigen::VectorXd& lam_min,
                                     const Eigen::VectorXd& lam_max, const SchemeConfig& cfg,
                                     double jx_value = 0.0) {
  const int ncomp = static_cast<int>(C.rows());
  const int nfaces = static_cast<int>(C.cols()) - 1;
  InterfaceSpeeds sp;
  sp.a_minus.resize(ncomp, nfaces);
  sp.a_plus.resize(ncomp, nfaces);

  if (cfg.pinned_speed) {
    const double a = std::max(*cfg.pinned_speed, cfg.speed_floor);
    sp.a_plus.setConstant(a);
    sp.a_minus.setConstant(-a);
    return sp;
  }

  if (kind == SchemeKind::JX) {
    const double a = std::max(jx_value, cfg.speed_floor);
    sp.a_plus.setConstant(a);
    sp.a_minus.setConstant(-a);
    return sp;
  }

  for (int f = 0; f < nfaces; ++f) {
    double lo = std::min(std::min(lam_min(f), lam_min(f + 1)), 0.0);
    double hi = std::max(std::max(lam_max(f), lam_max(f + 1)), 0.0);
    for (int p = 0; p < ncomp; ++p) {
      double dd;
      const double scale = std::max(std::abs(C(p, f)), std::abs(C(p, f + 1)));
      if (detail::divided_difference(C(p, f + 1) - C(p, f), F(p, f + 1) - F(p, f), scale, dd)) {
        lo = std::min(lo, dd);
        hi = std::max(hi, dd);
      }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw NumericalError("select_speeds: non-finite eigenvalue estimate");

    if (kind == SchemeKind::VRS) {
      const double a =
          std::max(cfg.speed_safety * std::max(std::abs(lo), std::abs(hi)), cfg.speed_floor);
      for (int p = 0; p < ncomp; ++p) {
        sp.a_plus(p, f) = a;
        sp.a_minus(p, f) = -a;
      }
    } else {  // VRO
      double ap = cfg.speed_safety * hi;
      double am = cfg.speed_safety * lo;
      if (ap - am < cfg.speed_floor) ap = am + cfg.speed_floor;
      for (int p = 0; p < ncomp; ++p) {
        sp.a_plus(p, f) = ap;
        sp.a_minus(p, f) = am;
      }
    }
  }
  return sp;
}

// Convenience wrappers matching the selection modes by name.
inline InterfaceSpeeds select_speeds_symmetric(const Eigen::MatrixXd& C, const Eigen::MatrixXd& F,
                                               const Eigen::VectorXd& lam_min,
                                               const Eigen::VectorXd& lam_max,
                                               const SchemeConfig& cfg = {}) {
  return select_speeds(SchemeKind::VRS, C, F, lam_min, lam_max, cfg);
}

inline InterfaceSpeeds select_speeds_optimal(const Eigen::MatrixXd& C, const Eigen::MatrixXd& F,
                                             const Eigen::VectorXd& lam_min,
                                             const Eigen::VectorXd& lam_max,
                                             const SchemeConfig& cfg = {}) {
  return select_speeds(SchemeKind::VRO, C, F, lam_min, lam_max, cfg);
}

}  // namespace relax
