#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "relax/core/boundary.hpp"
#include "relax/core/field.hpp"
#include "relax/problem.hpp"
#include "relax/schemes1d/kernels.hpp"
#include "relax/schemes1d/speeds.hpp"

namespace relax {

namespace detail {

inline double theta_tiny(const SchemeConfig& cfg) {
  return cfg.speed_floor * std::numeric_limits<double>::epsilon();
}

// Total relaxed flux (first order plus optional correction) at the faces
// [f_begin, f_begin + n_out). Face f sits between storage cells f and f+1;
// u_face, when present, scales the transport flux per face. Order 2 reads
// face data one face beyond each end of the output range.
inline void relaxed_fluxes(const Eigen::MatrixXd& C, const Eigen::MatrixXd& F,
                           const Eigen::VectorXd* u_face, const InterfaceSpeeds& sp,
                           SchemeKind kind, int order, double tiny, int f_begin, int n_out,
                           Eigen::MatrixXd& flux) {
  const int ncomp = static_cast<int>(C.rows());
  flux.resize(ncomp, n_out);
  for (int k = 0; k < n_out; ++k) {
    const int f = f_begin + k;
    const double u = u_face ? (*u_face)(f) : 1.0;
    for (int p = 0; p < ncomp; ++p) {
      double total = first_order_flux(C(p, f), C(p, f + 1), u * F(p, f), u * F(p, f + 1),
                                      sp.a_minus(p, f), sp.a_plus(p, f));
      if (order == 2) {
        kernels::FaceWave<double> w[3];
        for (int m = -1; m <= 1; ++m) {
          const int fm = f + m;
          const double um = u_face ? (*u_face)(fm) : 1.0;
          w[m + 1] = {C(p, fm + 1) - C(p, fm), um * (F(p, fm + 1) - F(p, fm)),
                      sp.a_minus(p, fm), sp.a_plus(p, fm)};
        }
        total += (kind == SchemeKind::JX)
                     ? kernels::jx_correction(w[0], w[1], w[2], tiny)
                     : kernels::variable_correction(w[0], w[1], w[2], tiny);
      }
      flux(p, k) = total;
    }
  }
}

struct Stage1D {
  Eigen::MatrixXd F;
  Eigen::VectorXd lam_min, lam_max;
  InterfaceSpeeds speeds;
  Eigen::MatrixXd flux;  // n_components x (n_cells + 1), boundary faces included
  double a_max = 0.0;
  double jx_value = 0.0;  // the step's constant JX speed
};

// Ghost fill, bulk problem evaluation (one flux evaluation per storage cell),
// speed selection and interface fluxes for one Euler stage. The variable
// schemes reselect speeds per stage; the JX constant is fixed at step entry
// and carried through the Runge-Kutta stages via fixed_jx.
inline void compute_stage(StateField1Dd& state, const Problem1D& problem,
                          const BoundarySpec1D& bc, const SchemeConfig& cfg, double t_stage,
                          Stage1D& out, const double* fixed_jx = nullptr) {
  const Grid1D& g = state.grid();
  fill_ghosts(state, bc, t_stage);
  problem.evaluate(state.values(), out.F, out.lam_min, out.lam_max);

  out.jx_value = 0.0;
  if (cfg.scheme == SchemeKind::JX && !cfg.pinned_speed)
    out.jx_value = fixed_jx ? *fixed_jx
                            : jx_global_speed_from_bounds(out.lam_min, out.lam_max, g, cfg,
                                                          problem.admissible_speed_bound());
  out.speeds = select_speeds(cfg.scheme, state.values(), out.F, out.lam_min, out.lam_max, cfg,
                             out.jx_value);
  out.a_max = out.speeds.max_speed();
  relaxed_fluxes(state.values(), out.F, nullptr, out.speeds, cfg.scheme, cfg.order,
                 theta_tiny(cfg), g.first_interior_face(), g.n_cells + 1, out.flux);
}

}  // namespace detail

// Conservative semi-discrete time derivative over interior cells. Boundary
// conditions are applied (ghosts filled) as part of the call.
inline Eigen::MatrixXd semi_discrete_rhs(StateField1Dd& state, const Problem1D& problem,
                                         const BoundarySpec1D& bc, const SchemeConfig& cfg,
                                         double t = 0.0) {
  detail::Stage1D stage;
  detail::compute_stage(state, problem, bc, cfg, t, stage);
  const int n = state.grid().n_cells;
  return (stage.flux.leftCols(n) - stage.flux.rightCols(n)) / state.grid().dx();
}

struct StepResult {
  double a_max = 0.0;             // entry-stage maximum subcharacteristic speed
  Eigen::VectorXd left_flux;      // time-weighted numerical flux through x_min
  Eigen::VectorXd right_flux;     // and through x_max, per component
};

namespace detail {

inline StepResult apply_step(StateField1Dd& state, Stage1D& stage1, const Problem1D& problem,
                             const BoundarySpec1D& bc, const SchemeConfig& cfg, double t,
                             double dt) {
  const Grid1D& g = state.grid();
  const int n = g.n_cells;
  const double dx = g.dx();

  StepResult res;
  res.a_max = stage1.a_max;

  const Eigen::MatrixXd rhs1 = (stage1.flux.leftCols(n) - stage1.flux.rightCols(n)) / dx;
  if (cfg.order == 1) {
    state.interior_block() += dt * rhs1;
    res.left_flux = stage1.flux.col(0);
    res.right_flux = stage1.flux.col(n);
    return res;
  }

  // u* = u + dt L(u); u^{n+1} = 1/2 u + 1/2 (u* + dt L(u*)), speeds and
  // ghosts refreshed at the intermediate stage.
  StateField1Dd ustar = state;
  ustar.interior_block() += dt * rhs1;
  Stage1D stage2;
  compute_stage(ustar, problem, bc, cfg, t + dt, stage2, &stage1.jx_value);
  const Eigen::MatrixXd rhs2 = (stage2.flux.leftCols(n) - stage2.flux.rightCols(n)) / dx;

  state.interior_block() =
      0.5 * state.interior_block() + 0.5 * (ustar.interior_block() + dt * rhs2);
  res.left_flux = 0.5 * (stage1.flux.col(0) + stage2.flux.col(0));
  res.right_flux = 0.5 * (stage1.flux.col(n) + stage2.flux.col(n));
  return res;
}

}  // namespace detail

// One fully discrete step (forward Euler or 2-stage TVD Runge-Kutta).
// Rejects dt beyond the CFL bound cfl * dx / a_max of the entry stage.
inline StepResult step_1d(StateField1Dd& state, const Problem1D& problem,
                          const BoundarySpec1D& bc, const SchemeConfig& cfg, double t,
                          double dt) {
  cfg.validate();
  bc.validate();
  if (dt < 0.0) throw ConfigError("step_1d: dt must be nonnegative");

  detail::Stage1D stage1;
  detail::compute_stage(state, problem, bc, cfg, t, stage1);
  const double dx = state.grid().dx();
  if (dt * stage1.a_max > cfg.cfl * dx * (1.0 + 1e-9)) {
    std::ostringstream msg;
    msg << "step_1d: CFL violation, dt = " << dt << " exceeds " << cfg.cfl << " * dx / a_max with a_max = "
        << stage1.a_max;
    throw NumericalError(msg.str());
  }
  return detail::apply_step(state, stage1, problem, bc, cfg, t, dt);
}

// Largest stable step from the current state; infinite-looking values are the
// caller's cue to clip against the remaining output window.
inline double stable_dt(StateField1Dd& state, const Problem1D& problem, const BoundarySpec1D& bc,
                        const SchemeConfig& cfg, double t = 0.0) {
  detail::Stage1D stage;
  detail::compute_stage(state, problem, bc, cfg, t, stage);
  return cfg.cfl * state.grid().dx() / std::max(stage.a_max, cfg.speed_floor);
}

struct MarchResult {
  int steps = 0;
  double t_end = 0.0;
  double max_speed_seen = 0.0;
  std::uint64_t flux_evaluations = 0;
  std::vector<double> dt_history;
};

using StepCallback = std::function<void(const StateField1Dd&, double t)>;

// Marches to t_final with dt = cfl dx / a_max chosen at the start of every
// step from the current speeds and clipped to land exactly on t_final.
inline MarchResult advance_to(StateField1Dd& state, const Problem1D& problem,
                              const BoundarySpec1D& bc, const SchemeConfig& cfg, double t0,
                              double t_final, const StepCallback& callback = {}) {
  cfg.validate();
  bc.validate();
  const std::uint64_t evals0 = problem.flux_counter().count();
  MarchResult res;
  double t = t0;
  const double dx = state.grid().dx();
  while (t < t_final - 1e-14 * std::max(1.0, std::abs(t_final))) {
    detail::Stage1D stage1;
    detail::compute_stage(state, problem, bc, cfg, t, stage1);
    double dt = cfg.cfl * dx / std::max(stage1.a_max, cfg.speed_floor);
    dt = std::min(dt, t_final - t);
    detail::apply_step(state, stage1, problem, bc, cfg, t, dt);
    t += dt;
    ++res.steps;
    res.max_speed_seen = std::max(res.max_speed_seen, stage1.a_max);
    res.dt_history.push_back(dt);
    if (callback) callback(state, t);
  }
  res.t_end = t;
  res.flux_evaluations = problem.flux_counter().count() - evals0;
  return res;
}

}  // namespace relax
