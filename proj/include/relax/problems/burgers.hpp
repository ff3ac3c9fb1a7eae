#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "relax/core/errors.hpp"
#include "relax/problem.hpp"

namespace relax {

// Scalar Burgers equation C_t + (C^2/2)_x = 0 with C(x,0) = 0.5 + sin x on
// [-pi, pi]. The smooth solution holds up to the shock time T_c = 1; for
// t < 1 it is recovered by solving the fixed point C = 0.5 + sin(x - C t)
// with safeguarded Newton (bisection fallback).
class BurgersProblem : public Problem1D {
 public:
  int n_components() const override { return 1; }

  bool has_exact() const override { return true; }

  void exact(double x, double t, Eigen::Ref<Eigen::VectorXd> out) const override {
    if (t >= 1.0)
      throw NumericalError("Burgers exact solution requested at t >= shock time T_c = 1");
    out(0) = solve_exact(x, t);
  }

  static double initial(double x) { return 0.5 + std::sin(x); }

  static double solve_exact(double x, double t) {
    if (t == 0.0) return initial(x);
    // g(C) = C - 0.5 - sin(x - C t) is strictly increasing for t < 1
    double lo = -0.5, hi = 1.5;
    double c = initial(x);  // warm start
    for (int it = 0; it < 100; ++it) {
      const double g = c - 0.5 - std::sin(x - c * t);
      if (std::abs(g) < 1e-15) return c;
      if (g > 0)
        hi = c;
      else
        lo = c;
      const double dg = 1.0 + t * std::cos(x - c * t);
      double next = c - g / dg;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      c = next;
    }
    return c;
  }

 protected:
  void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F,
                     Eigen::VectorXd& lam_min, Eigen::VectorXd& lam_max) const override {
    F = 0.5 * C.cwiseProduct(C);
    lam_min = C.row(0).transpose();
    lam_max = C.row(0).transpose();
  }
};

// Linear advection F = u C; exact solution translates the initial profile.
// Convergence oracle for the schemes (smooth solutions, known order).
class AdvectionProblem : public Problem1D {
 public:
  explicit AdvectionProblem(double velocity = 1.0,
                            std::function<double(double)> initial = {},
                            double period = 0.0)
      : u_(velocity), initial_(std::move(initial)), period_(period) {}

  int n_components() const override { return 1; }
  double admissible_speed_bound() const override { return std::abs(u_); }

  bool has_exact() const override { return static_cast<bool>(initial_); }
  void exact(double x, double t, Eigen::Ref<Eigen::VectorXd> out) const override {
    double x0 = x - u_ * t;
    if (period_ > 0.0) x0 -= period_ * std::floor(x0 / period_);
    out(0) = initial_(x0);
  }

  double velocity() const { return u_; }

 protected:
  void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F,
                     Eigen::VectorXd& lam_min, Eigen::VectorXd& lam_max) const override {
    F = u_ * C;
    lam_min.setConstant(C.cols(), u_);
    lam_max.setConstant(C.cols(), u_);
  }

 private:
  double u_;
  std::function<double(double)> initial_;
  double period_;
};

}  // namespace relax
