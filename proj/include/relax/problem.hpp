#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cstdint>

namespace relax {

// Count of problem-flux evaluations at composition points, one increment per
// point. Monotone nondecreasing within a run; shared across threads.
class FluxCounter {
 public:
  void add(std::uint64_t n) const { count_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }
  void reset() const { count_.store(0, std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::uint64_t> count_{0};
};

// A 1D conservation-law problem: component fluxes and signed local eigenvalue
// bounds, evaluated in bulk (one call per field keeps per-point flash work to
// a single pass and makes the evaluation count explicit).
class Problem1D {
 public:
  virtual ~Problem1D() = default;

  virtual int n_components() const = 0;

  // C: (n_components x n_points). Fills F (same shape) and the per-point
  // eigenvalue bounds lam_min <= lam_max. Counts n_points flux evaluations.
  void evaluate(const Eigen::MatrixXd& C, Eigen::MatrixXd& F,
                Eigen::VectorXd& lam_min, Eigen::VectorXd& lam_max) const {
    counter_.add(static_cast<std::uint64_t>(C.cols()));
    evaluate_impl(C, F, lam_min, lam_max);
  }

  // Largest |eigenvalue| over the problem's admissible state set, when known
  // a priori (0 otherwise). Lets constant-speed schemes dominate states that
  // only appear later in a run.
  virtual double admissible_speed_bound() const { return 0.0; }

  virtual bool has_exact() const { return false; }
  // exact solution at (x, t); fills one column
  virtual void exact(double /*x*/, double /*t*/, Eigen::Ref<Eigen::VectorXd> /*out*/) const {
    throw std::logic_error("problem has no exact solution");
  }

  const FluxCounter& flux_counter() const { return counter_; }

 protected:
  virtual void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F,
                             Eigen::VectorXd& lam_min, Eigen::VectorXd& lam_max) const = 0;

 private:
  FluxCounter counter_;
};

// A 2D conservation-law problem with directional fluxes F (x) and G (y) and
// per-direction eigenvalue bounds. One evaluation per composition point
// yields both directions.
class Problem2D {
 public:
  virtual ~Problem2D() = default;

  virtual int n_components() const = 0;

  void evaluate(const Eigen::MatrixXd& C, Eigen::MatrixXd& F, Eigen::MatrixXd& G,
                Eigen::VectorXd& lx_min, Eigen::VectorXd& lx_max,
                Eigen::VectorXd& ly_min, Eigen::VectorXd& ly_max) const {
    counter_.add(static_cast<std::uint64_t>(C.cols()));
    evaluate_impl(C, F, G, lx_min, lx_max, ly_min, ly_max);
  }

  virtual bool has_exact() const { return false; }
  virtual void exact(double /*x*/, double /*y*/, double /*t*/,
                     Eigen::Ref<Eigen::VectorXd> /*out*/) const {
    throw std::logic_error("problem has no exact solution");
  }

  const FluxCounter& flux_counter() const { return counter_; }

 protected:
  virtual void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F, Eigen::MatrixXd& G,
                             Eigen::VectorXd& lx_min, Eigen::VectorXd& lx_max,
                             Eigen::VectorXd& ly_min, Eigen::VectorXd& ly_max) const = 0;

 private:
  FluxCounter counter_;
};

}  // namespace relax
