#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "relax/core/errors.hpp"
#include "relax/problem.hpp"

namespace relax {

// Constant-K three-component gas/oil system: K-values, residual saturations
// and the vapor/liquid viscosity ratio. Owns the flash and flow functions.
struct TernaryFluid {
  double K1 = 2.5, K2 = 1.5, K3 = 0.05;  // K1 > K2 > 1 > K3 > 0
  double S_or = 0.1;                     // residual oil saturation
  double S_gc = 0.2;                     // critical gas saturation
  double M = 1.0 / 20.0;                 // viscosity ratio mu_V / mu_L

  void validate() const {
    if (!(K1 > K2 && K2 > 1.0 && 1.0 > K3 && K3 > 0.0))
      throw ConfigError("TernaryFluid: requires K1 > K2 > 1 > K3 > 0");
    if (!(S_or >= 0.0 && S_or < 1.0 && S_gc >= 0.0 && S_gc < 1.0 && S_gc + S_or < 1.0))
      throw ConfigError("TernaryFluid: invalid residual saturations");
    if (!(M > 0.0)) throw ConfigError("TernaryFluid: viscosity ratio must be positive");
  }

  double gamma() const {  // nontie-line eigenvalue shape factor
    return (1.0 - K3) * (K2 - 1.0) / ((K1 - K3) * (K1 - K2));
  }
};

// Max eigenvalue 5.4 for the 1D displacement of the default fluid.
inline TernaryFluid ternary_default_fluid() { return TernaryFluid{}; }

// High-contrast variant: max eigenvalue 25.5 with average speed still 1.
// The viscosity ratio is 1/500 rather than the quoted 1/20, which together
// with S_gc = 0.3 reproduces the stated maximum of df/dS exactly.
inline TernaryFluid ternary_high_contrast_fluid() {
  TernaryFluid f;
  f.S_gc = 0.3;
  f.M = 1.0 / 500.0;
  return f;
}

// Fluid of the 2D displacement example: S_gc = 0.05, mu_V/mu_L = 1/2.
inline TernaryFluid ternary_2d_fluid() {
  TernaryFluid f;
  f.S_gc = 0.05;
  f.M = 0.5;
  return f;
}

enum class PhaseState { single_liquid, single_vapor, two_phase };

struct FlashResult {
  double S = 0.0;                    // vapor saturation
  Eigen::Vector3d c_V{0, 0, 0};      // vapor phase volume fractions
  Eigen::Vector3d c_L{0, 0, 0};      // liquid phase volume fractions
  PhaseState phase = PhaseState::single_liquid;
};

// Negative-flash phase test plus Rachford-Rice root. Single-phase states are
// detected before root-finding (the Rachford-Rice residual has no root in
// (0, 1) in those regimes); in a single-phase state both notional phase
// compositions equal the overall composition.
inline FlashResult flash(double C1, double C2, const TernaryFluid& fl) {
  const double C3 = 1.0 - C1 - C2;
  const double K[3] = {fl.K1, fl.K2, fl.K3};
  const double C[3] = {C1, C2, C3};

  double sumCK = 0.0, sumCoverK = 0.0;
  for (int i = 0; i < 3; ++i) {
    sumCK += C[i] * K[i];
    sumCoverK += C[i] / K[i];
  }

  FlashResult r;
  if (sumCK <= 1.0) {
    r.S = 0.0;
    r.phase = PhaseState::single_liquid;
    r.c_L = Eigen::Vector3d(C1, C2, C3);
    r.c_V = r.c_L;
    return r;
  }
  if (sumCoverK <= 1.0) {
    r.S = 1.0;
    r.phase = PhaseState::single_vapor;
    r.c_V = Eigen::Vector3d(C1, C2, C3);
    r.c_L = r.c_V;
    return r;
  }

  // Rachford-Rice: h(S) = sum_i C_i (K_i - 1) / (1 + S (K_i - 1)), strictly
  // decreasing on [0, 1] with h(0) > 0 > h(1). Newton with bisection bracket.
  auto h = [&](double S, double& dh) {
    double val = 0.0;
    dh = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double dK = K[i] - 1.0;
      const double den = 1.0 + S * dK;
      val += C[i] * dK / den;
      dh -= C[i] * dK * dK / (den * den);
    }
    return val;
  };

  double lo = 0.0, hi = 1.0, S = 0.5;
  for (int it = 0; it < 100; ++it) {
    double dh;
    const double val = h(S, dh);
    if (std::abs(val) <= 1e-12) break;
    if (val > 0)
      lo = S;
    else
      hi = S;
    double next = S - val / dh;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    S = next;
  }

  r.S = S;
  r.phase = PhaseState::two_phase;
  for (int i = 0; i < 3; ++i) {
    r.c_L(i) = C[i] / (1.0 + S * (K[i] - 1.0));
    r.c_V(i) = K[i] * r.c_L(i);
  }
  return r;
}

// Checked three-fraction entry point: the fractions must sum to 1.
inline FlashResult flash(const Eigen::Vector3d& C, const TernaryFluid& fl) {
  if (std::abs(C.sum() - 1.0) > 1e-10)
    throw ConfigError("flash: overall fractions must sum to 1");
  return flash(C(0), C(1), fl);
}

// Corey-type relative permeabilities, three branches of the quadratic form.
inline std::pair<double, double> relative_permeabilities(double S, const TernaryFluid& fl) {
  if (S <= fl.S_gc) return {0.0, 1.0};
  if (S >= 1.0 - fl.S_or) return {1.0, 0.0};
  const double d = 1.0 - fl.S_gc - fl.S_or;
  const double krV = (S - fl.S_gc) * (S - fl.S_gc) / (d * d);
  const double krL = (1.0 - S - fl.S_or) * (1.0 - S - fl.S_or) / (d * d);
  return {krV, krL};
}

// Vapor fractional flow f = krV / (krV + M krL); 0 below S_gc, 1 above
// 1 - S_or, monotone nondecreasing in between.
inline double fractional_flow(double S, const TernaryFluid& fl) {
  const auto [krV, krL] = relative_permeabilities(S, fl);
  if (krV == 0.0) return 0.0;
  if (krL == 0.0) return 1.0;
  return krV / (krV + fl.M * krL);
}

// Analytic df/dS through the quadratic permeability branches (quotient rule);
// vanishes outside the mobile range, continuous at the branch boundaries.
inline double fractional_flow_derivative(double S, const TernaryFluid& fl) {
  if (S <= fl.S_gc || S >= 1.0 - fl.S_or) return 0.0;
  const double d = 1.0 - fl.S_gc - fl.S_or;
  const double krV = (S - fl.S_gc) * (S - fl.S_gc) / (d * d);
  const double krL = (1.0 - S - fl.S_or) * (1.0 - S - fl.S_or) / (d * d);
  const double dkrV = 2.0 * (S - fl.S_gc) / (d * d);
  const double dkrL = -2.0 * (1.0 - S - fl.S_or) / (d * d);
  const double den = krV + fl.M * krL;
  return fl.M * (dkrV * krL - krV * dkrL) / (den * den);
}

struct TernaryEigenvalues {
  double lambda_t = 1.0;   // tie-line family
  double lambda_nt = 1.0;  // nontie-line family
  double spectral_radius() const { return std::max(std::abs(lambda_t), std::abs(lambda_nt)); }
};

// Eigenvalues from a completed flash. In the single-phase regions both
// families advect at unit (dimensionless) speed. The nontie-line formula
// lambda_nt = (F1 + q)/(C1 + q) degenerates at C1 = 0; its continuous limit
// (1 + f (K1-1)) / (1 + S (K1-1)) is substituted there.
inline TernaryEigenvalues ternary_eigenvalues_from_flash(double C1, const FlashResult& fr,
                                                         const TernaryFluid& fl) {
  TernaryEigenvalues eig;
  if (fr.phase != PhaseState::two_phase) return eig;  // lambda = 1, 1

  const double f = fractional_flow(fr.S, fl);
  eig.lambda_t = fractional_flow_derivative(fr.S, fl);

  const double q = fr.c_L(0) * fr.c_L(0) / fl.gamma();
  const double F1 = fr.c_V(0) * f + fr.c_L(0) * (1.0 - f);
  const double den = C1 + q;
  if (std::abs(den) <= 1e-14)
    eig.lambda_nt = (1.0 + f * (fl.K1 - 1.0)) / (1.0 + fr.S * (fl.K1 - 1.0));
  else
    eig.lambda_nt = (F1 + q) / den;
  return eig;
}

inline TernaryEigenvalues ternary_eigenvalues(double C1, double C2, const TernaryFluid& fl) {
  return ternary_eigenvalues_from_flash(C1, flash(C1, C2, fl), fl);
}

// 2x2 conservation system for the two lightest components of the ternary
// displacement. One flash per flux evaluation; eigenvalue bounds come from
// the same flash.
class TernaryProblem : public Problem1D {
 public:
  explicit TernaryProblem(TernaryFluid fluid = ternary_default_fluid()) : fluid_(fluid) {
    fluid_.validate();
    speed_bound_ = sample_speed_bound(fluid_);
  }

  int n_components() const override { return 2; }
  const TernaryFluid& fluid() const { return fluid_; }
  double admissible_speed_bound() const override { return speed_bound_; }

  // Largest spectral radius over the admissible composition space, by a
  // tie-line sweep of df/dS plus a two-phase composition sweep for the
  // nontie-line family.
  static double sample_speed_bound(const TernaryFluid& fl) {
    double bound = 1.0;  // single-phase speed
    const int ns = 8192;
    for (int k = 0; k <= ns; ++k)
      bound = std::max(bound, fractional_flow_derivative(double(k) / ns, fl));
    const int nc = 256;
    for (int i = 1; i < nc; ++i) {
      const double C1 = double(i) / nc;
      for (int j = 0; j < nc - i; ++j) {
        const double C2 = double(j) / nc;
        const FlashResult fr = flash(C1, C2, fl);
        if (fr.phase != PhaseState::two_phase) continue;
        bound = std::max(bound, ternary_eigenvalues_from_flash(C1, fr, fl).spectral_radius());
      }
    }
    return bound;
  }

 protected:
  void evaluate_impl(const Eigen::MatrixXd& C, Eigen::MatrixXd& F,
                     Eigen::VectorXd& lam_min, Eigen::VectorXd& lam_max) const override {
    const Eigen::Index n = C.cols();
    F.resize(2, n);
    lam_min.resize(n);
    lam_max.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double C1 = C(0, k), C2 = C(1, k);
      const FlashResult fr = flash(C1, C2, fluid_);
      const double f = fractional_flow(fr.S, fluid_);
      F(0, k) = fr.c_V(0) * f + fr.c_L(0) * (1.0 - f);
      F(1, k) = fr.c_V(1) * f + fr.c_L(1) * (1.0 - f);
      const TernaryEigenvalues eig = ternary_eigenvalues_from_flash(C1, fr, fluid_);
      lam_min(k) = std::min(eig.lambda_t, eig.lambda_nt);
      lam_max(k) = std::max(eig.lambda_t, eig.lambda_nt);
    }
  }

 private:
  TernaryFluid fluid_;
  double speed_bound_ = 1.0;
};

}  // namespace relax
