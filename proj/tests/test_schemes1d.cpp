#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "relax/core/norms.hpp"
#include "relax/problems/burgers.hpp"
#include "relax/problems/ternary.hpp"
#include "relax/schemes1d/stepper.hpp"

using namespace relax;

namespace {

// small Burgers field over n cells with prescribed interior values
StateField1Dd make_burgers_field(const std::vector<double>& vals, double x0 = 0.0,
                                 double x1 = 1.0) {
  Grid1D g(static_cast<int>(vals.size()), x0, x1);
  StateField1Dd f(1, g);
  for (std::size_t j = 0; j < vals.size(); ++j) f.interior(0, int(j)) = vals[j];
  return f;
}

StateField1Dd random_burgers_field(int n, std::mt19937_64& rng, double lo = -1.0,
                                   double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return make_burgers_field(v);
}

StateField1Dd burgers_sine_field(int n) {
  Grid1D g(n, -M_PI, M_PI);
  StateField1Dd f(1, g);
  for (int j = 0; j < n; ++j) f.interior(0, j) = BurgersProblem::initial(g.center(j));
  return f;
}

// evaluated cell arrays for speed-selection tests
struct Evaluated {
  Eigen::MatrixXd F;
  Eigen::VectorXd lmin, lmax;
};

Evaluated evaluate_all(const Problem1D& p, const StateField1Dd& f) {
  Evaluated e;
  p.evaluate(f.values(), e.F, e.lmin, e.lmax);
  return e;
}

}  // namespace

TEST_CASE("jx global speed") {
  BurgersProblem prob;
  SchemeConfig cfg;

  SUBCASE("sine data peaks at 1.5") {
    auto f = burgers_sine_field(4000);
    CHECK(jx_global_speed(prob, f, cfg) == doctest::Approx(1.5).epsilon(1e-4));
    auto f40 = burgers_sine_field(40);
    CHECK(jx_global_speed(prob, f40, cfg) == doctest::Approx(1.5).epsilon(0.01));
  }
  SUBCASE("constant zero state floors") {
    auto f = make_burgers_field(std::vector<double>(8, 0.0));
    CHECK(jx_global_speed(prob, f, cfg) == cfg.speed_floor);
  }
  SUBCASE("ternary uses the admissible bound") {
    TernaryProblem tp(ternary_default_fluid());
    Grid1D g(50, 0.0, 2.5);
    StateField1Dd f(2, g);
    for (int j = 0; j < 50; ++j) {
      f.interior(0, j) = 0.0;
      f.interior(1, j) = 0.25;
    }
    CHECK(jx_global_speed(tp, f, cfg) == doctest::Approx(5.4).epsilon(0.02));
  }
  SUBCASE("non-finite state rejected") {
    auto f = make_burgers_field({1.0, std::numeric_limits<double>::quiet_NaN(), 0.0});
    CHECK_THROWS_AS(jx_global_speed(prob, f, cfg), NumericalError);
  }
}

TEST_CASE("symmetric speed selection") {
  BurgersProblem prob;
  SchemeConfig cfg;

  auto f = make_burgers_field({0.2, 0.8, 0.8, -1.0, 1.0, 0.3, 0.3});
  fill_ghosts(f, BoundarySpec1D::extrapolate(), 0.0);
  auto e = evaluate_all(prob, f);
  auto sp = select_speeds_symmetric(f.values(), e.F, e.lmin, e.lmax, cfg);

  const int fb = f.grid().interior_begin();  // face between interior cells 0,1
  // endpoint max 0.8 dominates the RH slope (0.32-0.02)/0.6 = 0.5
  CHECK(sp.a_plus(0, fb) == doctest::Approx(0.8));
  CHECK(sp.a_minus(0, fb) == doctest::Approx(-0.8));
  // equal states: a = max(|c|, floor)
  CHECK(sp.a_plus(0, fb + 1) == doctest::Approx(0.8));
  // states {-1, 1}: RH slope 0, endpoints 1
  CHECK(sp.a_plus(0, fb + 3) == doctest::Approx(1.0));
  // equal states at |c| = 0.3
  CHECK(sp.a_plus(0, fb + 5) == doctest::Approx(0.3));

  auto zero = make_burgers_field({0.0, 0.0, 0.0});
  fill_ghosts(zero, BoundarySpec1D::extrapolate(), 0.0);
  auto ez = evaluate_all(prob, zero);
  auto spz = select_speeds_symmetric(zero.values(), ez.F, ez.lmin, ez.lmax, cfg);
  CHECK(spz.a_plus(0, 2) == cfg.speed_floor);
}

TEST_CASE("optimal speed selection") {
  BurgersProblem prob;
  SchemeConfig cfg;

  auto f = make_burgers_field({0.2, 0.8, -0.4, 0.8, 0.5, 0.5});
  fill_ghosts(f, BoundarySpec1D::extrapolate(), 0.0);
  auto e = evaluate_all(prob, f);
  auto sp = select_speeds_optimal(f.values(), e.F, e.lmin, e.lmax, cfg);

  const int fb = f.grid().interior_begin();
  // all eigenvalues >= 0: upwind recovered, (a-, a+) = (0, 0.8)
  CHECK(sp.a_minus(0, fb) == 0.0);
  CHECK(sp.a_plus(0, fb) == doctest::Approx(0.8));
  // endpoints straddle zero: (-0.4, 0.8)
  CHECK(sp.a_minus(0, fb + 1) == doctest::Approx(-0.4));
  CHECK(sp.a_plus(0, fb + 1) == doctest::Approx(0.8));
  // constant state: one-sided degenerate pair (0, floor) never divides by zero
  CHECK(sp.a_minus(0, fb + 3) == 0.0);
  CHECK(sp.a_plus(0, fb + 3) == cfg.speed_floor);
}

TEST_CASE("first order flux kernel") {
  // equal states reproduce the pointwise flux
  CHECK(first_order_flux(2.0, 2.0, 7.0, 7.0, -1.0, 3.0) == doctest::Approx(7.0));
  // linear advection F = 2C, states {1, 3}: upwind with (0, 2)
  CHECK(first_order_flux(1.0, 3.0, 2.0, 6.0, 0.0, 2.0) == 2.0);
  // same states, symmetric speeds: LLF value 1/2(2+6) - 1/2*2*2 = 2
  CHECK(first_order_flux(1.0, 3.0, 2.0, 6.0, -2.0, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("second order correction kernel") {
  SUBCASE("flat stencil gives zero") {
    const double C[4] = {1.0, 1.0, 1.0, 1.0}, F[4] = {0.5, 0.5, 0.5, 0.5};
    const double am[3] = {-1.0, -1.0, -1.0}, ap[3] = {1.0, 1.0, 1.0};
    CHECK(second_order_correction(C, F, am, ap) == 0.0);
  }
  SUBCASE("linear data at constant speeds reduces to the constant-speed form") {
    // affine C and F: theta = 1, phi = 1, correction = a dC / 2
    const double a = 1.7;
    const double C[4] = {0.1, 0.4, 0.7, 1.0};
    const double F[4] = {2.0, 2.6, 3.2, 3.8};
    const double am[3] = {-a, -a, -a}, ap[3] = {a, a, a};
    const double corr = second_order_correction(C, F, am, ap);
    CHECK(corr == doctest::Approx(0.5 * a * 0.3).epsilon(1e-14));

    kernels::FaceWave<double> w[3];
    for (int k = 0; k < 3; ++k) w[k] = {C[k + 1] - C[k], F[k + 1] - F[k], -a, a};
    CHECK(kernels::jx_correction(w[0], w[1], w[2], 0.0) == doctest::Approx(corr).epsilon(1e-14));
  }
  SUBCASE("constant speeds, arbitrary data: variable correction equals JX") {
    // the left-going limiter parameter is the reciprocal of the JX one; the
    // van Leer symmetry phi(theta)/theta = phi(1/theta) makes the fluxes equal
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      const double a = 0.5 + std::abs(u(rng)) * 2.0;
      double C[4], F[4], am[3], ap[3];
      for (int k = 0; k < 4; ++k) {
        C[k] = u(rng);
        F[k] = 0.5 * C[k] * C[k];
      }
      for (int k = 0; k < 3; ++k) {
        am[k] = -a;
        ap[k] = a;
      }
      const double vr = second_order_correction(C, F, am, ap);
      kernels::FaceWave<double> w[3];
      for (int k = 0; k < 3; ++k) w[k] = {C[k + 1] - C[k], F[k + 1] - F[k], -a, a};
      const double jx = kernels::jx_correction(w[0], w[1], w[2], 0.0);
      CHECK(vr == doctest::Approx(jx).epsilon(1e-12));
    }
  }
}

TEST_CASE("semi-discrete rhs basics") {
  BurgersProblem prob;

  SUBCASE("constant state has zero derivative for every scheme") {
    for (auto kind : {SchemeKind::JX, SchemeKind::VRS, SchemeKind::VRO}) {
      for (int order : {1, 2}) {
        SchemeConfig cfg;
        cfg.scheme = kind;
        cfg.order = order;
        auto f = make_burgers_field(std::vector<double>(12, 0.7));
        auto rhs = semi_discrete_rhs(f, prob, BoundarySpec1D::periodic(), cfg);
        CHECK(rhs.cwiseAbs().maxCoeff() <= 1e-14);
      }
    }
  }

  SUBCASE("VRO order 1 on positive-speed advection is first-order upwind") {
    AdvectionProblem adv(2.0);
    std::mt19937_64 rng(5);
    auto f = random_burgers_field(32, rng, 0.1, 1.0);
    SchemeConfig cfg;
    cfg.scheme = SchemeKind::VRO;
    cfg.order = 1;
    auto rhs = semi_discrete_rhs(f, adv, BoundarySpec1D::periodic(), cfg);
    const double dx = f.grid().dx();
    for (int j = 0; j < 32; ++j) {
      const double left = f.interior(0, (j + 31) % 32);
      const double expected = -2.0 * (f.interior(0, j) - left) / dx;
      CHECK(rhs(0, j) == doctest::Approx(expected).epsilon(1e-13));
    }
  }

  SUBCASE("flux evaluation count is one per cell including ghosts") {
    BurgersProblem fresh;
    std::mt19937_64 rng(6);
    auto f = random_burgers_field(50, rng);
    SchemeConfig cfg;
    cfg.order = 2;
    (void)semi_discrete_rhs(f, fresh, BoundarySpec1D::periodic(), cfg);
    CHECK(fresh.flux_counter().count() == 50 + 2 * f.grid().ghost_width);
    fresh.flux_counter().reset();
    cfg.order = 1;
    (void)semi_discrete_rhs(f, fresh, BoundarySpec1D::periodic(), cfg);
    CHECK(fresh.flux_counter().count() == 54);  // independent of order
  }
}

TEST_CASE("JX with a = dx/dt is Lax-Friedrichs") {
  BurgersProblem prob;
  std::mt19937_64 rng(17);
  auto f = random_burgers_field(24, rng);
  const double dx = f.grid().dx();
  const double a = 1.25;
  const double dt = dx / a;

  SchemeConfig cfg;
  cfg.scheme = SchemeKind::JX;
  cfg.order = 1;
  cfg.cfl = 1.0;
  cfg.pinned_speed = a;

  StateField1Dd before = f;
  fill_ghosts(before, BoundarySpec1D::periodic(), 0.0);
  step_1d(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, dt);

  for (int j = 0; j < 24; ++j) {
    const double cl = before.interior(0, (j + 23) % 24);
    const double cr = before.interior(0, (j + 1) % 24);
    const double fl = 0.5 * cl * cl, fr = 0.5 * cr * cr;
    const double lxf = 0.5 * (cl + cr) - 0.5 * dt / dx * (fr - fl);
    CHECK(f.interior(0, j) == doctest::Approx(lxf).epsilon(1e-13));
  }
}

TEST_CASE("step basics") {
  BurgersProblem prob;
  SchemeConfig cfg;

  SUBCASE("dt = 0 leaves the state unchanged") {
    auto f = burgers_sine_field(20);
    auto before = f.interior_block().eval();
    step_1d(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, 0.0);
    CHECK((f.interior_block() - before).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("CFL violation is rejected with the offending speed") {
    auto f = burgers_sine_field(20);
    const double dx = f.grid().dx();
    try {
      step_1d(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, 10.0 * dx);
      FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
      CHECK(std::string(e.what()).find("a_max") != std::string::npos);
    }
  }
  SUBCASE("one smooth VRS-2 step does not increase total variation") {
    auto f = burgers_sine_field(64);
    cfg.scheme = SchemeKind::VRS;
    cfg.order = 2;
    const double tv0 = total_variation(f, 0);
    const double dt = stable_dt(f, prob, BoundarySpec1D::periodic(), cfg);
    step_1d(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, dt);
    CHECK(total_variation(f, 0) <= tv0 + 1e-12);
  }
}

TEST_CASE("discrete conservation under periodic boundaries") {
  BurgersProblem prob;
  std::mt19937_64 rng(23);
  for (auto kind : {SchemeKind::JX, SchemeKind::VRS, SchemeKind::VRO}) {
    for (int order : {1, 2}) {
      SchemeConfig cfg;
      cfg.scheme = kind;
      cfg.order = order;
      auto f = random_burgers_field(40, rng);
      const double sum0 = f.interior_block().sum();
      for (int s = 0; s < 5; ++s) {
        const double dt = stable_dt(f, prob, BoundarySpec1D::periodic(), cfg);
        step_1d(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, std::min(dt, 0.01));
      }
      CHECK(f.interior_block().sum() ==
            doctest::Approx(sum0).epsilon(1e-12));
    }
  }
}

TEST_CASE("reduction identity: VRS pinned to the JX constant matches JX") {
  BurgersProblem prob;
  std::mt19937_64 rng(31);
  for (int order : {1, 2}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_burgers_field(30, rng);
      const double a = jx_global_speed(prob, f);
      const double dt = 0.5 * f.grid().dx() / a;

      SchemeConfig jx;
      jx.scheme = SchemeKind::JX;
      jx.order = order;
      SchemeConfig vrs;
      vrs.scheme = SchemeKind::VRS;
      vrs.order = order;
      vrs.pinned_speed = a;

      StateField1Dd f_jx = f, f_vrs = f;
      step_1d(f_jx, prob, BoundarySpec1D::periodic(), jx, 0.0, dt);
      step_1d(f_vrs, prob, BoundarySpec1D::periodic(), vrs, 0.0, dt);
      const double diff =
          (f_jx.interior_block() - f_vrs.interior_block()).cwiseAbs().maxCoeff();
      CHECK(diff <= 1e-13);
    }
  }
}

TEST_CASE("monotone profiles stay monotone (first order)") {
  BurgersProblem prob;
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  auto run = [&](SchemeKind kind, double cfl) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> v(40);
      double acc = -1.0 + u(rng);
      for (auto& x : v) {
        x = acc;
        acc += 0.05 * u(rng);
      }
      if (trial % 2) std::reverse(v.begin(), v.end());
      const double dir = v.back() >= v.front() ? 1.0 : -1.0;
      auto f = make_burgers_field(v);
      SchemeConfig cfg;
      cfg.scheme = kind;
      cfg.order = 1;
      cfg.cfl = cfl;
      for (int s = 0; s < 50; ++s) {
        double dt = stable_dt(f, prob, BoundarySpec1D::extrapolate(), cfg);
        step_1d(f, prob, BoundarySpec1D::extrapolate(), cfg, 0.0, std::min(dt, 0.05));
        for (int j = 0; j + 1 < 40; ++j)
          CHECK(dir * (f.interior(0, j + 1) - f.interior(0, j)) >= -1e-12);
      }
    }
  };
  run(SchemeKind::VRS, 1.0);
  run(SchemeKind::VRO, 0.5);
}

TEST_CASE("TVD under the theorem hypotheses (second order)") {
  BurgersProblem prob;
  std::mt19937_64 rng(71);
  for (auto kind : {SchemeKind::VRS, SchemeKind::VRO}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_burgers_field(50, rng);
      SchemeConfig cfg;
      cfg.scheme = kind;
      cfg.order = 2;
      cfg.cfl = 0.5;
      double tv = total_variation(f, 0);
      for (int s = 0; s < 20; ++s) {
        double dt = stable_dt(f, prob, BoundarySpec1D::extrapolate(), cfg);
        step_1d(f, prob, BoundarySpec1D::extrapolate(), cfg, 0.0, std::min(dt, 1.0));
        const double tv_new = total_variation(f, 0);
        CHECK(tv_new <= tv + 1e-12);
        tv = tv_new;
      }
    }
  }
}

TEST_CASE("march reproduces the Burgers reference error at N = 40") {
  BurgersProblem prob;
  SchemeConfig cfg;
  cfg.scheme = SchemeKind::JX;
  cfg.order = 2;
  cfg.cfl = 0.5;

  auto f = burgers_sine_field(40);
  advance_to(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, 0.5);

  StateField1Dd ref(1, f.grid());
  Eigen::VectorXd val(1);
  for (int j = 0; j < 40; ++j) {
    prob.exact(f.grid().center(j), 0.5, val);
    ref.interior(0, j) = val(0);
  }
  const auto en = error_norms(f, ref);
  CHECK(en.l1 == doctest::Approx(1.7527e-2).epsilon(0.05));
}

TEST_CASE("flux evaluation accounting over a march") {
  BurgersProblem prob;
  SchemeConfig cfg;
  cfg.scheme = SchemeKind::VRS;
  cfg.order = 2;
  auto f = burgers_sine_field(50);
  const auto res = advance_to(f, prob, BoundarySpec1D::periodic(), cfg, 0.0, 0.2);
  const std::uint64_t per_stage = 50 + 2 * f.grid().ghost_width;
  CHECK(res.flux_evaluations == 2ull * res.steps * per_stage);

  BurgersProblem prob1;
  cfg.order = 1;
  auto f1 = burgers_sine_field(50);
  const auto res1 = advance_to(f1, prob1, BoundarySpec1D::periodic(), cfg, 0.0, 0.2);
  CHECK(res1.flux_evaluations == 1ull * res1.steps * per_stage);
}
