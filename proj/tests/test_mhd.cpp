#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "obmhd/error.hpp"
#include "obmhd/mhd.hpp"
#include "obmhd/relent.hpp"

using namespace obmhd;
using std::numbers::pi;

namespace {

MhdConfig flat_config(const Grid& g, double eps) {
  MhdConfig c = MhdConfig::defaults(g, eps);
  c.G = ScalarField(g);
  return c;
}

// Smooth admissible state compatible with the wall parities.
PrimitiveState random_state(const MhdConfig& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double a[10];
  for (double& x : a) x = U(rng);
  const Grid& g = c.grid;
  PrimitiveState s = rest_state(c);
  s.rho = ScalarField::sample(g, [&](double x1, double, double x3) { return 1.0 + 0.2 * a[0] * std::cos(pi * x1) * std::cos(pi * x3); });
  s.theta = ScalarField::sample(g, [&](double x1, double, double x3) { return 1.0 + 0.2 * a[1] * std::sin(pi * x1 + 1) * std::sin(pi * x3); });
  s.u[0] = ScalarField::sample(g, [&](double x1, double, double x3) { return a[2] * std::sin(pi * x1) * std::cos(pi * x3); });
  s.u[1] = ScalarField::sample(g, [&](double x1, double, double x3) { return a[3] * std::cos(pi * x1) * std::cos(2 * pi * x3); });
  s.u[2] = ScalarField::sample(g, [&](double x1, double, double x3) { return a[4] * std::cos(pi * x1) * std::sin(pi * x3); });
  s.B[0] = ScalarField::sample(g, [&](double x1, double, double x3) { return 0.3 * a[5] * std::cos(pi * x1) * std::sin(pi * x3); });
  s.B[1] = ScalarField::sample(g, [&](double x1, double, double x3) { return 0.3 * a[6] * std::sin(pi * x1) * std::sin(2 * pi * x3); });
  s.B[2] = ScalarField::sample(g, [&](double x1, double, double x3) { return 1.0 + 0.3 * a[5] * std::sin(pi * x1) * std::cos(pi * x3); });
  return s;
}

double mode_amplitude(const ScalarField& f, int k) {
  const Grid& g = f.grid();
  double s = 0.0, w = 0.0;
  for (int k3 = 0; k3 < g.n3(); ++k3)
    for (int i = 0; i < g.n1(); ++i) {
      s += f.at(i, 0, k3) * std::cos(pi * k * g.x1(i)) * g.cell_weight(k3);
      w += std::cos(pi * k * g.x1(i)) * std::cos(pi * k * g.x1(i)) * g.cell_weight(k3);
    }
  return s / w;
}

}  // namespace

TEST_CASE("viscous stress") {
  const thermo::GasParams gas;
  const Tensor3 zero{};
  const Tensor3 s0 = viscous_stress(1.3, zero, gas);
  for (auto& row : s0)
    for (double v : row) CHECK(v == 0.0);
  Tensor3 shear{};
  shear[0][2] = 1.0;
  const Tensor3 s1 = viscous_stress(1.3, shear, gas);
  CHECK(s1[0][2] == doctest::Approx(thermo::mu(1.3, gas)).epsilon(1e-15));
  CHECK(s1[2][0] == doctest::Approx(thermo::mu(1.3, gas)).epsilon(1e-15));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!((i == 0 && j == 2) || (i == 2 && j == 0))) CHECK(s1[i][j] == 0.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int n = 0; n < 20; ++n) {
    Tensor3 gu;
    for (auto& row : gu)
      for (double& v : row) v = U(rng);
    const Tensor3 s = viscous_stress(1.0 + 0.5 * U(rng), gu, gas);
    CHECK(std::abs(s[0][0] + s[1][1] + s[2][2]) < 1e-12);
  }
}

TEST_CASE("rest state is an equilibrium") {
  const Grid g = Grid::strip2(16, 17);
  MhdConfig c = flat_config(g, 0.1);
  const PrimRhs r = prim_rhs(rest_state(c), c);
  CHECK(r.rho.max_abs() == 0.0);
  CHECK(r.u.max_abs() == 0.0);
  CHECK(r.theta.max_abs() == 0.0);
  CHECK(r.B.max_abs() == 0.0);

  MhdSolver solver(c);
  const PrimitiveState s0 = rest_state(c);
  PrimitiveState s = s0;
  for (int n = 0; n < 100; ++n) s = solver.step(s);
  CHECK((s.rho - s0.rho).max_abs() < 1e-13);
  CHECK(s.u.max_abs() < 1e-13);
  CHECK((s.theta - s0.theta).max_abs() < 1e-13);
  CHECK((s.B - s0.B).max_abs() < 1e-13);
}

TEST_CASE("positivity is enforced") {
  const Grid g = Grid::strip2(16, 9);
  MhdConfig c = flat_config(g, 0.1);
  PrimitiveState s = rest_state(c);
  s.rho[5] = -0.1;
  CHECK_THROWS_AS(prim_rhs(s, c), NumericalError);
  s = rest_state(c);
  s.theta[7] = 0.0;
  CHECK_THROWS_AS(prim_rhs(s, c), NumericalError);
  MhdSolver solver(c);
  CHECK_THROWS_AS(solver.step(rest_state(c), 1.0), NumericalError);
}

TEST_CASE("entropy production terms are nonnegative") {
  const Grid g = Grid::strip2(32, 17);
  const MhdConfig c = flat_config(g, 0.1);
  for (std::uint64_t n = 0; n < 10; ++n) {
    const EntropyProduction p = entropy_production(random_state(c, n), c);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(p.viscous[i] >= -1e-14);
      CHECK(p.thermal[i] >= -1e-14);
      CHECK(p.ohmic[i] >= -1e-14);
    }
  }
}

TEST_CASE("fast magnetosonic oscillation") {
  const Grid g = Grid::strip2(32, 33);
  const double eps = 0.05;
  MhdConfig c = flat_config(g, eps);
  c.gas.mu_low = c.gas.mu_high = 1e-4;
  c.gas.kappa_low = c.gas.kappa_high = 1e-4;
  c.gas.zeta_low = c.gas.zeta_high = 1e-4;
  const int k = 1;
  const thermo::Eos eos(c.gas);
  const double cs2 = eos.sound_speed_sq({c.ref.rho_bar, c.ref.theta_bar});
  const double omega = pi * k * std::sqrt(cs2 + c.ref.b_bar * c.ref.b_bar / c.ref.rho_bar) / eps;

  PrimitiveState s = rest_state(c);
  const double delta = 1e-6;
  const double dpt = eos.dp_dtheta({1, 1}), det = eos.de_dtheta({1, 1});
  const double dtheta = c.ref.theta_bar * dpt / (c.ref.rho_bar * c.ref.rho_bar * det);
  for (int k3 = 0; k3 < g.n3(); ++k3)
    for (int i = 0; i < g.n1(); ++i) {
      const double m = delta * std::cos(pi * k * g.x1(i));
      s.rho.at(i, 0, k3) += m;
      s.B[2].at(i, 0, k3) += c.ref.b_bar / c.ref.rho_bar * m;
      if (k3 > 0 && k3 < g.n3() - 1) s.theta.at(i, 0, k3) += dtheta * m;
    }
  MhdSolver solver(c);
  const double dt = 0.5 * solver.stable_dt(s);
  double prev = mode_amplitude(s.rho, k), t_prev = 0.0;
  std::vector<double> crossings;
  while (crossings.size() < 3 && s.t < 10.0 / omega * 2 * pi) {
    s = solver.step(s, dt);
    const double a = mode_amplitude(s.rho, k);
    if ((a > 0) != (prev > 0)) crossings.push_back(t_prev + (s.t - t_prev) * prev / (prev - a));
    prev = a;
    t_prev = s.t;
  }
  REQUIRE(crossings.size() == 3);
  const double half_period = 0.5 * (crossings[2] - crossings[0]);
  CHECK(pi / half_period == doctest::Approx(omega).epsilon(0.01));
}

TEST_CASE("mass conservation and divergence control for well-prepared data") {
  const Grid g = Grid::strip2(32, 33);
  const double eps = 0.1;
  MhdConfig mc = MhdConfig::defaults(g, eps);
  ObmConfig oc = ObmConfig::defaults(g);
  const Profiles pr = default_profiles(g, oc.theta_B_bottom, oc.theta_B_top);
  PrimitiveState s = well_prepared_data(pr, eps, oc, mc).first;
  MhdSolver solver(mc);
  solver.apply_bc(s);
  const double m0 = integral(s.rho);
  const double b0 = mean(s.B[2]);
  double div_max = 0.0, prod_min = 0.0;
  for (int n = 0; n < 200; ++n) {
    s = solver.step(s);
    const MhdDiagnostics d = mhd_diagnostics(s, mc);
    div_max = std::max(div_max, d.max_div_b);
    prod_min = std::min(prod_min, d.min_production_term);
  }
  CHECK(std::abs(integral(s.rho) - m0) < 1e-12);
  CHECK(std::abs(mean(s.B[2]) - b0) < 1e-12);
  CHECK(div_max < 1e-8);
  CHECK(prod_min >= -1e-14);
  for (int i = 0; i < g.n1(); ++i) {
    CHECK(s.u[2].at(i, 0, 0) == 0.0);
    CHECK(s.u[2].at(i, 0, g.n3() - 1) == 0.0);
    CHECK(s.B[0].at(i, 0, 0) == 0.0);
    CHECK(s.B[1].at(i, 0, g.n3() - 1) == 0.0);
    CHECK(s.theta.at(i, 0, 0) == doctest::Approx(mc.ref.theta_bar + eps * mc.theta_B_bottom.at(i, 0, 0)).epsilon(1e-15));
  }
}

TEST_CASE("out-of-plane sector decouples") {
  const Grid g = Grid::strip2(32, 17);
  MhdConfig c = flat_config(g, 0.2);
  PrimitiveState s = rest_state(c);
  s.u[0] = ScalarField::sample(g, [](double x1, double, double) { return 0.3 * std::sin(pi * x1); });
  s.B[2] = ScalarField::sample(g, [](double x1, double, double) { return 1.0 + 0.1 * std::cos(pi * x1); });
  MhdSolver solver(c);
  for (int n = 0; n < 100; ++n) s = solver.step(s);
  CHECK(s.u[1].max_abs() < 1e-12);
  CHECK(s.B[1].max_abs() < 1e-12);
}

TEST_CASE("ballistic energy") {
  const Grid g = Grid::strip2(16, 9);
  const MhdConfig c = flat_config(g, 0.1);
  const PrimitiveState s = rest_state(c);
  const ScalarField psi(g, c.ref.theta_bar);
  const thermo::Eos eos(c.gas);
  const thermo::ThermoPoint p{c.ref.rho_bar, c.ref.theta_bar};
  const double expected = g.volume() / (c.eps * c.eps) *
                          (c.ref.rho_bar * eos.internal_energy(p) + 0.5 * c.ref.b_bar * c.ref.b_bar -
                           c.ref.theta_bar * c.ref.rho_bar * eos.entropy(p));
  CHECK(ballistic_energy(s, psi, c) == doctest::Approx(expected).epsilon(1e-13));
  PrimitiveState moving = s;
  moving.u[0] = ScalarField(g, 0.01);
  CHECK(ballistic_energy(moving, psi, c) > ballistic_energy(s, psi, c));
  CHECK_THROWS_AS(ballistic_energy(s, ScalarField(g, 0.0), c), DomainError);
}
