#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <memory>
#include <random>

#include "obmhd/error.hpp"
#include "obmhd/thermo.hpp"

using namespace obmhd;
using namespace obmhd::thermo;

namespace {

// Closed forms written out from p = rho theta + p_inf rho^{5/3} + a theta^4 / 3.
double p_ref(double r, double t, double pinf, double a) {
  return r * t + pinf * std::pow(r, 5.0 / 3.0) + a * std::pow(t, 4) / 3.0;
}
double e_ref(double r, double t, double pinf, double a) {
  return 1.5 * t + 1.5 * pinf * std::pow(r, 2.0 / 3.0) + a * std::pow(t, 4) / r;
}
double s_ref(double r, double t, double s0, double a) {
  return s0 - std::log(r) + 1.5 * std::log(t) + 4.0 * a * std::pow(t, 3) / (3.0 * r);
}

GasParams gas(double pinf, double a) {
  GasParams g;
  g.p_inf = pinf;
  g.a = a;
  return g;
}

}  // namespace

TEST_CASE("structural function values") {
  const GasParams g = gas(1.0, 0.0);
  CHECK(structural_P(0.0, g) == 0.0);
  CHECK(structural_P(1.0, g) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(structural_P(-1.0, g), DomainError);
  for (double pinf : {0.0, 0.3, 1.0, 7.0}) {
    PowerLawStructural P(pinf, 0.0);
    for (double z : {0.1, 1.0, 10.0}) {
      CHECK(std::abs((5.0 / 3.0 * P.P(z) - P.dP(z) * z) / z - 2.0 / 3.0) < 1e-12);
      CHECK(P.dS(z) < 0.0);
      CHECK(P.dP(z) > 0.0);
    }
  }
  PowerLawStructural P(2.0, 0.0);
  CHECK(P.P(1e8) / std::pow(1e8, 5.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("pressure, energy and entropy at tabulated points") {
  CHECK(Eos(gas(1.0, 3.0)).pressure({0.0, 2.0}) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(Eos(gas(1.0, 3.0)).pressure({1.0, 1.0}) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(Eos(gas(1.0, 0.0)).pressure({8.0, 4.0}) == doctest::Approx(64.0).epsilon(1e-14));
  CHECK(Eos(gas(1.0, 0.0)).internal_energy({1.0, 1.0}) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(Eos(gas(0.0, 3.0)).internal_energy({1.0, 1.0}) == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(std::abs(Eos(gas(1.0, 0.0)).entropy({1.0, 1.0})) < 1e-15);
  const Eos e(gas(1.0, 0.0));
  CHECK(e.entropy({0.7, 1.3}) == doctest::Approx(e.entropy({5.6, 5.2})).epsilon(1e-13));
}

TEST_CASE("domain errors") {
  const Eos e(gas(1.0, 0.0));
  CHECK_THROWS_AS(e.pressure({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(e.pressure({1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(e.internal_energy({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(e.entropy({-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(mu(-0.1, GasParams{}), DomainError);
  GasParams bad;
  bad.a = -1.0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("closed forms agree with independent formulas") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (double a : {0.0, 0.7}) {
    const Eos e(gas(1.3, a));
    for (int n = 0; n < 100; ++n) {
      const double r = U(rng), t = U(rng);
      CHECK(e.pressure({r, t}) == doctest::Approx(p_ref(r, t, 1.3, a)).epsilon(1e-13));
      CHECK(e.internal_energy({r, t}) == doctest::Approx(e_ref(r, t, 1.3, a)).epsilon(1e-13));
      CHECK(e.entropy({r, t}) - s_ref(r, t, 0.0, a) == doctest::Approx(0.0).epsilon(1e-12));
      const double pm = e.molecular_pressure({r, t});
      CHECK(std::abs(pm - 2.0 / 3.0 * r * e.molecular_energy({r, t})) <= 4 * DBL_EPSILON * pm);
    }
  }
}

TEST_CASE("derivatives at the unit state") {
  const Eos e(gas(1.0, 0.0));
  const ThermoPoint pt{1.0, 1.0};
  CHECK(e.dp_drho(pt) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(e.dp_dtheta(pt) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.de_dtheta(pt) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(e.ds_drho(pt) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.ds_dtheta(pt) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("derivatives against central differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  const double h = 1e-5;
  const Eos e(gas(1.0, 0.4));
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  for (int n = 0; n < 100; ++n) {
    const double r = U(rng), t = U(rng);
    auto P = [&](double x, double y) { return e.pressure({x, y}); };
    auto E = [&](double x, double y) { return e.internal_energy({x, y}); };
    auto S = [&](double x, double y) { return e.entropy({x, y}); };
    CHECK(rel(e.dp_drho({r, t}), (P(r + h, t) - P(r - h, t)) / (2 * h)) < 1e-7);
    CHECK(rel(e.dp_dtheta({r, t}), (P(r, t + h) - P(r, t - h)) / (2 * h)) < 1e-7);
    CHECK(rel(e.de_drho({r, t}), (E(r + h, t) - E(r - h, t)) / (2 * h)) < 1e-7);
    CHECK(rel(e.de_dtheta({r, t}), (E(r, t + h) - E(r, t - h)) / (2 * h)) < 1e-7);
    CHECK(rel(e.ds_drho({r, t}), (S(r + h, t) - S(r - h, t)) / (2 * h)) < 1e-7);
    CHECK(rel(e.ds_dtheta({r, t}), (S(r, t + h) - S(r, t - h)) / (2 * h)) < 1e-7);
  }
}

TEST_CASE("thermodynamic stability on a logarithmic sample") {
  const Eos e(gas(1.0, 0.5));
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double r = std::pow(10.0, -2.0 + 0.1 * i), t = std::pow(10.0, -2.0 + 0.1 * j);
      CHECK(e.dp_drho({r, t}) > 0.0);
      CHECK(e.de_dtheta({r, t}) > 0.0);
    }
}

TEST_CASE("Gibbs relation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (double a : {0.0, 2.0}) {
    const Eos e(gas(1.0, a));
    const auto [g0, g1] = e.gibbs_residual({1.0, 1.0});
    CHECK(g0 < 1e-12);
    CHECK(g1 < 1e-12);
    for (int n = 0; n < 100; ++n) {
      const auto [x, y] = e.gibbs_residual({U(rng), U(rng)});
      CHECK(x < 1e-12);
      CHECK(y < 1e-12);
    }
  }
  const Eos tampered(gas(1.0, 0.0), std::make_shared<TamperedEntropy>(std::make_shared<PowerLawStructural>(1.0, 0.0), 1.05));
  const auto [x, y] = tampered.gibbs_residual({1.3, 0.8});
  CHECK(std::max(x, y) > 1e-3);
}

TEST_CASE("expansion coefficient and specific heat") {
  const Eos e(gas(1.0, 0.0));
  const ReferenceState ref;
  const auto [alpha, cp] = alpha_cp(ref, e);
  CHECK(alpha == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
  CHECK(cp == doctest::Approx(15.0 / 8.0).epsilon(1e-14));
  CHECK(ref.rho_bar * cp - ref.theta_bar * alpha * e.dp_dtheta({1, 1}) == doctest::Approx(1.5).epsilon(1e-14));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(0.2, 5.0);
  for (int n = 0; n < 100; ++n) {
    const Eos ea(gas(U(rng), U(rng) - 0.2));
    ReferenceState r;
    r.rho_bar = U(rng);
    r.theta_bar = U(rng);
    const auto c = reference_coefficients(r, ea);
    CHECK(c.alpha > 0.0);
    CHECK(std::abs(r.rho_bar * c.cp - r.theta_bar * c.alpha * c.dp_dtheta - r.rho_bar * c.de_dtheta) <
          1e-12 * std::max(1.0, r.rho_bar * c.cp));
    const auto [d1, d2] = drift_coefficients(r, ea);
    CHECK(std::abs(d1 + d2) < 1e-12);
    const auto [k1, k2] = conduction_coefficients(r, ea);
    CHECK(std::abs(k1 - k2) < 1e-12);
  }
  const auto [d1, d2] = drift_coefficients(ref, e);
  CHECK(d1 == doctest::Approx(-0.3).epsilon(1e-14));
  CHECK(d2 == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("transport coefficients") {
  GasParams g;
  CHECK(mu(0.0, g) == g.mu_low);
  CHECK(eta(1.7, g) == 0.0);
  g.kappa_low = 1.0;
  g.beta = 3.0;
  CHECK(kappa(1.0, g) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(zeta(1.0, g) == doctest::Approx(2.0 * g.zeta_low).epsilon(1e-15));
  const double h = 1e-6;
  for (double t : {0.3, 1.0, 2.5}) {
    CHECK(kappa_prime(t, g) == doctest::Approx((kappa(t + h, g) - kappa(t - h, g)) / (2 * h)).epsilon(1e-7));
    CHECK(mu_prime(t, g) == doctest::Approx((mu(t + h, g) - mu(t - h, g)) / (2 * h)).epsilon(1e-7));
  }
}
