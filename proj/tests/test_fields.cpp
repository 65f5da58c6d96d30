#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <random>

#include "obmhd/error.hpp"
#include "obmhd/fields.hpp"
#include "obmhd/snapshot.hpp"

using namespace obmhd;
using std::numbers::pi;

namespace {

// Random smooth field: a few resolved modes with random amplitudes.
ScalarField random_smooth(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double a[6];
  for (double& x : a) x = U(rng);
  return ScalarField::sample(g, [&](double x1, double x2, double x3) {
    return a[0] + a[1] * std::sin(pi * x1) * std::cos(1.3 * x3) + a[2] * std::cos(2 * pi * x1 + 0.4) * x3 * x3 +
           a[3] * std::sin(pi * x2 + 0.2) * std::exp(x3) + a[4] * std::cos(pi * (x1 + x2)) * std::sin(2 * x3) +
           a[5] * x3;
  });
}

VectorField random_vector(const Grid& g, std::uint64_t seed) {
  return VectorField(random_smooth(g, seed), random_smooth(g, seed + 1), random_smooth(g, seed + 2));
}

double max_diff(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("grid layout") {
  const Grid g = Grid::strip3(8, 4, 5);
  CHECK(g.size() == 160);
  CHECK(g.index(1, 2, 3) == 1 + 8 * (2 + 4 * 3));
  CHECK(g.x1(0) == -1.0);
  CHECK(g.x3(4) == 1.0);
  CHECK(g.volume() == doctest::Approx(4.0));
  double w = 0.0;
  for (int k = 0; k < g.n3(); ++k) w += g.cell_weight(k) * g.plane_size();
  CHECK(w == doctest::Approx(g.volume()).epsilon(1e-14));
  CHECK_THROWS(Grid(Geometry::Strip2, 8, 1, 2));
  CHECK(geometry_from_string(to_string(Geometry::Strip3)) == Geometry::Strip3);
}

TEST_CASE("gradient of a constant vanishes") {
  const Grid g = Grid::strip3(16, 16, 9);
  const VectorField v = grad(ScalarField(g, 3.7));
  CHECK(v.max_abs() < 1e-13);
}

TEST_CASE("div curl vanishes") {
  const Grid g = Grid::strip2(64, 65);
  CHECK(div(curl(random_vector(g, 21))).max_abs() < 1e-8);
  const Grid g3 = Grid::strip3(16, 16, 17);
  CHECK(div(curl(random_vector(g3, 4))).max_abs() < 1e-8);
}

TEST_CASE("Fourier eigenfunctions") {
  const Grid g = Grid::strip2(64, 5);
  for (int k = 1; k <= 21; ++k) {
    const ScalarField f = ScalarField::sample(g, [&](double x1, double, double) { return std::sin(pi * k * x1); });
    const ScalarField fx = ScalarField::sample(g, [&](double x1, double, double) { return pi * k * std::cos(pi * k * x1); });
    CHECK(max_diff(laplacian(f), -(pi * k) * (pi * k) * f) < 1e-10 * (pi * k) * (pi * k));
    CHECK(max_diff(d1(f), fx) < 1e-10 * pi * k);
  }
}

TEST_CASE("second-order vertical convergence") {
  double prev = 0.0;
  for (int m : {16, 32, 64, 128}) {
    const Grid g = Grid::strip2(8, m + 1);
    const ScalarField f = ScalarField::sample(g, [](double, double, double x3) { return std::cos(pi * x3); });
    const double err = max_diff(laplacian(f), -pi * pi * f);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.3 / 4.0));
    prev = err;
  }
}

TEST_CASE("linearity") {
  const Grid g = Grid::strip3(16, 8, 9);
  const ScalarField f = random_smooth(g, 1), h = random_smooth(g, 2);
  const double a = 0.7, b = -1.9;
  const ScalarField c = a * f + b * h;
  CHECK(max_diff(laplacian(c), a * laplacian(f) + b * laplacian(h)) < 1e-12 * (1 + laplacian(c).max_abs()));
  CHECK(max_diff(d3(c), a * d3(f) + b * d3(h)) < 1e-12 * (1 + d3(c).max_abs()));
  const VectorField gc = grad(c), gf = grad(f), gh = grad(h);
  for (int i = 0; i < 3; ++i) CHECK(max_diff(gc[i], a * gf[i] + b * gh[i]) < 1e-12 * (1 + gc[i].max_abs()));
}

TEST_CASE("Leray projection") {
  const Grid t = Grid::torus2(32, 32);
  const ScalarField phi = random_smooth(t, 7);
  VectorField gp = grad(phi);
  gp[2] = ScalarField(t);
  CHECK(leray_project(gp).max_abs() < 1e-12);

  const ScalarField psi = random_smooth(t, 8);
  VectorField sol(d2(psi), -1.0 * d1(psi), ScalarField(t));
  const VectorField p = leray_project(sol);
  for (int i = 0; i < 2; ++i) CHECK(max_diff(p[i], sol[i]) < 1e-12);

  VectorField v = random_vector(t, 9);
  v[2] = ScalarField(t);
  ScalarField pot;
  const VectorField pv = leray_project(v, &pot);
  const VectorField ppv = leray_project(pv);
  for (int i = 0; i < 2; ++i) CHECK(max_diff(pv[i], ppv[i]) < 1e-12);
  CHECK(div(pv).max_abs() < 1e-12);
  const VectorField gpot = grad(pot);
  for (int i = 0; i < 2; ++i) CHECK(max_diff(v[i], pv[i] + gpot[i]) < 1e-12);
  CHECK(std::abs(mean(pot)) < 1e-12);
}

TEST_CASE("Lorentz force") {
  const Grid t = Grid::torus2(64, 64);
  VectorField Bbar(t);
  Bbar[2] = ScalarField(t, 1.3);
  CHECK(lorentz_force(Bbar).max_abs() < 1e-14);

  const ScalarField b1 = random_smooth(t, 12);
  VectorField B1(t);
  B1[2] = b1;
  VectorField f = lorentz_force(B1);
  f[2] = ScalarField(t);
  CHECK(leray_project(f).max_abs() < 1e-10);

  const VectorField c = cross(curl(B1), Bbar);
  const VectorField g = grad(1.3 * b1);
  for (int i = 0; i < 3; ++i) CHECK(max_diff(c[i], -1.0 * g[i]) < 1e-10);
}

TEST_CASE("means and wall flux") {
  const Grid g = Grid::strip2(16, 65);
  CHECK(mean(ScalarField(g, 2.5)) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(std::abs(mean_laplacian_flux(ScalarField(g, 2.5)).value) < 1e-14);
  const ScalarField q = ScalarField::sample(g, [](double, double, double x3) { return x3 * x3; });
  CHECK(mean_laplacian_flux(q).value == doctest::Approx(2.0).epsilon(1e-8));
  const ScalarField f = random_smooth(Grid::strip2(64, 65), 13);
  CHECK(std::abs(mean(laplacian(f)) - mean_laplacian_flux(f).value) < 1e-6);
  const auto tor = mean_laplacian_flux(ScalarField(Grid::torus2(8, 8), 1.0));
  CHECK_FALSE(tor.has_boundary);
  CHECK(tor.value == 0.0);
}

TEST_CASE("non-finite values are errors") {
  ScalarField f(Grid::torus2(8, 8));
  f[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(f.require_finite("f"), NumericalError);
}

TEST_CASE("snapshot round trip") {
  const Grid g = Grid::strip3(8, 4, 5);
  Snapshot s{g, {}};
  s.fields.emplace_back("theta1", random_smooth(g, 30));
  s.fields.emplace_back("rho", random_smooth(g, 31));
  const auto path = (std::filesystem::temp_directory_path() / "obmhd_test_fields.snap").string();
  write_snapshot(path, s);
  const Snapshot r = read_snapshot(path);
  CHECK(r.grid == g);
  REQUIRE(r.fields.size() == 2);
  for (std::size_t n = 0; n < 2; ++n) {
    CHECK(r.fields[n].first == s.fields[n].first);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(r.fields[n].second[i] == s.fields[n].second[i]);
  }
  CHECK_THROWS_AS(r.get("missing"), std::out_of_range);
  Snapshot bad{g, {}};
  bad.fields.emplace_back("too_long_name", ScalarField(g));
  CHECK_THROWS(write_snapshot(path, bad));
  std::filesystem::remove(path);
}
