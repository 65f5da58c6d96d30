// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "obmhd/fields.hpp"
#include "obmhd/mms.hpp"
#include "obmhd/obm.hpp"
#include "obmhd/relent.hpp"
#include "obmhd/study.hpp"
#include "obmhd/thermo.hpp"
#include "oracles.hpp"

using namespace obmhd;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0, double e = 0, double g = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d, e, g);
  return buf;
}

// Conservation figures gathered from criteria 5 to 7.
struct Conservation {
  double mass = 0.0;
  double b1_mean = 0.0;
  double div_U = 0.0;
  double div_B = 0.0;
  double min_production = 0.0;

  void add(double m, double b, double u, double B, double p) {
    mass = std::max(mass, m);
    b1_mean = std::max(b1_mean, b);
    div_U = std::max(div_U, u);
    div_B = std::max(div_B, B);
    min_production = std::min(min_production, p);
  }
};

void gibbs() {
  const auto t0 = Clock::now();
  const thermo::Eos eos{thermo::GasParams{}};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  const double h = 1e-5;
  double closed = 0.0, fd = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double r = U(rng), t = U(rng);
    const auto [a, b] = eos.gibbs_residual({r, t});
    closed = std::max({closed, a, b});
    auto e = [&](double x, double y) { return eos.internal_energy({x, y}); };
    auto s = [&](double x, double y) { return eos.entropy({x, y}); };
    const double e_t = (e(r, t + h) - e(r, t - h)) / (2 * h), e_r = (e(r + h, t) - e(r - h, t)) / (2 * h);
    const double s_t = (s(r, t + h) - s(r, t - h)) / (2 * h), s_r = (s(r + h, t) - s(r - h, t)) / (2 * h);
    fd = std::max({fd, std::abs(t * s_t - e_t), std::abs(t * s_r - (e_r - eos.pressure({r, t}) / (r * r)))});
  }
  const double dt = seconds_since(t0);
  report(1, closed < 1e-12 && fd < 1e-7 && dt < 1.0,
         fmt("Gibbs residual closed form %.2e (< 1e-12), finite difference %.2e (< 1e-7), %.3f s (< 1 s)", closed, fd, dt));
}

void identities() {
  const thermo::Eos eos{thermo::GasParams{}};
  const thermo::ReferenceState ref;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  double drift = 0.0, kap = 0.0, cp = 0.0, pm = 0.0;
  for (int n = 0; n < 100; ++n) {
    thermo::ReferenceState r;
    r.rho_bar = U(rng);
    r.theta_bar = U(rng);
    const auto [d1, d2] = thermo::drift_coefficients(r, eos);
    drift = std::max(drift, std::abs(d1 + d2));
    const auto [k1, k2] = thermo::conduction_coefficients(r, eos);
    kap = std::max(kap, std::abs(k1 - k2));
    const auto c = thermo::reference_coefficients(r, eos);
    cp = std::max(cp, std::abs(r.rho_bar * c.cp - r.theta_bar * c.alpha * c.dp_dtheta - r.rho_bar * c.de_dtheta));
    const double rho = U(rng), th = U(rng);
    pm = std::max(pm, std::abs(eos.molecular_pressure({rho, th}) - 2.0 / 3.0 * rho * eos.molecular_energy({rho, th})));
  }
  const auto [alpha, c_p] = thermo::alpha_cp(ref, eos);
  const double da = std::abs(alpha - 3.0 / 8.0), dc = std::abs(c_p - 15.0 / 8.0);
  const double worst = std::max({drift, kap, cp, pm, da, dc});
  report(2, worst < 1e-12,
         fmt("drift sum %.1e, conduction %.1e, c_p identity %.1e, p_M - 2/3 rho e_M %.1e, alpha-3/8 %.1e, c_p-15/8 %.1e "
             "(all < 1e-12)",
             drift, kap, cp, pm, da, dc));
}

void lorentz() {
  const auto t0 = Clock::now();
  const Grid g = Grid::torus2(64, 64);
  const double b_bar = 1.0;
  const ScalarField b1 = ScalarField::sample(g, [](double x1, double x2, double) {
    return 0.3 * std::cos(pi * x1) + 0.2 * std::sin(pi * (x1 + 2 * x2) + 0.4) + 0.1 * std::cos(3 * pi * x2);
  });
  VectorField B1(g), Bbar(g);
  B1[2] = b1;
  Bbar[2] = ScalarField(g, b_bar);
  const VectorField lhs = cross(curl(B1), Bbar);
  const VectorField rhs = grad(b_bar * b1);
  double e1 = 0.0;
  for (int i = 0; i < 3; ++i) e1 = std::max(e1, (lhs[i] + rhs[i]).max_abs());
  VectorField f = lorentz_force(B1);
  f[2] = ScalarField(g);
  const double e2 = leray_project(f).max_abs();
  const double dt = seconds_since(t0);
  report(3, e1 < 1e-10 && e2 < 1e-10 && dt < 1.0,
         fmt("curl B1 x B_bar + grad(b_bar b1) %.2e, P(curl B1 x B1) %.2e (< 1e-10), %.3f s (< 1 s)", e1, e2, dt));
}

void coercivity() {
  const auto t0 = Clock::now();
  const thermo::GasParams gas;
  const thermo::ReferenceState ref;
  const thermo::Eos eos(gas);
  const TestBox box;
  const CoercivityConstants c = coercivity_constants(gas, ref, box);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> R(box.r_lo, box.r_hi), T(box.Theta_lo, box.Theta_hi), V(-1.0, 1.0);
  std::uniform_real_distribution<double> Ess(0.5, 2.0), Lo(0.0, 0.5), Hi(2.0, 8.0), Unit(0.0, 1.0);
  auto test_point = [&] {
    return TestPoint{R(rng), T(rng), {V(rng) * box.U_max / 2, V(rng) * box.U_max / 2, V(rng) * box.U_max / 2},
                     {V(rng), V(rng), 1.0 + V(rng)}};
  };
  std::vector<std::pair<StatePoint, TestPoint>> ess, res;
  while (ess.size() < 10000) {
    const TestPoint t = test_point();
    const StatePoint s{Ess(rng), Ess(rng), {V(rng), V(rng), V(rng)}, {V(rng), V(rng), 1.0 + V(rng)}};
    if (in_essential_set(s.rho, s.theta, ref)) ess.emplace_back(s, t);
  }
  while (res.size() < 1000) {
    const TestPoint t = test_point();
    const double u = Unit(rng);
    double rho = Ess(rng), theta = Ess(rng);
    if (u < 0.25) rho = Lo(rng);
    else if (u < 0.5) rho = Hi(rng);
    else if (u < 0.75) theta = 0.05 + Lo(rng) * 0.9;
    else theta = Hi(rng);
    res.emplace_back(StatePoint{rho, theta, {V(rng), V(rng), V(rng)}, {V(rng), V(rng), 1.0 + V(rng)}}, t);
  }
  double min_ess = 1e300, min_res = 1e300, min_e = 1e300;
  bool ok = true;
  for (double eps : {0.2, 0.1, 0.05}) {
    const CoercivityReport re = coercivity_check(ess, eps, ref, eos, c);
    const CoercivityReport rr = coercivity_check(res, eps, ref, eos, c);
    ok = ok && re.holds && rr.holds && re.ess_points == 10000 && rr.res_points == 1000;
    min_ess = std::min(min_ess, re.min_ess_margin);
    min_res = std::min(min_res, rr.min_res_margin);
    min_e = std::min({min_e, re.min_energy, rr.min_energy});
  }
  const double dt = seconds_since(t0);
  ok = ok && min_ess > 0.0 && min_res > 0.0 && min_e >= 0.0 && dt < 10.0;
  report(4, ok,
         fmt("c_ess %.3g c_res %.3g, min margin essential %.3e residual %.3e (> 0), min E %.3e (>= 0), %.2f s (< 10 s)",
             c.c_ess, c.c_res, min_ess, min_res, min_e, dt));
}

void mean_temperature(Conservation& cons) {
  const auto t0 = Clock::now();
  const Grid g = Grid::strip2(8, 129);
  ObmConfig c = ObmConfig::defaults(g);
  c.dt = 0.25 * g.h3();
  ObmState s = make_obm_state(c, ScalarField::sample(g, [](double, double, double x3) { return std::sin(pi * x3); }),
                              ScalarField(g.horizontal()), VectorField(g.horizontal()));
  ObmSolver solver(c);
  const double b0 = mean(s.b1);
  const int steps = static_cast<int>(std::lround(0.1 / c.dt));
  double mass = 0.0, divu = 0.0;
  for (int n = 0; n < steps; ++n) {
    s = solver.step(s);
    mass = std::max(mass, std::abs(mean(boussinesq_rho(s.theta1, s.b1, c))));
    divu = std::max(divu, div(s.U).max_abs());
  }
  const auto co = thermo::reference_coefficients(c.ref, thermo::Eos(c.gas));
  const oracle::Heat1dParams p{thermo::kappa(c.ref.theta_bar, c.gas), c.ref.rho_bar * co.cp,
                               c.ref.theta_bar * co.alpha * co.dp_dtheta};
  const double ref = oracle::heat1d_mean(p, s.t);
  const double err = std::abs(mean(s.theta1) - ref) / std::abs(ref);
  const double dt = seconds_since(t0);
  cons.add(mass, std::abs(mean(s.b1) - b0), divu, 0.0, 0.0);
  report(5, err < 1e-3 && dt < 10.0,
         fmt("mean(theta1)(0.1) = %.8f, oracle %.8f, relative error %.2e (< 1e-3), %.2f s (< 10 s)", mean(s.theta1), ref,
             err, dt));
}

void manufactured(Conservation& cons) {
  const auto t0 = Clock::now();
  const MmsOptions opt;
  const MmsTable tabs[2] = {mms_obm(opt), mms_mhd(opt)};
  const double dt = seconds_since(t0);
  bool ok = dt < 120.0;
  std::string detail;
  for (const auto& t : tabs) {
    ok = ok && t.orders_ok && t.floor_ok;
    detail += t.solver + " orders";
    for (double o : t.orders) detail += fmt(" %.3f", o);
    detail += fmt(" horizontal spread %.1e; ", t.horizontal_spread);
    cons.add(t.mass_drift, t.b1_mean_drift, t.max_div_U, t.max_div_B, t.min_production);
  }
  report(6, ok, detail + fmt("orders in [1.8, 2.2], %.1f s (< 120 s)", dt));
}

void low_mach(Conservation& cons) {
  const auto t0 = Clock::now();
  const StudyReport rep = convergence_study(StudyConfig{});
  const double dt = seconds_since(t0);
  std::string detail = "sup_E";
  for (const auto& r : rep.rows) {
    detail += fmt(" %.3e", r.sup_E);
    if (!r.failure.empty()) detail += " (" + r.failure + ")";
    cons.add(r.mass_drift, r.b1_mean_drift, r.max_div_U, r.max_div_B, r.min_production);
  }
  detail += ", rate";
  for (double q : rep.rates) detail += fmt(" %.2f", q);
  detail += "; sup L2 rho/theta/B/mom";
  for (const auto& r : rep.rows)
    detail += fmt(" [%.3e %.3e %.3e %.3e]", r.sup_L2.rho, r.sup_L2.theta, r.sup_L2.B, r.sup_L2.momentum);
  report(7, rep.complete && rep.sup_E_decreasing && rep.deviations_decreasing && dt < 600.0,
         detail + fmt("; %.1f s (< 600 s)", dt));
}

}  // namespace

int main() {
  Conservation cons;
  gibbs();
  identities();
  lorentz();
  coercivity();
  mean_temperature(cons);
  manufactured(cons);
  low_mach(cons);
  report(8,
         cons.mass < 1e-12 && cons.b1_mean < 1e-12 && cons.div_U < 1e-12 && cons.div_B < 1e-8 &&
             cons.min_production >= -1e-14,
         fmt("mass drift %.1e, mean(b1) drift %.1e (< 1e-12), div U %.1e (< 1e-12), div B %.1e (< 1e-8), "
             "min production %.1e (>= -1e-14)",
             cons.mass, cons.b1_mean, cons.div_U, cons.div_B, cons.min_production));
  return failures == 0 ? 0 : 1;
}
