#include "obmhd/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "obmhd/error.hpp"

namespace obmhd {

namespace {

double l2(const ScalarField& f) { return std::sqrt(integral(f * f)); }

double l1(const ScalarField& f) {
  ScalarField a = f;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(a[i]);
  return integral(a);
}

ScalarField vec_norm(const VectorField& v) {
  ScalarField n(v.grid());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = std::sqrt(v[0][i] * v[0][i] + v[1][i] * v[1][i] + v[2][i] * v[2][i]);
  return n;
}

struct DevPair {
  Deviations L2;
  Deviations L1;
};

DevPair deviations(const PrimitiveState& s, const ObmState& o, const ObmConfig& oc) {
  const Grid& g = s.rho.grid();
  const double ie = 1.0 / s.eps;
  ScalarField dr = ie * (s.rho - ScalarField(g, oc.ref.rho_bar)) - boussinesq_rho(o.theta1, o.b1, oc);
  ScalarField dt = ie * (s.theta - ScalarField(g, oc.ref.theta_bar)) - o.theta1;
  VectorField dB = s.B;
  dB[2] -= ScalarField(g, oc.ref.b_bar);
  dB *= ie;
  dB[2] -= extend_vertically(o.b1, g);
  const double sr = std::sqrt(oc.ref.rho_bar);
  VectorField dm(g);
  for (int c = 0; c < 2; ++c) {
    const ScalarField U = extend_vertically(o.U[c], g);
    for (std::size_t i = 0; i < g.size(); ++i) dm[c][i] = std::sqrt(s.rho[i]) * s.u[c][i] - sr * U[i];
  }
  for (std::size_t i = 0; i < g.size(); ++i) dm[2][i] = std::sqrt(s.rho[i]) * s.u[2][i];
  const ScalarField nB = vec_norm(dB), nm = vec_norm(dm);
  return {{l2(dr), l2(dt), l2(nB), l2(nm)}, {l1(dr), l1(dt), l1(nB), l1(nm)}};
}

void take_max(Deviations& a, const Deviations& b) {
  a.rho = std::max(a.rho, b.rho);
  a.theta = std::max(a.theta, b.theta);
  a.B = std::max(a.B, b.B);
  a.momentum = std::max(a.momentum, b.momentum);
}

double velocity_h1_sq(const PrimitiveState& s) {
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) {
    const Closure cl = c == 2 ? Closure::Odd : Closure::Even;
    const ScalarField& u = s.u[c];
    const ScalarField a = d1(u), b = d3(u, cl);
    acc += integral(u * u) + integral(a * a) + integral(b * b);
  }
  return acc;
}

ScalarField constant_wall(const Grid& g, double v) { return ScalarField(g.horizontal(), v); }

void run_one(const StudyConfig& cfg, double eps, StudyRow& row) {
  const Grid g = Grid::strip2(cfg.n1, cfg.n3);
  ObmConfig oc = ObmConfig::defaults(g);
  oc.G *= cfg.gravity;
  oc.gas = cfg.gas;
  oc.ref = cfg.ref;
  oc.theta_B_bottom = constant_wall(g, cfg.theta_B_bottom);
  oc.theta_B_top = constant_wall(g, cfg.theta_B_top);
  MhdConfig mc = MhdConfig::defaults(g, eps);
  mc.gas = cfg.gas;
  mc.ref = cfg.ref;
  mc.theta_B_bottom = oc.theta_B_bottom;
  mc.theta_B_top = oc.theta_B_top;
  mc.G = oc.G;

  const Profiles pr = make_profiles(cfg.profiles, g, oc.theta_B_bottom, oc.theta_B_top);
  auto [ps, os] = well_prepared_data(pr, eps, oc, mc);

  const double dt0 = cfg.safety * MhdSolver(mc).stable_dt(ps);
  const int n = std::max(1, static_cast<int>(std::ceil(cfg.t_end / dt0)));
  const double dt = cfg.t_end / n;
  mc.dt = dt;
  mc.t_end = cfg.t_end;
  oc.dt = dt;
  oc.t_end = cfg.t_end;
  row.dt = dt;

  const MhdSolver ms(mc);
  ObmSolver ob(oc);
  const thermo::Eos eos(cfg.gas);
  const MhdDiagnostics d0 = mhd_diagnostics(ps, mc);
  const double b1_mean0 = mean(os.b1);
  row.min_production = d0.min_production_term;
  row.max_div_B = d0.max_div_b;

  double last_sample_t = 0.0;
  auto sample = [&]() {
    const TestQuadruple tq = test_from_obm(os, eps, oc);
    const EnergySplit sp = ess_res_split(ps, tq, mc);
    const MhdDiagnostics d = mhd_diagnostics(ps, mc);
    row.energy.append(ps.t, sp, d.entropy_production);
    row.sup_E_ess = std::max(row.sup_E_ess, sp.ess);
    row.sup_E_res = std::max(row.sup_E_res, sp.res);
    const DevPair dv = deviations(ps, os, oc);
    take_max(row.sup_L2, dv.L2);
    take_max(row.sup_L1, dv.L1);
    row.final_L2 = dv.L2;
    row.final_L1 = dv.L1;
    VectorField dB = ps.B;
    dB[2] -= ScalarField(g, cfg.ref.b_bar);
    row.mag_monitor = std::max(row.mag_monitor, integral(dot(dB, dB)) / (eps * eps));
    row.vel_monitor += velocity_h1_sq(ps) * (ps.t - last_sample_t);
    last_sample_t = ps.t;
    row.mass_drift = std::max(row.mass_drift, std::abs(d.mass - d0.mass) / d0.mass);
    row.b1_mean_drift = std::max(row.b1_mean_drift, std::abs(mean(os.b1) - b1_mean0));
    row.max_div_B = std::max(row.max_div_B, d.max_div_b);
    row.max_div_U = std::max(row.max_div_U, (d1(os.U[0]) + d2(os.U[1])).max_abs());
    row.min_production = std::min(row.min_production, d.min_production_term);
  };

  sample();
  row.E0 = row.energy.E_total.front();
  try {
    for (int k = 1; k <= n; ++k) {
      ps = ms.step(ps);
      os = ob.step(os);
      row.steps = k;
      row.t_reached = ps.t;
      if (k % cfg.cadence == 0 || k == n) sample();
    }
  } catch (const NumericalError& e) {
    row.failure = e.what();
  }
  row.sup_E = row.energy.sup_E;
  row.vel_monitor = std::sqrt(row.vel_monitor);
  row.bounded = row.mag_monitor <= cfg.monitor_ceiling && row.vel_monitor <= cfg.monitor_ceiling;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

bool decreasing_or_zero(const std::vector<double>& v) {
  return strictly_decreasing(v) || std::all_of(v.begin(), v.end(), [](double x) { return x <= 1e-14; });
}

}  // namespace

Profiles make_profiles(const ProfileSpec& spec, const Grid& grid, const ScalarField& theta_B_bottom,
                       const ScalarField& theta_B_top) {
  if (spec.kind == "zero") return default_profiles(grid, theta_B_bottom, theta_B_top, 0.0, 0.0, 0.0);
  Profiles pr = default_profiles(grid, theta_B_bottom, theta_B_top, spec.a, spec.b, spec.c);
  if (spec.kind == "smooth") return pr;
  if (spec.kind != "random") throw ConfigError("unknown profile kind '" + spec.kind + "'");
  const double pi = std::numbers::pi;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> amp(-0.5, 0.5), phase(0.0, 2.0 * pi);
  const std::size_t p = grid.plane_size();
  for (int m = 1; m <= 3; ++m) {
    const double at = amp(rng) / m, ph = phase(rng);
    const double ab = amp(rng) / m, pb = phase(rng);
    for (int k = 0; k < grid.n3(); ++k) {
      const double s = std::sin(pi * grid.x3(k));
      for (int j = 0; j < grid.n2(); ++j)
        for (int i = 0; i < grid.n1(); ++i)
          pr.theta1[k * p + grid.index(i, j, 0)] += at * s * std::cos(pi * m * grid.x1(i) + ph);
    }
    for (int j = 0; j < grid.n2(); ++j)
      for (int i = 0; i < grid.n1(); ++i) pr.b1[grid.index(i, j, 0)] += ab * std::cos(pi * m * grid.x1(i) + pb);
  }
  return pr;
}

void StudyConfig::validate() const {
  gas.validate();
  ref.validate();
  if (eps_list.empty()) throw ConfigError("eps_list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0 && eps_list[i] <= 1.0)) throw ConfigError("eps values must lie in (0, 1]");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw ConfigError("eps_list must be strictly decreasing");
  }
  if (n1 < 4 || n1 % 2 != 0) throw ConfigError("study n1 must be even and >= 4");
  if (n3 < 5) throw ConfigError("study n3 must be >= 5");
  if (!(t_end > 0.0)) throw ConfigError("study t_end must be positive");
  if (cadence < 1) throw ConfigError("study cadence must be >= 1");
  if (!std::isfinite(gravity)) throw ConfigError("study gravity must be finite");
  if (!(safety > 0.0 && safety <= 1.0)) throw ConfigError("study safety must lie in (0, 1]");
  if (!(monitor_ceiling > 0.0)) throw ConfigError("monitor_ceiling must be positive");
  if (profiles.kind != "zero" && profiles.kind != "smooth" && profiles.kind != "random")
    throw ConfigError("unknown profile kind '" + profiles.kind + "'");
}

StudyReport convergence_study(const StudyConfig& cfg) {
  cfg.validate();
  StudyReport rep;
  for (double eps : cfg.eps_list) {
    StudyRow row;
    row.eps = eps;
    run_one(cfg, eps, row);
    rep.rows.push_back(std::move(row));
  }
  std::vector<double> sup, dr, dt, dB, dm;
  rep.complete = true;
  for (const auto& r : rep.rows) {
    sup.push_back(r.sup_E);
    dr.push_back(r.sup_L2.rho);
    dt.push_back(r.sup_L2.theta);
    dB.push_back(r.sup_L2.B);
    dm.push_back(r.sup_L2.momentum);
    rep.complete = rep.complete && r.failure.empty();
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    const auto& a = rep.rows[i - 1];
    const auto& b = rep.rows[i];
    rep.rates.push_back(a.sup_E > 0.0 && b.sup_E > 0.0 ? std::log(a.sup_E / b.sup_E) / std::log(a.eps / b.eps) : 0.0);
  }
  rep.sup_E_decreasing = rep.complete && strictly_decreasing(sup);
  rep.deviations_decreasing = rep.complete && decreasing_or_zero(dr) && decreasing_or_zero(dt) &&
                              decreasing_or_zero(dB) && decreasing_or_zero(dm);
  return rep;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

std::string study_csv(const StudyReport& report) {
  std::ostringstream os;
  os << "eps,dt,steps,sup_E,sup_E_ess,sup_E_res,E0,"
        "L2_rho,L2_theta,L2_B,L2_mom,sup_L2_rho,sup_L2_theta,sup_L2_B,sup_L2_mom,"
        "L1_rho,L1_theta,L1_B,L1_mom,mag_monitor,vel_monitor,mass_drift,b1_mean_drift,"
        "max_div_B,max_div_U,min_production,rate,status\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const StudyRow& r = report.rows[i];
    const double rate = i > 0 ? report.rates[i - 1] : 0.0;
    for (double v : {r.eps, r.dt}) os << num(v) << ',';
    os << r.steps << ',';
    for (double v : {r.sup_E, r.sup_E_ess, r.sup_E_res, r.E0, r.final_L2.rho, r.final_L2.theta, r.final_L2.B,
                     r.final_L2.momentum, r.sup_L2.rho, r.sup_L2.theta, r.sup_L2.B, r.sup_L2.momentum, r.final_L1.rho,
                     r.final_L1.theta, r.final_L1.B, r.final_L1.momentum, r.mag_monitor, r.vel_monitor, r.mass_drift,
                     r.b1_mean_drift, r.max_div_B, r.max_div_U, r.min_production, rate})
      os << num(v) << ',';
    os << (r.failure.empty() ? "ok" : "failed") << '\n';
  }
  return os.str();
}

std::string study_summary(const StudyReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%8s %12s %12s %12s %12s %12s %12s %12s %8s\n", "eps", "sup_E", "sup_E_ess",
                "sup_E_res", "L2_rho", "L2_theta", "L2_B", "L2_mom", "rate");
  os << line;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const StudyRow& r = report.rows[i];
    char rate[16] = "-";
    if (i > 0) std::snprintf(rate, sizeof rate, "%.3f", report.rates[i - 1]);
    std::snprintf(line, sizeof line, "%8.4f %12.4e %12.4e %12.4e %12.4e %12.4e %12.4e %12.4e %8s\n", r.eps, r.sup_E,
                  r.sup_E_ess, r.sup_E_res, r.sup_L2.rho, r.sup_L2.theta, r.sup_L2.B, r.sup_L2.momentum, rate);
    os << line;
    if (!r.failure.empty()) os << "  failed at t = " << r.t_reached << ": " << r.failure << '\n';
  }
  os << "sup_E strictly decreasing: " << (report.sup_E_decreasing ? "yes" : "no") << '\n';
  os << "L2 deviations decreasing:  " << (report.deviations_decreasing ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace obmhd
