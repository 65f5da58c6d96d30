#include "obmhd/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "obmhd/error.hpp"
#include "obmhd/snapshot.hpp"

namespace obmhd {

namespace {

namespace fs = std::filesystem;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string s;
  for (double v : values) {
    if (!s.empty()) s += ',';
    s += num(v);
  }
  return s + '\n';
}

fs::path output_dir(const RunConfig& cfg, const CommandOptions& opt) {
  const fs::path dir = opt.out_dir.empty() ? fs::path(cfg.output.dir) : fs::path(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
}

std::string step_name(const std::string& prefix, int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%06d.snap", prefix.c_str(), step);
  return buf;
}

StudyConfig study_with_seed(const RunConfig& cfg, const CommandOptions& opt) {
  StudyConfig s = cfg.study;
  if (opt.seed) s.profiles.seed = *opt.seed;
  return s;
}

// ------------------------------------------------------------------ limit run

Snapshot obm_snapshot(const ObmState& s, const ObmConfig& c) {
  const Grid& g = c.grid;
  Snapshot snap{g, {}};
  snap.fields.emplace_back("theta1", s.theta1);
  snap.fields.emplace_back("rho1", boussinesq_rho(s.theta1, s.b1, c));
  snap.fields.emplace_back("b1", extend_vertically(s.b1, g));
  snap.fields.emplace_back("U1", extend_vertically(s.U[0], g));
  snap.fields.emplace_back("U2", extend_vertically(s.U[1], g));
  return snap;
}

std::string obm_row(const ObmState& s, const ObmConfig& c, double continuity) {
  return csv_row({s.t, mean(s.theta1), s.chi, obm_kinetic_energy(s, c), obm_magnetic_energy(s, c), continuity});
}

// -------------------------------------------------------------- primitive run

Snapshot mhd_snapshot(const PrimitiveState& s) {
  Snapshot snap{s.rho.grid(), {}};
  snap.fields.emplace_back("rho", s.rho);
  snap.fields.emplace_back("u1", s.u[0]);
  snap.fields.emplace_back("u2", s.u[1]);
  snap.fields.emplace_back("u3", s.u[2]);
  snap.fields.emplace_back("theta", s.theta);
  snap.fields.emplace_back("B1", s.B[0]);
  snap.fields.emplace_back("B2", s.B[1]);
  snap.fields.emplace_back("B3", s.B[2]);
  return snap;
}

std::string mhd_row(const MhdDiagnostics& d) {
  return csv_row({d.t, d.mass, d.momentum, d.energy, d.ballistic, d.max_div_b, d.min_rho, d.min_theta,
                  d.entropy_production});
}

}  // namespace

std::vector<Check> thermo_checks(const RunConfig& cfg, std::uint64_t seed, int points) {
  const thermo::Eos eos = cfg.eos();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  double gibbs = 0.0, gibbs_fd = 0.0, stab = std::numeric_limits<double>::infinity(), pm = 0.0;
  const double h = 1e-5;
  for (int n = 0; n < points; ++n) {
    const double r = U(rng), t = U(rng);
    const auto [g1, g2] = eos.gibbs_residual({r, t});
    gibbs = std::max({gibbs, g1, g2});
    auto e = [&](double a, double b) { return eos.internal_energy({a, b}); };
    auto s = [&](double a, double b) { return eos.entropy({a, b}); };
    const double e_t = (e(r, t + h) - e(r, t - h)) / (2 * h), e_r = (e(r + h, t) - e(r - h, t)) / (2 * h);
    const double s_t = (s(r, t + h) - s(r, t - h)) / (2 * h), s_r = (s(r + h, t) - s(r - h, t)) / (2 * h);
    const double p = eos.pressure({r, t});
    gibbs_fd = std::max({gibbs_fd, std::abs(t * s_t - e_t), std::abs(t * s_r - (e_r - p / (r * r)))});
    stab = std::min({stab, eos.dp_drho({r, t}), eos.de_dtheta({r, t})});
    pm = std::max(pm, std::abs(eos.molecular_pressure({r, t}) - 2.0 / 3.0 * r * eos.molecular_energy({r, t})));
  }
  std::vector<Check> out;
  out.push_back({"gibbs_closed_form", gibbs, 1e-12, gibbs < 1e-12});
  out.push_back({"gibbs_finite_difference", gibbs_fd, 1e-7, gibbs_fd < 1e-7});
  out.push_back({"stability_min_prho_etheta", stab, 0.0, stab > 0.0});
  out.push_back({"molecular_pressure_2_3_rho_e", pm, 1e-12, pm < 1e-12});

  const auto [d1c, d2c] = thermo::drift_coefficients(cfg.ref, eos);
  const double drift = std::abs(d1c + d2c);
  out.push_back({"drift_coefficients_cancel", drift, 1e-12, drift < 1e-12});
  const auto [k1, k2] = thermo::conduction_coefficients(cfg.ref, eos);
  const double cond = std::abs(k1 - k2);
  out.push_back({"conduction_identity", cond, 1e-12, cond < 1e-12});
  const auto c = thermo::reference_coefficients(cfg.ref, eos);
  const double cp_id = std::abs(cfg.ref.rho_bar * c.cp - cfg.ref.theta_bar * c.alpha * c.dp_dtheta -
                                cfg.ref.rho_bar * c.de_dtheta);
  out.push_back({"cp_identity", cp_id, 1e-12, cp_id < 1e-12});
  if (cfg.gas.p_inf == 1.0 && cfg.gas.a == 0.0 && cfg.ref.rho_bar == 1.0 && cfg.ref.theta_bar == 1.0) {
    const double da = std::abs(c.alpha - 3.0 / 8.0), dc = std::abs(c.cp - 15.0 / 8.0);
    out.push_back({"alpha_3_8", da, 1e-12, da < 1e-12});
    out.push_back({"cp_15_8", dc, 1e-12, dc < 1e-12});
  }
  return out;
}

int cmd_thermo_check(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out) {
  const auto checks = thermo_checks(cfg, opt.seed.value_or(cfg.study.profiles.seed));
  const fs::path dir = output_dir(cfg, opt);
  std::string csv = "check,value,tolerance,pass\n";
  bool ok = true;
  for (const auto& c : checks) {
    csv += c.name + ',' + num(c.value) + ',' + num(c.tol) + ',' + (c.pass ? "1" : "0") + '\n';
    ok = ok && c.pass;
    if (!opt.quiet) {
      char line[128];
      std::snprintf(line, sizeof line, "%-30s %12.3e  (tol %.0e)  %s\n", c.name.c_str(), c.value, c.tol,
                    c.pass ? "pass" : "FAIL");
      out << line;
    }
  }
  write_text(dir / "thermo_check.csv", csv);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_run_obm(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out) {
  const ObmConfig oc = cfg.obm_config();
  const Grid& g = oc.grid;
  const fs::path dir = output_dir(cfg, opt);
  const StudyConfig sc = study_with_seed(cfg, opt);
  const Profiles pr = make_profiles(sc.profiles, g, oc.theta_B_bottom, oc.theta_B_top);
  VectorField U(g.horizontal());
  if (g.has_x2() && cfg.obm.u_amp != 0.0) {
    const double pi = std::numbers::pi, a = cfg.obm.u_amp;
    U[0] = ScalarField::sample(g.horizontal(), [=](double x1, double x2, double) { return a * std::sin(pi * x1) * std::cos(pi * x2); });
    U[1] = ScalarField::sample(g.horizontal(), [=](double x1, double x2, double) { return -a * std::cos(pi * x1) * std::sin(pi * x2); });
  }
  ObmState s = make_obm_state(oc, pr.theta1, pr.b1, U);
  ObmSolver solver(oc);
  const int steps = static_cast<int>(std::lround(oc.t_end / oc.dt));

  std::string csv = "t,mean_theta1,chi,kinetic_energy,magnetic_energy,continuity_residual\n";
  csv += obm_row(s, oc, 0.0);
  int code = kExitPass;
  try {
    for (int k = 1; k <= steps; ++k) {
      s = solver.step(s);
      if (k % cfg.output.csv_every == 0 || k == steps) csv += obm_row(s, oc, solver.continuity_residual());
      if (cfg.output.snapshot_every > 0 && k % cfg.output.snapshot_every == 0)
        write_snapshot((dir / step_name("obm", k)).string(), obm_snapshot(s, oc));
    }
  } catch (const NumericalError& e) {
    out << "run-obm: numerical failure at t = " << s.t << ": " << e.what() << '\n';
    code = kExitNumerical;
  }
  write_text(dir / "obm.csv", csv);
  write_snapshot((dir / (code == kExitPass ? "obm_final.snap" : "obm_failed.snap")).string(), obm_snapshot(s, oc));
  if (!opt.quiet && code == kExitPass) {
    out << "run-obm: " << steps << " steps to t = " << s.t << ", mean(theta1) = " << mean(s.theta1)
        << ", chi = " << s.chi << ", kinetic = " << obm_kinetic_energy(s, oc)
        << ", magnetic = " << obm_magnetic_energy(s, oc) << '\n';
  }
  return code;
}

int cmd_run_mhd(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out) {
  const MhdConfig mc = cfg.mhd_config();
  const Grid& g = mc.grid;
  const fs::path dir = output_dir(cfg, opt);
  PrimitiveState s = rest_state(mc);
  if (cfg.mhd.initial == "well_prepared") {
    ObmConfig oc = ObmConfig::defaults(g);
    oc.gas = mc.gas;
    oc.ref = mc.ref;
    oc.G = mc.G;
    oc.theta_B_bottom = mc.theta_B_bottom;
    oc.theta_B_top = mc.theta_B_top;
    const Profiles pr = make_profiles(study_with_seed(cfg, opt).profiles, g, oc.theta_B_bottom, oc.theta_B_top);
    s = well_prepared_data(pr, mc.eps, oc, mc).first;
  }
  const MhdSolver solver(mc);
  solver.apply_bc(s);

  std::string csv = "t,mass,momentum,energy,ballistic_energy,max_div_B,min_rho,min_theta,entropy_production\n";
  csv += mhd_row(mhd_diagnostics(s, mc));
  int code = kExitPass;
  int k = 0;
  const double t_end = mc.t_end;
  try {
    while (s.t < t_end * (1.0 - 1e-12)) {
      double dt = mc.dt > 0.0 ? mc.dt : solver.stable_dt(s);
      if (s.t + dt > t_end) dt = t_end - s.t;
      PrimitiveState next = solver.step(s, dt);
      s = std::move(next);
      ++k;
      if (k % cfg.output.csv_every == 0 || s.t >= t_end * (1.0 - 1e-12)) csv += mhd_row(mhd_diagnostics(s, mc));
      if (cfg.output.snapshot_every > 0 && k % cfg.output.snapshot_every == 0)
        write_snapshot((dir / step_name("mhd", k)).string(), mhd_snapshot(s));
    }
  } catch (const NumericalError& e) {
    out << "run-mhd: numerical failure at t = " << s.t << ": " << e.what() << '\n';
    code = kExitNumerical;
  }
  write_text(dir / "mhd.csv", csv);
  write_snapshot((dir / (code == kExitPass ? "mhd_final.snap" : "mhd_failed.snap")).string(), mhd_snapshot(s));
  if (!opt.quiet && code == kExitPass) {
    const MhdDiagnostics d = mhd_diagnostics(s, mc);
    out << "run-mhd: " << k << " steps to t = " << s.t << ", mass = " << d.mass << ", max|div B| = " << d.max_div_b
        << ", min rho = " << d.min_rho << ", min theta = " << d.min_theta << '\n';
  }
  return code;
}

int cmd_converge(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out) {
  const fs::path dir = output_dir(cfg, opt);
  const StudyReport rep = convergence_study(study_with_seed(cfg, opt));
  write_text(dir / "study.csv", study_csv(rep));
  const std::string summary = study_summary(rep);
  write_text(dir / "study_summary.txt", summary);
  std::string series = "eps,t,E_total,E_ess,E_res,entropy_production\n";
  for (const auto& r : rep.rows)
    for (std::size_t i = 0; i < r.energy.times.size(); ++i)
      series += csv_row({r.eps, r.energy.times[i], r.energy.E_total[i], r.energy.E_ess[i], r.energy.E_res[i],
                         r.energy.dissipation[i]});
  write_text(dir / "study_series.csv", series);
  if (!opt.quiet) out << summary;
  if (!rep.complete) return kExitNumerical;
  return rep.sup_E_decreasing ? kExitPass : kExitCheckFailed;
}

int cmd_mms(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out) {
  const fs::path dir = output_dir(cfg, opt);
  const std::vector<MmsTable> tabs{mms_obm(cfg.mms), mms_mhd(cfg.mms)};
  write_text(dir / "mms.csv", mms_csv(tabs));
  const std::string summary = mms_summary(tabs);
  write_text(dir / "mms_summary.txt", summary);
  if (!opt.quiet) out << summary;
  bool ok = true;
  for (const auto& t : tabs) ok = ok && t.orders_ok && t.floor_ok;
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace obmhd
