#include "obmhd/relent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "obmhd/error.hpp"

namespace obmhd {

namespace {

double norm2(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

Vec3 diff(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

StatePoint state_at(const PrimitiveState& s, std::size_t i) {
  return {s.rho[i], s.theta[i], {s.u[0][i], s.u[1][i], s.u[2][i]}, {s.B[0][i], s.B[1][i], s.B[2][i]}};
}

TestPoint test_at(const TestQuadruple& t, std::size_t i) {
  return {t.r[i], t.Theta[i], {t.U[0][i], t.U[1][i], t.U[2][i]}, {t.H[0][i], t.H[1][i], t.H[2][i]}};
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
  return v;
}

// min over the essential box x test box of H_th / (|rho-r|^2 + |theta-Theta|^2)
double thermal_constant(const thermo::Eos& eos, const thermo::ReferenceState& ref, const TestBox& box) {
  const auto rhos = linspace(0.5 * ref.rho_bar, 2.0 * ref.rho_bar, 31);
  const auto thetas = linspace(0.5 * ref.theta_bar, 2.0 * ref.theta_bar, 31);
  const auto rs = linspace(box.r_lo * ref.rho_bar, box.r_hi * ref.rho_bar, 9);
  const auto Ts = linspace(box.Theta_lo * ref.theta_bar, box.Theta_hi * ref.theta_bar, 9);
  double best = std::numeric_limits<double>::infinity();
  for (double r : rs) {
    for (double T : Ts) {
      for (double rho : rhos) {
        for (double th : thetas) {
          const double d2 = (rho - r) * (rho - r) + (th - T) * (th - T);
          if (d2 < 1e-6) continue;
          best = std::min(best, thermal_bregman(rho, th, r, T, eos) / d2);
        }
      }
    }
  }
  return best;
}

// Largest c (by bisection) with H_th >= c [1 + rho e + rho |s| + |H|^2/(1-2c) + eps^2 rho |U|^2/(1-2c)]
// over residual states and test points; eps^2 |U|^2 is bounded by U_max^2.
double residual_constant(const thermo::Eos& eos, const thermo::ReferenceState& ref, const TestBox& box) {
  struct Sample {
    double h, base, rho;
  };
  std::vector<Sample> samples;
  const auto rhos = logspace(1e-4 * ref.rho_bar, 1e3 * ref.rho_bar, 57);
  const auto thetas = logspace(1e-3 * ref.theta_bar, 1e3 * ref.theta_bar, 49);
  const auto rs = linspace(box.r_lo * ref.rho_bar, box.r_hi * ref.rho_bar, 4);
  const auto Ts = linspace(box.Theta_lo * ref.theta_bar, box.Theta_hi * ref.theta_bar, 4);
  std::vector<double> rho_all = rhos;
  rho_all.push_back(0.0);
  for (double rho : rho_all) {
    for (double th : thetas) {
      if (in_essential_set(rho, th, ref)) continue;
      const thermo::ThermoPoint pt{rho, th};
      const double base = 1.0 + eos.energy_density(pt) + std::abs(eos.entropy_density(pt));
      for (double r : rs)
        for (double T : Ts) samples.push_back({thermal_bregman(rho, th, r, T, eos), base, rho});
    }
  }
  const double q = box.H_max * box.H_max;
  const double w = box.U_max * box.U_max;
  auto ok = [&](double c) {
    for (const auto& s : samples) {
      if (s.h < c * (s.base + (q + s.rho * w) / (1.0 - 2.0 * c))) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 0.49;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double thermal_bregman(double rho, double theta, double r, double Theta, const thermo::Eos& eos) {
  const thermo::ThermoPoint st{rho, theta};
  const thermo::ThermoPoint te{r, Theta};
  const double er = eos.internal_energy(te);
  const double sr = eos.entropy(te);
  const double pr = eos.pressure(te);
  const double rho_e = rho > 0.0 ? rho * eos.internal_energy(st) : eos.energy_density(st);
  const double rho_s = rho > 0.0 ? rho * eos.entropy(st) : eos.entropy_density(st);
  const double a = rho_e - r * er;
  const double b = Theta * (rho_s - r * sr);
  const double c = (er - Theta * sr + pr / r) * (rho - r);
  const double h = a - b - c;
  // cancellation noise near the diagonal
  const double scale = std::abs(rho_e) + std::abs(r * er) + Theta * (std::abs(rho_s) + std::abs(r * sr)) + std::abs(c);
  if (h < 0.0 && -h <= 64.0 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
  return h;
}

double rel_energy_density(const StatePoint& s, const TestPoint& t, double eps, const thermo::Eos& eos) {
  if (!(t.r > 0.0) || !(t.Theta > 0.0)) throw DomainError("test functions need r > 0 and Theta > 0");
  if (!(s.theta > 0.0) || !(s.rho >= 0.0)) throw DomainError("state needs rho >= 0 and theta > 0");
  const double ie2 = 1.0 / (eps * eps);
  return 0.5 * s.rho * norm2(diff(s.u, t.U)) + 0.5 * ie2 * norm2(diff(s.B, t.H)) +
         ie2 * thermal_bregman(s.rho, s.theta, t.r, t.Theta, eos);
}

void TestQuadruple::validate(const MhdConfig& cfg, double eps, double tol) const {
  const Grid& g = r.grid();
  if (g != cfg.grid || Theta.grid() != g || U.grid() != g || H.grid() != g)
    throw DomainError("test functions must live on the primitive grid");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(r[i] > 0.0) || !(Theta[i] > 0.0)) throw DomainError("test functions need r > 0 and Theta > 0");
  }
  const std::size_t p = g.plane_size();
  const std::size_t top = (g.n3() - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    const double want_b = cfg.ref.theta_bar + eps * cfg.theta_B_bottom[i];
    const double want_t = cfg.ref.theta_bar + eps * cfg.theta_B_top[i];
    if (std::abs(Theta[i] - want_b) > tol || std::abs(Theta[top + i] - want_t) > tol)
      throw DomainError("Theta violates the wall temperature condition");
    for (std::size_t w : {i, top + i}) {
      if (std::abs(U[2][w]) > tol) throw DomainError("U . n must vanish on the walls");
      if (std::abs(H[0][w]) > tol || std::abs(H[1][w]) > tol) throw DomainError("H x n must vanish on the walls");
    }
  }
  if (div_B(H).max_abs() > tol) throw DomainError("H must be divergence free");
}

ScalarField rel_energy_field(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg) {
  const thermo::Eos eos(cfg.gas);
  ScalarField out(s.rho.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rel_energy_density(state_at(s, i), test_at(t, i), s.eps, eos);
  return out;
}

bool in_essential_set(double rho, double theta, const thermo::ReferenceState& ref) {
  return rho >= 0.5 * ref.rho_bar && rho <= 2.0 * ref.rho_bar && theta >= 0.5 * ref.theta_bar &&
         theta <= 2.0 * ref.theta_bar;
}

EnergySplit ess_res_split(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg) {
  const Grid& g = s.rho.grid();
  const ScalarField e = rel_energy_field(s, t, cfg);
  EnergySplit out{ScalarField(g), 0.0, 0.0, 0.0};
  ScalarField ess(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (in_essential_set(s.rho[i], s.theta[i], cfg.ref)) {
      out.indicator[i] = 1.0;
      ess[i] = e[i];
    }
  }
  out.total = integral(e);
  out.ess = integral(ess);
  out.res = out.total - out.ess;
  return out;
}

CoercivityConstants coercivity_constants(const thermo::GasParams& gas, const thermo::ReferenceState& ref,
                                         const TestBox& box) {
  using Key = std::tuple<double, double, double, double, double, double, double, double, double, double, double>;
  static std::mutex m;
  static std::map<Key, CoercivityConstants> cache;
  const Key key{gas.p_inf, gas.a,        gas.s0,     ref.rho_bar,  ref.theta_bar, box.r_lo,  box.r_hi,
                box.Theta_lo, box.Theta_hi, box.U_max, box.H_max};
  {
    std::lock_guard<std::mutex> lock(m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const thermo::Eos eos(gas);
  CoercivityConstants c{};
  c.c_thermal = thermal_constant(eos, ref, box);
  if (!(c.c_thermal > 0.0)) throw NumericalError(NumericalError::Kind::Positivity, "thermal coercivity constant is not positive");
  c.c_ess = 0.9 * std::min({c.c_thermal, 0.25 * ref.rho_bar, 0.5});
  c.c_res = 0.5 * residual_constant(eos, ref, box);
  if (!(c.c_res > 0.0)) throw NumericalError(NumericalError::Kind::Positivity, "residual coercivity constant is not positive");
  std::lock_guard<std::mutex> lock(m);
  cache.emplace(key, c);
  return c;
}

double ess_lower_bound(const StatePoint& s, const TestPoint& t, double eps, double c_ess) {
  const double ie2 = 1.0 / (eps * eps);
  const double dr = s.rho - t.r, dt = s.theta - t.Theta;
  return c_ess * (ie2 * (dr * dr + dt * dt) + norm2(diff(s.u, t.U)) + ie2 * norm2(diff(s.B, t.H)));
}

double res_lower_bound(const StatePoint& s, double eps, double c_res, const thermo::Eos& eos) {
  const thermo::ThermoPoint pt{s.rho, s.theta};
  const double ie2 = 1.0 / (eps * eps);
  return c_res * (ie2 * (1.0 + eos.energy_density(pt) + std::abs(eos.entropy_density(pt))) +
                  s.rho * norm2(s.u) + ie2 * norm2(s.B));
}

namespace {

void accumulate(CoercivityReport& rep, const StatePoint& s, const TestPoint& t, double eps,
                const thermo::ReferenceState& ref, const thermo::Eos& eos, const CoercivityConstants& c) {
  const double e = rel_energy_density(s, t, eps, eos);
  const bool first = rep.ess_points + rep.res_points == 0;
  rep.min_energy = first ? e : std::min(rep.min_energy, e);
  if (in_essential_set(s.rho, s.theta, ref)) {
    const double m = e - ess_lower_bound(s, t, eps, c.c_ess);
    rep.min_ess_margin = rep.ess_points == 0 ? m : std::min(rep.min_ess_margin, m);
    ++rep.ess_points;
  } else {
    const double m = e - res_lower_bound(s, eps, c.c_res, eos);
    rep.min_res_margin = rep.res_points == 0 ? m : std::min(rep.min_res_margin, m);
    ++rep.res_points;
  }
  rep.holds = rep.min_energy >= 0.0 && (rep.ess_points == 0 || rep.min_ess_margin >= 0.0) &&
              (rep.res_points == 0 || rep.min_res_margin > 0.0);
}

}  // namespace

CoercivityReport coercivity_check(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg,
                                  const CoercivityConstants& c) {
  const thermo::Eos eos(cfg.gas);
  CoercivityReport rep;
  for (std::size_t i = 0; i < s.rho.size(); ++i) accumulate(rep, state_at(s, i), test_at(t, i), s.eps, cfg.ref, eos, c);
  return rep;
}

CoercivityReport coercivity_check(const std::vector<std::pair<StatePoint, TestPoint>>& points, double eps,
                                  const thermo::ReferenceState& ref, const thermo::Eos& eos,
                                  const CoercivityConstants& c) {
  CoercivityReport rep;
  for (const auto& [s, t] : points) accumulate(rep, s, t, eps, ref, eos, c);
  return rep;
}

void RelEnergyReport::append(double t, const EnergySplit& split, double diss) {
  times.push_back(t);
  E_total.push_back(split.total);
  E_ess.push_back(split.ess);
  E_res.push_back(split.res);
  dissipation.push_back(diss);
  sup_E = std::max(sup_E, split.total);
}

Profiles default_profiles(const Grid& grid, const ScalarField& theta_B_bottom, const ScalarField& theta_B_top,
                          double a, double b, double c) {
  const double pi = std::numbers::pi;
  Profiles pr;
  pr.theta1 = ScalarField(grid);
  const std::size_t p = grid.plane_size();
  for (int k = 0; k < grid.n3(); ++k) {
    const double x3 = grid.x3(k);
    for (int j = 0; j < grid.n2(); ++j) {
      for (int i = 0; i < grid.n1(); ++i) {
        const std::size_t h = static_cast<std::size_t>(i) + grid.n1() * static_cast<std::size_t>(j);
        pr.theta1[k * p + h] = (1.0 - x3) * theta_B_bottom[h] + x3 * theta_B_top[h] +
                               std::sin(pi * x3) * (a + b * std::cos(pi * grid.x1(i)));
      }
    }
  }
  const Grid hg = grid.horizontal();
  pr.b1 = ScalarField::sample(hg, [&](double x1, double, double) { return c * std::cos(pi * x1); });
  pr.U = VectorField(hg);
  return pr;
}

std::pair<PrimitiveState, ObmState> well_prepared_data(const Profiles& profiles, double eps, const ObmConfig& obm_cfg,
                                                       const MhdConfig& mhd_cfg) {
  if (obm_cfg.grid != mhd_cfg.grid) throw DomainError("limit and primitive grids differ");
  const ScalarField dv = d1(profiles.U[0]) + d2(profiles.U[1]);
  if (dv.max_abs() > 1e-10 * std::max(1.0, profiles.U.max_abs())) throw DomainError("U0 must be divergence free");
  ObmState obm = make_obm_state(obm_cfg, profiles.theta1, profiles.b1, profiles.U);
  const ScalarField rho1 = boussinesq_rho(obm.theta1, obm.b1, obm_cfg);
  const Grid& g = mhd_cfg.grid;
  PrimitiveState s;
  s.eps = eps;
  s.rho = ScalarField(g, obm_cfg.ref.rho_bar);
  s.rho.add_scaled(eps, rho1);
  s.theta = ScalarField(g, obm_cfg.ref.theta_bar);
  s.theta.add_scaled(eps, obm.theta1);
  s.u = VectorField(extend_vertically(obm.U[0], g), extend_vertically(obm.U[1], g), ScalarField(g));
  s.B = VectorField(g);
  s.B[2] = ScalarField(g, obm_cfg.ref.b_bar);
  s.B[2].add_scaled(eps, extend_vertically(obm.b1, g));
  return {std::move(s), std::move(obm)};
}

TestQuadruple test_from_obm(const ObmState& s, double eps, const ObmConfig& cfg) {
  const Grid& g = cfg.grid;
  TestQuadruple t;
  t.r = ScalarField(g, cfg.ref.rho_bar);
  t.r.add_scaled(eps, boussinesq_rho(s.theta1, s.b1, cfg));
  t.Theta = ScalarField(g, cfg.ref.theta_bar);
  t.Theta.add_scaled(eps, s.theta1);
  t.U = VectorField(extend_vertically(s.U[0], g), extend_vertically(s.U[1], g), ScalarField(g));
  t.H = VectorField(g);
  t.H[2] = ScalarField(g, cfg.ref.b_bar);
  t.H[2].add_scaled(eps, extend_vertically(s.b1, g));
  return t;
}

double compatibility_residual(const ObmState& s, const ObmConfig& cfg) {
  const auto c = thermo::reference_coefficients(cfg.ref, thermo::Eos(cfg.gas));
  const Grid& g = cfg.grid;
  const ScalarField rho1 = boussinesq_rho(s.theta1, s.b1, cfg);
  VectorField B1(g);
  B1[2] = extend_vertically(s.b1, g);
  VectorField Bbar(g);
  Bbar[2] = ScalarField(g, cfg.ref.b_bar);
  const VectorField mag = cross(curl(B1), Bbar);
  const VectorField gr = grad(rho1), gt = grad(s.theta1), gG = grad(cfg.G);
  double worst = 0.0;
  for (int d = 0; d < 3; ++d) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double r = c.dp_drho * gr[d][i] + c.dp_dtheta * gt[d][i] - cfg.ref.rho_bar * gG[d][i] - mag[d][i];
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

}  // namespace obmhd
