#include "obmhd/obm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "obmhd/error.hpp"
#include "obmhd/spectral.hpp"

namespace obmhd {

namespace {

thermo::ReferenceCoefficients coefficients(const ObmConfig& cfg) {
  return thermo::reference_coefficients(cfg.ref, thermo::Eos(cfg.gas));
}

bool degenerate(const ObmConfig& cfg) { return cfg.grid.geometry() == Geometry::Strip2; }

ScalarField broadcast(const ScalarField& f, const ObmConfig& cfg) { return extend_vertically(f, cfg.grid); }

// U . grad_h f for a strip field f and torus velocity U.
ScalarField advect(const VectorField& U, const ScalarField& f, const ObmConfig& cfg) {
  ScalarField out = dealiased_product(broadcast(U[0], cfg), d1(f));
  if (cfg.grid.has_x2()) out += dealiased_product(broadcast(U[1], cfg), d2(f));
  return out;
}

// Crank-Nicolson update of df/dt = coeff lap_h f + n, one horizontal plane.
ScalarField cn_diagonal(const ScalarField& f, const ScalarField& n, double coeff, double dt) {
  const Grid& g = f.grid();
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  std::vector<Complex> fh(sp.modes()), nh(sp.modes());
  sp.forward(f.data(), fh.data());
  sp.forward(n.data(), nh.data());
  for (int m2 = 0; m2 < sp.n2(); ++m2) {
    for (int m1 = 0; m1 < sp.nc(); ++m1) {
      const std::size_t i = static_cast<std::size_t>(m2) * sp.nc() + m1;
      const double k2 = sp.k1(m1) * sp.k1(m1) + sp.k2(m2) * sp.k2(m2);
      const double half = 0.5 * dt * coeff * k2;
      fh[i] = ((1.0 - half) * fh[i] + dt * nh[i]) / (1.0 + half);
    }
  }
  ScalarField out(g);
  sp.backward(fh.data(), out.data());
  return out;
}

VectorField zero_third(VectorField v) {
  v[2] = ScalarField(v.grid());
  return v;
}

}  // namespace

ObmConfig ObmConfig::defaults(const Grid& grid) {
  ObmConfig cfg;
  cfg.grid = grid;
  cfg.G = ScalarField::sample(grid, [](double, double, double x3) { return 0.5 - x3; });
  cfg.theta_B_bottom = ScalarField(grid.horizontal());
  cfg.theta_B_top = ScalarField(grid.horizontal());
  return cfg;
}

void ObmConfig::validate() const {
  gas.validate();
  ref.validate();
  if (!grid.has_walls()) throw ConfigError("the limit system needs a strip grid");
  if (G.grid() != grid) throw ConfigError("G is not defined on the solver grid");
  if (theta_B_bottom.grid() != grid.horizontal() || theta_B_top.grid() != grid.horizontal())
    throw ConfigError("wall temperature profiles must live on the horizontal grid");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
  if (std::abs(mean(G)) > 1e-10 * std::max(1.0, G.max_abs())) throw ConfigError("G must have zero mean");
}

ObmState make_obm_state(const ObmConfig& cfg, ScalarField theta1, ScalarField b1, VectorField U) {
  const Grid hg = cfg.grid.horizontal();
  if (theta1.grid() != cfg.grid) throw DomainError("theta1 must live on the solver grid");
  if (b1.grid() != hg || U.grid() != hg) throw DomainError("b1 and U must live on the horizontal grid");
  ObmState s;
  const std::size_t p = cfg.grid.plane_size();
  const std::size_t top = (cfg.grid.n3() - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    theta1[i] = cfg.theta_B_bottom[i];
    theta1[top + i] = cfg.theta_B_top[i];
  }
  s.theta1 = std::move(theta1);
  s.b1 = std::move(b1);
  s.U = degenerate(cfg) ? VectorField(hg) : zero_third(leray_project(U));
  s.chi = coefficients(cfg).dp_dtheta * mean(s.theta1);
  return s;
}

ScalarField magnetic_potential(const ScalarField& b1, const ObmConfig& cfg) {
  ScalarField A = b1;
  A *= cfg.ref.b_bar;
  return A;
}

ScalarField boussinesq_rho(const ScalarField& theta1, const ScalarField& b1, const ObmConfig& cfg) {
  if (std::abs(mean(cfg.G)) > 1e-10 * std::max(1.0, cfg.G.max_abs())) throw ConfigError("G must have zero mean");
  const auto c = coefficients(cfg);
  const double theta_mean = mean(theta1);
  ScalarField A = magnetic_potential(b1, cfg);
  const double a_mean = mean(A);
  const ScalarField A3 = broadcast(A, cfg);
  ScalarField rho1(cfg.grid);
  for (std::size_t i = 0; i < rho1.size(); ++i) {
    rho1[i] = (cfg.ref.rho_bar * cfg.G[i] - c.dp_dtheta * (theta1[i] - theta_mean) - (A3[i] - a_mean)) / c.dp_drho;
  }
  return rho1;
}

ScalarField induction_rhs(const ScalarField& b1, const VectorField& U, const ObmConfig& cfg) {
  const double z = thermo::zeta(cfg.ref.theta_bar, cfg.gas);
  ScalarField out = laplacian_h(b1);
  out *= z;
  out -= d1(dealiased_product(b1, U[0]));
  out -= d2(dealiased_product(b1, U[1]));
  return out;
}

namespace {

struct HeatExplicit {
  ScalarField n;
  double drift;
};

HeatExplicit heat_explicit(const ObmState& s, const ObmConfig& cfg) {
  const auto c = coefficients(cfg);
  const double rb = cfg.ref.rho_bar, tb = cfg.ref.theta_bar;
  const double kap = thermo::kappa(tb, cfg.gas);
  const double zet = thermo::zeta(tb, cfg.gas);
  const double rcp = rb * c.cp;

  ScalarField src(cfg.grid);
  if (cfg.sources.heat) src = cfg.sources.heat(s.t);
  const double drift = (kap * mean_laplacian_flux(s.theta1).value + rcp * mean(src)) / (rb * c.de_dtheta);

  ScalarField n = broadcast(laplacian_h(magnetic_potential(s.b1, cfg)), cfg);
  n *= -tb * c.alpha * zet;
  if (!degenerate(cfg)) n.add_scaled(rb * tb * c.alpha, advect(s.U, cfg.G, cfg));
  for (std::size_t i = 0; i < n.size(); ++i) n[i] += tb * c.alpha * c.dp_dtheta * drift;
  n *= 1.0 / rcp;
  if (!degenerate(cfg)) n -= advect(s.U, s.theta1, cfg);
  n += src;
  return {std::move(n), drift};
}

VectorField momentum_explicit(const ObmState& s, const ObmConfig& cfg) {
  const Grid hg = cfg.grid.horizontal();
  VectorField n(hg);
  if (degenerate(cfg)) return n;
  const ScalarField rho1 = boussinesq_rho(s.theta1, s.b1, cfg);
  const ScalarField f1 = depth_average(dealiased_product(rho1, d1(cfg.G)));
  const ScalarField f2 = depth_average(dealiased_product(rho1, d2(cfg.G)));
  for (int i = 0; i < 2; ++i) {
    ScalarField adv = dealiased_product(s.U[0], d1(s.U[i]));
    adv += dealiased_product(s.U[1], d2(s.U[i]));
    n[i] -= adv;
  }
  n[0].add_scaled(1.0 / cfg.ref.rho_bar, f1);
  n[1].add_scaled(1.0 / cfg.ref.rho_bar, f2);
  if (cfg.sources.momentum) {
    VectorField m = cfg.sources.momentum(s.t);
    n[0] += m[0];
    n[1] += m[1];
  }
  return n;
}

ScalarField induction_explicit(const ObmState& s, const ObmConfig& cfg) {
  ScalarField n(cfg.grid.horizontal());
  if (!degenerate(cfg)) {
    n -= d1(dealiased_product(s.b1, s.U[0]));
    n -= d2(dealiased_product(s.b1, s.U[1]));
  }
  if (cfg.sources.induction) n += cfg.sources.induction(s.t);
  return n;
}

}  // namespace

HeatRhs heat_rhs(const ObmState& state, const ObmConfig& cfg) {
  const auto c = coefficients(cfg);
  const double kap = thermo::kappa(cfg.ref.theta_bar, cfg.gas);
  HeatExplicit e = heat_explicit(state, cfg);
  e.n.add_scaled(kap / (cfg.ref.rho_bar * c.cp), laplacian(state.theta1));
  return {std::move(e.n), e.drift};
}

VectorField momentum_rhs(const ObmState& state, const ObmConfig& cfg) {
  VectorField n = momentum_explicit(state, cfg);
  if (degenerate(cfg)) return n;
  const double nu = thermo::mu(cfg.ref.theta_bar, cfg.gas) / cfg.ref.rho_bar;
  n[0].add_scaled(nu, laplacian_h(state.U[0]));
  n[1].add_scaled(nu, laplacian_h(state.U[1]));
  return zero_third(leray_project(n));
}

ObmPressure obm_pressure(const ObmState& state, const ObmConfig& cfg) {
  const Grid hg = cfg.grid.horizontal();
  ObmPressure out{ScalarField(hg), state.b1 * state.b1};
  out.magnetic *= 0.5;
  if (degenerate(cfg)) return out;
  VectorField n = momentum_explicit(state, cfg);
  const double nu = thermo::mu(cfg.ref.theta_bar, cfg.gas) / cfg.ref.rho_bar;
  n[0].add_scaled(nu, laplacian_h(state.U[0]));
  n[1].add_scaled(nu, laplacian_h(state.U[1]));
  leray_project(n, &out.leray);
  out.leray *= cfg.ref.rho_bar;
  return out;
}

double obm_kinetic_energy(const ObmState& state, const ObmConfig& cfg) {
  const ScalarField e = dot(state.U, state.U);
  return 0.5 * cfg.ref.rho_bar * mean(e) * cfg.grid.volume();
}

double obm_magnetic_energy(const ObmState& state, const ObmConfig& cfg) {
  return 0.5 * mean(state.b1 * state.b1) * cfg.grid.volume();
}

ObmSolver::ObmSolver(ObmConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  const auto c = coefficients(cfg_);
  const double tb = cfg_.ref.theta_bar;
  kappa_ = thermo::kappa(tb, cfg_.gas);
  zeta_ = thermo::zeta(tb, cfg_.gas);
  nu_ = thermo::mu(tb, cfg_.gas) / cfg_.ref.rho_bar;
  heat_diff_ = kappa_ / (cfg_.ref.rho_bar * c.cp);
  const auto& sp = PlaneSpectrum::get(cfg_.grid.n1(), cfg_.grid.n2());
  wall_bottom_.resize(sp.modes());
  wall_top_.resize(sp.modes());
  sp.forward(cfg_.theta_B_bottom.data(), wall_bottom_.data());
  sp.forward(cfg_.theta_B_top.data(), wall_top_.data());
}

ObmSolver::Tendency ObmSolver::explicit_part(const ObmState& s) const {
  VectorField u = momentum_explicit(s, cfg_);
  if (!degenerate(cfg_)) u = zero_third(leray_project(u));
  return {std::move(u), heat_explicit(s, cfg_).n, induction_explicit(s, cfg_)};
}

// Solves (I - dt/2 L) x = rhs mode by mode; wall rows carry theta_B.
ScalarField ObmSolver::solve_heat(const ScalarField& rhs) const {
  const Grid& g = cfg_.grid;
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  const int n3 = g.n3();
  const std::size_t modes = sp.modes();
  const std::size_t plane = g.plane_size();
  std::vector<Complex> spec(modes * n3);
  for (int k = 0; k < n3; ++k) sp.forward(rhs.data() + k * plane, spec.data() + k * modes);

  const double r = 0.5 * cfg_.dt * heat_diff_ / (g.h3() * g.h3());
  std::vector<double> cprime(n3);
  std::vector<Complex> dprime(n3);
  for (int m2 = 0; m2 < sp.n2(); ++m2) {
    for (int m1 = 0; m1 < sp.nc(); ++m1) {
      const std::size_t m = static_cast<std::size_t>(m2) * sp.nc() + m1;
      const double kk = sp.k1(m1) * sp.k1(m1) + sp.k2(m2) * sp.k2(m2);
      const double diag = 1.0 + 2.0 * r + 0.5 * cfg_.dt * heat_diff_ * kk;
      cprime[0] = 0.0;
      dprime[0] = wall_bottom_[m];
      for (int k = 1; k < n3 - 1; ++k) {
        const double denom = diag + r * cprime[k - 1];
        cprime[k] = -r / denom;
        dprime[k] = (spec[k * modes + m] + r * dprime[k - 1]) / denom;
      }
      Complex x = wall_top_[m];
      spec[(n3 - 1) * modes + m] = x;
      for (int k = n3 - 2; k >= 0; --k) {
        x = dprime[k] - cprime[k] * x;
        spec[k * modes + m] = x;
      }
    }
  }
  ScalarField out(g);
  for (int k = 0; k < n3; ++k) sp.backward(spec.data() + k * modes, out.data() + k * plane);
  const std::size_t top = (n3 - 1) * plane;
  for (std::size_t i = 0; i < plane; ++i) {
    out[i] = cfg_.theta_B_bottom[i];
    out[top + i] = cfg_.theta_B_top[i];
  }
  return out;
}

ObmState ObmSolver::step(const ObmState& s) {
  const double dt = cfg_.dt;
  const Grid hg = cfg_.grid.horizontal();
  double h = hg.h1();
  if (hg.n2() > 1) h = std::min(h, hg.h2());
  const double umax = s.U.max_abs();
  if (umax * dt / h > 0.9) {
    throw NumericalError(NumericalError::Kind::Cfl,
                         "OBM step rejected: |U|max dt/h = " + std::to_string(umax * dt / h) + " > 0.9");
  }

  const auto c = coefficients(cfg_);
  auto advance = [&](const ObmState& base, const Tendency& n) {
    ObmState out;
    ScalarField rhs = base.theta1;
    rhs.add_scaled(0.5 * dt * heat_diff_, laplacian(base.theta1));
    rhs.add_scaled(dt, n.theta1);
    out.theta1 = solve_heat(rhs);
    out.b1 = cn_diagonal(base.b1, n.b1, zeta_, dt);
    if (degenerate(cfg_)) {
      out.U = VectorField(hg);
    } else {
      VectorField u(hg);
      u[0] = cn_diagonal(base.U[0], n.U[0], nu_, dt);
      u[1] = cn_diagonal(base.U[1], n.U[1], nu_, dt);
      out.U = zero_third(leray_project(u));
    }
    out.t = base.t + dt;
    out.chi = c.dp_dtheta * mean(out.theta1);
    return out;
  };

  const Tendency n0 = explicit_part(s);
  const ObmState pred = advance(s, n0);
  Tendency n1 = explicit_part(pred);
  n1.U += n0.U;
  n1.U *= 0.5;
  n1.theta1 += n0.theta1;
  n1.theta1 *= 0.5;
  n1.b1 += n0.b1;
  n1.b1 *= 0.5;
  ObmState next = advance(s, n1);

  next.theta1.require_finite("theta1");
  next.b1.require_finite("b1");
  next.U.require_finite("U");

  const ScalarField r0 = boussinesq_rho(s.theta1, s.b1, cfg_);
  const ScalarField r1 = boussinesq_rho(next.theta1, next.b1, cfg_);
  ScalarField res = r1 - r0;
  res *= 1.0 / dt;
  if (!degenerate(cfg_)) {
    ScalarField rmid = r0 + r1;
    rmid *= 0.5;
    for (int i = 0; i < 2; ++i) {
      ScalarField umid = s.U[i] + next.U[i];
      umid *= 0.5;
      const ScalarField flux = dealiased_product(rmid, broadcast(umid, cfg_));
      res += (i == 0) ? d1(flux) : d2(flux);
    }
  }
  continuity_ = res.max_abs();
  return next;
}

ObmState step_obm(const ObmState& state, const ObmConfig& cfg) {
  ObmSolver solver(cfg);
  return solver.step(state);
}

}  // namespace obmhd
