#include "obmhd/mhd.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "obmhd/error.hpp"
#include "obmhd/spectral.hpp"

namespace obmhd {

namespace {

void zero_walls(ScalarField& f) {
  const Grid& g = f.grid();
  const std::size_t p = g.plane_size();
  const std::size_t top = (g.n3() - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    f[i] = 0.0;
    f[top + i] = 0.0;
  }
}

void require_positive(const ScalarField& f, const char* name) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f[i] > 0.0)) {
      throw NumericalError(NumericalError::Kind::Positivity,
                           std::string(name) + " not positive at node " + std::to_string(i));
    }
  }
}

// Velocity gradient pieces in 2.5D (d2 == 0).
struct Kinematics {
  ScalarField g11, g13, g21, g23, g31, g33;  // g_ij = d_j u_i
  ScalarField div;
};

Kinematics kinematics(const VectorField& u) {
  Kinematics k;
  k.g11 = d1(u[0]);
  k.g13 = d3(u[0], Closure::Even);
  k.g21 = d1(u[1]);
  k.g23 = d3(u[1], Closure::Even);
  k.g31 = d1(u[2]);
  k.g33 = d3(u[2], Closure::Odd);
  k.div = k.g11 + k.g33;
  return k;
}

// curl B for the parity closures.
VectorField current(const VectorField& B) {
  ScalarField j1 = d3(B[1], Closure::Odd);
  j1 *= -1.0;
  ScalarField j2 = d3(B[0], Closure::Odd) - d1(B[2]);
  ScalarField j3 = d1(B[1]);
  return VectorField(std::move(j1), std::move(j2), std::move(j3));
}

// 2 mu |D_dev|^2 + eta (div u)^2 at node i.
double dissipation(const Kinematics& k, std::size_t i, double mu, double eta) {
  const double dv = k.div[i];
  const double d11 = k.g11[i], d33 = k.g33[i];
  const double d12 = 0.5 * k.g21[i];
  const double d13 = 0.5 * (k.g13[i] + k.g31[i]);
  const double d23 = 0.5 * k.g23[i];
  const double a11 = d11 - dv / 3.0, a22 = -dv / 3.0, a33 = d33 - dv / 3.0;
  const double dev2 = a11 * a11 + a22 * a22 + a33 * a33 + 2.0 * (d12 * d12 + d13 * d13 + d23 * d23);
  return 2.0 * mu * dev2 + eta * dv * dv;
}

double horizontal_kmax(const Grid& g) { return std::numbers::pi * g.n1() / 3.0; }

}  // namespace

MhdConfig MhdConfig::defaults(const Grid& grid, double eps) {
  MhdConfig cfg;
  cfg.grid = grid;
  cfg.eps = eps;
  cfg.G = ScalarField::sample(grid, [](double, double, double x3) { return 0.5 - x3; });
  cfg.theta_B_bottom = ScalarField(grid.horizontal());
  cfg.theta_B_top = ScalarField(grid.horizontal());
  return cfg;
}

void MhdConfig::validate() const {
  gas.validate();
  ref.validate();
  if (grid.geometry() != Geometry::Strip2) throw ConfigError("the primitive solver runs on strip2 grids");
  if (grid.n3() < 4) throw ConfigError("the primitive solver needs n3 >= 4");
  if (G.grid() != grid) throw ConfigError("G is not defined on the solver grid");
  if (theta_B_bottom.grid() != grid.horizontal() || theta_B_top.grid() != grid.horizontal())
    throw ConfigError("wall temperature profiles must live on the horizontal grid");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("eps must be positive");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be nonnegative");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
}

Tensor3 viscous_stress(double theta, const Tensor3& grad_u, const thermo::GasParams& gas) {
  const double m = thermo::mu(theta, gas);
  const double e = thermo::eta(theta, gas);
  const double dv = grad_u[0][0] + grad_u[1][1] + grad_u[2][2];
  Tensor3 S{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) S[i][j] = m * (grad_u[i][j] + grad_u[j][i]);
    S[i][i] += (e - 2.0 / 3.0 * m) * dv;
  }
  return S;
}

PrimitiveState rest_state(const MhdConfig& cfg) {
  PrimitiveState s;
  s.rho = ScalarField(cfg.grid, cfg.ref.rho_bar);
  s.u = VectorField(cfg.grid);
  s.theta = ScalarField(cfg.grid, cfg.ref.theta_bar);
  s.B = VectorField(cfg.grid);
  s.B[2] = ScalarField(cfg.grid, cfg.ref.b_bar);
  s.eps = cfg.eps;
  return s;
}

PrimRhs prim_rhs(const PrimitiveState& s, const MhdConfig& cfg) {
  const Grid& g = s.rho.grid();
  if (g != cfg.grid) throw DomainError("state grid differs from config grid");
  s.rho.require_finite("rho");
  s.theta.require_finite("theta");
  s.u.require_finite("u");
  s.B.require_finite("B");
  require_positive(s.rho, "rho");
  require_positive(s.theta, "theta");

  const thermo::Eos eos(cfg.gas);
  const double eps = s.eps;
  const double ie2 = 1.0 / (eps * eps);
  const std::size_t n = g.size();
  const auto& u = s.u;
  const auto& B = s.B;

  const Kinematics k = kinematics(u);
  const ScalarField th1 = d1(s.theta);
  const ScalarField th3 = d3(s.theta);
  const VectorField J = current(B);

  ScalarField p(g), mu(g), eta(g), mup(g), etap(g), zet(g), zetp(g), kap(g), kapp(g), rcv(g), pth(g);
  for (std::size_t i = 0; i < n; ++i) {
    const thermo::ThermoPoint pt{s.rho[i], s.theta[i]};
    const double th = s.theta[i];
    p[i] = eos.pressure(pt);
    pth[i] = eos.dp_dtheta(pt);
    rcv[i] = s.rho[i] * eos.de_dtheta(pt);
    mu[i] = thermo::mu(th, cfg.gas);
    mup[i] = thermo::mu_prime(th, cfg.gas);
    eta[i] = thermo::eta(th, cfg.gas);
    etap[i] = thermo::eta_prime(th, cfg.gas);
    zet[i] = thermo::zeta(th, cfg.gas);
    zetp[i] = thermo::zeta_prime(th, cfg.gas);
    kap[i] = thermo::kappa(th, cfg.gas);
    kapp[i] = thermo::kappa_prime(th, cfg.gas);
  }

  PrimRhs r{ScalarField(g), VectorField(g), ScalarField(g), VectorField(g)};

  // continuity
  r.rho = d1(s.rho * u[0]) + d3(s.rho * u[2], Closure::Odd);
  r.rho *= -1.0;

  // momentum
  const ScalarField lap1 = laplacian_h(u[0]) + d33(u[0], Closure::Even);
  const ScalarField lap2 = laplacian_h(u[1]) + d33(u[1], Closure::Even);
  const ScalarField lap3 = laplacian_h(u[2]) + d33(u[2], Closure::Odd);
  const ScalarField ddiv1 = laplacian_h(u[0]) + d1(k.g33);
  const ScalarField ddiv3 = d3(k.g11, Closure::Even) + d33(u[2], Closure::Odd);
  const ScalarField p1 = d1(p), p3 = d3(p);
  const ScalarField G1 = d1(cfg.G), G3 = d3(cfg.G);
  for (std::size_t i = 0; i < n; ++i) {
    const double dv = k.div[i];
    const double m1 = mup[i] * th1[i], m3 = mup[i] * th3[i];
    const double e1 = etap[i] * th1[i], e3 = etap[i] * th3[i];
    const double lam = mu[i] / 3.0 + eta[i];
    // div S, expanded
    const double s1 = mu[i] * lap1[i] + lam * ddiv1[i] + m1 * (2.0 * k.g11[i] - 2.0 / 3.0 * dv) +
                      m3 * (k.g13[i] + k.g31[i]) + e1 * dv;
    const double s2 = mu[i] * lap2[i] + m1 * k.g21[i] + m3 * k.g23[i];
    const double s3 = mu[i] * lap3[i] + lam * ddiv3[i] + m1 * (k.g31[i] + k.g13[i]) +
                      m3 * (2.0 * k.g33[i] - 2.0 / 3.0 * dv) + e3 * dv;
    const double jxb1 = J[1][i] * B[2][i] - J[2][i] * B[1][i];
    const double jxb2 = J[2][i] * B[0][i] - J[0][i] * B[2][i];
    const double jxb3 = J[0][i] * B[1][i] - J[1][i] * B[0][i];
    const double ir = 1.0 / s.rho[i];
    r.u[0][i] = -(u[0][i] * k.g11[i] + u[2][i] * k.g13[i]) +
                ir * (s1 - ie2 * p1[i] + s.rho[i] * G1[i] / eps + ie2 * jxb1);
    r.u[1][i] = -(u[0][i] * k.g21[i] + u[2][i] * k.g23[i]) + ir * (s2 + ie2 * jxb2);
    r.u[2][i] = -(u[0][i] * k.g31[i] + u[2][i] * k.g33[i]) +
                ir * (s3 - ie2 * p3[i] + s.rho[i] * G3[i] / eps + ie2 * jxb3);
  }

  // temperature
  const ScalarField lapth = laplacian_h(s.theta) + d33(s.theta);
  for (std::size_t i = 0; i < n; ++i) {
    const double grad2 = th1[i] * th1[i] + th3[i] * th3[i];
    const double j2 = J[0][i] * J[0][i] + J[1][i] * J[1][i] + J[2][i] * J[2][i];
    const double heat = -s.theta[i] * pth[i] * k.div[i] + eps * eps * dissipation(k, i, mu[i], eta[i]) +
                        kap[i] * lapth[i] + kapp[i] * grad2 + zet[i] * j2;
    r.theta[i] = -(u[0][i] * th1[i] + u[2][i] * th3[i]) + heat / rcv[i];
  }

  // induction: dB/dt = curl(u x B - zeta J), resistive part expanded for B1, B2
  ScalarField E1(g), E2(g), E3(g);
  for (std::size_t i = 0; i < n; ++i) {
    E1[i] = u[1][i] * B[2][i] - u[2][i] * B[1][i];
    E2[i] = u[2][i] * B[0][i] - u[0][i] * B[2][i];
    E3[i] = u[0][i] * B[1][i] - u[1][i] * B[0][i];
  }
  const ScalarField lapb1 = laplacian_h(B[0]) + d33(B[0], Closure::Odd);
  const ScalarField lapb2 = laplacian_h(B[1]) + d33(B[1], Closure::Odd);
  r.B[0] = d3(E2, Closure::Even);
  r.B[0] *= -1.0;
  r.B[1] = d3(E1, Closure::Even) - d1(E3);
  ScalarField e2z(g);
  for (std::size_t i = 0; i < n; ++i) {
    const double z1 = zetp[i] * th1[i], z3 = zetp[i] * th3[i];
    r.B[0][i] += zet[i] * lapb1[i] + z3 * J[1][i];
    r.B[1][i] += zet[i] * lapb2[i] - (z3 * J[0][i] - z1 * J[2][i]);
    e2z[i] = E2[i] - zet[i] * J[1][i];
  }
  r.B[2] = d1(e2z);

  if (cfg.sources.forcing) {
    const PrimRhs f = cfg.sources.forcing(s.t);
    r.rho += f.rho;
    r.u += f.u;
    r.theta += f.theta;
    r.B += f.B;
  }

  r.rho = dealias(r.rho);
  r.theta = dealias(r.theta);
  for (int c = 0; c < 3; ++c) {
    r.u[c] = dealias(r.u[c]);
    r.B[c] = dealias(r.B[c]);
  }
  zero_walls(r.u[2]);
  zero_walls(r.theta);
  zero_walls(r.B[0]);
  zero_walls(r.B[1]);
  return r;
}

ScalarField div_B(const VectorField& B) { return d1(B[0]) + d3(B[2], Closure::Even); }

EntropyProduction entropy_production(const PrimitiveState& s, const MhdConfig& cfg) {
  const Grid& g = s.rho.grid();
  const Kinematics k = kinematics(s.u);
  const ScalarField th1 = d1(s.theta), th3 = d3(s.theta);
  const VectorField J = current(s.B);
  EntropyProduction out{ScalarField(g), ScalarField(g), ScalarField(g)};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double th = s.theta[i];
    const double diss = dissipation(k, i, thermo::mu(th, cfg.gas), thermo::eta(th, cfg.gas));
    out.viscous[i] = s.eps * s.eps * diss / th;
    out.thermal[i] = thermo::kappa(th, cfg.gas) * (th1[i] * th1[i] + th3[i] * th3[i]) / (th * th);
    out.ohmic[i] = thermo::zeta(th, cfg.gas) * (J[0][i] * J[0][i] + J[1][i] * J[1][i] + J[2][i] * J[2][i]) / th;
  }
  return out;
}

double ballistic_energy(const PrimitiveState& s, const ScalarField& psi, const MhdConfig& cfg) {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!(psi[i] > 0.0)) throw DomainError("ballistic energy needs psi > 0");
  }
  const thermo::Eos eos(cfg.gas);
  const double ie2 = 1.0 / (s.eps * s.eps);
  ScalarField w(s.rho.grid());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const thermo::ThermoPoint pt{s.rho[i], s.theta[i]};
    const double u2 = s.u[0][i] * s.u[0][i] + s.u[1][i] * s.u[1][i] + s.u[2][i] * s.u[2][i];
    const double b2 = s.B[0][i] * s.B[0][i] + s.B[1][i] * s.B[1][i] + s.B[2][i] * s.B[2][i];
    w[i] = 0.5 * s.rho[i] * u2 + ie2 * (eos.energy_density(pt) + 0.5 * b2 - psi[i] * eos.entropy_density(pt));
  }
  return integral(w);
}

MhdDiagnostics mhd_diagnostics(const PrimitiveState& s, const MhdConfig& cfg) {
  const Grid& g = s.rho.grid();
  const thermo::Eos eos(cfg.gas);
  const double ie2 = 1.0 / (s.eps * s.eps);
  MhdDiagnostics d{};
  d.t = s.t;
  d.mass = integral(s.rho);
  d.momentum = integral(s.rho * s.u[0]);
  ScalarField w(g), psi(g);
  const std::size_t p = g.plane_size();
  for (int k = 0; k < g.n3(); ++k) {
    const double x3 = g.x3(k);
    for (std::size_t i = 0; i < p; ++i) {
      const double wall = (1.0 - x3) * cfg.theta_B_bottom[i] + x3 * cfg.theta_B_top[i];
      psi[k * p + i] = cfg.ref.theta_bar + s.eps * wall;
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const thermo::ThermoPoint pt{s.rho[i], s.theta[i]};
    const double u2 = s.u[0][i] * s.u[0][i] + s.u[1][i] * s.u[1][i] + s.u[2][i] * s.u[2][i];
    const double b2 = s.B[0][i] * s.B[0][i] + s.B[1][i] * s.B[1][i] + s.B[2][i] * s.B[2][i];
    w[i] = 0.5 * s.rho[i] * u2 + ie2 * (eos.energy_density(pt) + 0.5 * b2) - s.rho[i] * cfg.G[i] / s.eps;
  }
  d.energy = integral(w);
  d.ballistic = ballistic_energy(s, psi, cfg);
  d.max_div_b = div_B(s.B).max_abs();
  d.min_rho = *std::min_element(s.rho.values().begin(), s.rho.values().end());
  d.min_theta = *std::min_element(s.theta.values().begin(), s.theta.values().end());
  const EntropyProduction e = entropy_production(s, cfg);
  d.entropy_production = integral(e.viscous + e.thermal + e.ohmic);
  d.min_production_term = std::min({*std::min_element(e.viscous.values().begin(), e.viscous.values().end()),
                                    *std::min_element(e.thermal.values().begin(), e.thermal.values().end()),
                                    *std::min_element(e.ohmic.values().begin(), e.ohmic.values().end())});
  return d;
}

// Per horizontal mode, LU factors of -k^2 + D3 C on interior nodes, where C
// maps phi (zero on the walls) to its central derivative at interior nodes
// and zero at the walls.
struct MhdSolver::Projector {
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> lu;
  std::vector<bool> active;
};

MhdSolver::MhdSolver(MhdConfig cfg) : cfg_(std::move(cfg)), projector_(std::make_unique<Projector>()) {
  cfg_.validate();
  const Grid& g = cfg_.grid;
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  const int m = g.n3() - 2;
  const double inv2h = 0.5 / g.h3();
  // C: interior phi -> derivative on all nodes (walls zero)
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(g.n3(), m);
  for (int k = 1; k < g.n3() - 1; ++k) {
    if (k + 1 <= m) C(k, k) += inv2h;   // phi_{k+1} is interior column k
    if (k - 1 >= 1) C(k, k - 2) -= inv2h;
  }
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(m, g.n3());
  for (int k = 1; k < g.n3() - 1; ++k) {
    D(k - 1, k + 1) += inv2h;
    D(k - 1, k - 1) -= inv2h;
  }
  const Eigen::MatrixXd W = D * C;
  projector_->lu.resize(sp.modes());
  projector_->active.assign(sp.modes(), false);
  for (int m2 = 0; m2 < sp.n2(); ++m2) {
    for (int m1 = 0; m1 < sp.nc(); ++m1) {
      const std::size_t idx = static_cast<std::size_t>(m2) * sp.nc() + m1;
      const double kk = sp.k1_odd(m1) * sp.k1_odd(m1) + sp.k2_odd(m2) * sp.k2_odd(m2);
      if (kk == 0.0) continue;
      Eigen::MatrixXd A = W;
      A.diagonal().array() -= kk;
      projector_->lu[idx].compute(A);
      projector_->active[idx] = true;
    }
  }
}

MhdSolver::~MhdSolver() = default;
MhdSolver::MhdSolver(MhdSolver&&) noexcept = default;
MhdSolver& MhdSolver::operator=(MhdSolver&&) noexcept = default;

VectorField MhdSolver::project_B(const VectorField& B) const {
  const Grid& g = B.grid();
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  const int n3 = g.n3();
  const int m = n3 - 2;
  const std::size_t modes = sp.modes();
  const std::size_t plane = g.plane_size();
  const ScalarField dv = div_B(B);
  std::vector<Complex> dh(modes * n3), ph(modes * n3, Complex(0.0));
  for (int k = 0; k < n3; ++k) sp.forward(dv.data() + k * plane, dh.data() + k * modes);
  Eigen::VectorXd re(m), im(m);
  for (std::size_t idx = 0; idx < modes; ++idx) {
    if (!projector_->active[idx]) continue;
    for (int k = 1; k < n3 - 1; ++k) {
      re(k - 1) = dh[k * modes + idx].real();
      im(k - 1) = dh[k * modes + idx].imag();
    }
    const Eigen::VectorXd xr = projector_->lu[idx].solve(re);
    const Eigen::VectorXd xi = projector_->lu[idx].solve(im);
    for (int k = 1; k < n3 - 1; ++k) ph[k * modes + idx] = Complex(xr(k - 1), xi(k - 1));
  }
  ScalarField phi(g);
  for (int k = 0; k < n3; ++k) sp.backward(ph.data() + k * modes, phi.data() + k * plane);
  VectorField out = B;
  out[0] -= d1(phi);
  ScalarField c3(g);
  const double inv2h = 0.5 / g.h3();
  for (int k = 1; k < n3 - 1; ++k) {
    for (std::size_t i = 0; i < plane; ++i) c3[k * plane + i] = (phi[(k + 1) * plane + i] - phi[(k - 1) * plane + i]) * inv2h;
  }
  out[2] -= c3;
  if (g.has_x2()) out[1] -= d2(phi);
  return out;
}

void MhdSolver::apply_bc(PrimitiveState& s) const {
  const Grid& g = cfg_.grid;
  const std::size_t p = g.plane_size();
  const std::size_t top = (g.n3() - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    s.theta[i] = cfg_.ref.theta_bar + s.eps * cfg_.theta_B_bottom[i];
    s.theta[top + i] = cfg_.ref.theta_bar + s.eps * cfg_.theta_B_top[i];
    for (std::size_t w : {i, top + i}) {
      s.u[2][w] = 0.0;
      s.B[0][w] = 0.0;
      s.B[1][w] = 0.0;
    }
  }
}

double MhdSolver::stable_dt(const PrimitiveState& s) const {
  const thermo::Eos eos(cfg_.gas);
  const Grid& g = cfg_.grid;
  const double kmax = horizontal_kmax(g);
  const double ih = 1.0 / g.h3();
  double wave = 0.0, nu = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const thermo::ThermoPoint pt{s.rho[i], s.theta[i]};
    const double b2 = s.B[0][i] * s.B[0][i] + s.B[1][i] * s.B[1][i] + s.B[2][i] * s.B[2][i];
    const double cf = std::sqrt(eos.sound_speed_sq(pt) + b2 / s.rho[i]);
    const double um = std::sqrt(s.u[0][i] * s.u[0][i] + s.u[1][i] * s.u[1][i] + s.u[2][i] * s.u[2][i]);
    wave = std::max(wave, cf + s.eps * um);
    const double th = s.theta[i];
    const double visc = (4.0 / 3.0 * thermo::mu(th, cfg_.gas) + thermo::eta(th, cfg_.gas)) / s.rho[i];
    const double cond = thermo::kappa(th, cfg_.gas) / (s.rho[i] * eos.de_dtheta(pt));
    nu = std::max({nu, visc, cond, thermo::zeta(th, cfg_.gas)});
  }
  const double acoustic = s.eps / (wave * (kmax + ih));
  const double diffusive = 1.0 / (nu * (kmax * kmax + 4.0 * ih * ih));
  return cfg_.cfl * std::min(acoustic, diffusive);
}

PrimitiveState MhdSolver::step(const PrimitiveState& s) const { return step(s, cfg_.dt); }

PrimitiveState MhdSolver::step(const PrimitiveState& s, double dt) const {
  const double limit = stable_dt(s);
  if (dt == 0.0) {
    dt = limit;
  } else if (dt > limit * (1.0 + 1e-12)) {
    throw NumericalError(NumericalError::Kind::Cfl,
                         "MHD step rejected: dt = " + std::to_string(dt) + " exceeds CFL bound " + std::to_string(limit));
  }
  auto stage = [&](const PrimitiveState& base, const PrimRhs& r, double h) {
    PrimitiveState out = base;
    out.rho.add_scaled(h, r.rho);
    out.theta.add_scaled(h, r.theta);
    for (int c = 0; c < 3; ++c) {
      out.u[c].add_scaled(h, r.u[c]);
      out.B[c].add_scaled(h, r.B[c]);
    }
    out.t = base.t + h;
    return out;
  };
  auto finish = [&](PrimitiveState& x) {
    apply_bc(x);
    x.B = project_B(x.B);
    x.rho.require_finite("rho");
    x.theta.require_finite("theta");
    x.u.require_finite("u");
    x.B.require_finite("B");
    require_positive(x.rho, "rho");
    require_positive(x.theta, "theta");
  };

  PrimitiveState s1 = stage(s, prim_rhs(s, cfg_), dt);
  finish(s1);
  PrimitiveState s2 = stage(s1, prim_rhs(s1, cfg_), dt);
  PrimitiveState next = s;
  next.rho += s2.rho;
  next.rho *= 0.5;
  next.theta += s2.theta;
  next.theta *= 0.5;
  next.u += s2.u;
  next.u *= 0.5;
  next.B += s2.B;
  next.B *= 0.5;
  next.t = s.t + dt;
  finish(next);
  return next;
}

PrimitiveState step_prim(const PrimitiveState& s, double dt, const MhdConfig& cfg) {
  MhdConfig c = cfg;
  c.dt = dt;
  return MhdSolver(std::move(c)).step(s);
}

}  // namespace obmhd
