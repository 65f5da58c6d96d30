#include "obmhd/mms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "obmhd/dual.hpp"
#include "obmhd/error.hpp"
#include "obmhd/mhd.hpp"
#include "obmhd/obm.hpp"

namespace obmhd {

namespace {

using std::cos;
using std::sin;

constexpr double pi = std::numbers::pi;

double amp(double t) { return 1.0 + 0.5 * std::sin(3.0 * t); }
double amp_dt(double t) { return 1.5 * std::cos(3.0 * t); }

// f(t, x) = f0(x) + amp(t) f1(x) at one node
struct Sep {
  Jet f0;
  Jet f1;
};

struct PJ {
  double v = 0.0;
  double t = 0.0;
  std::array<double, 3> d{};
  std::array<std::array<double, 3>, 3> dd{};
};

PJ at_time(const Sep& s, double t) {
  const double a = amp(t);
  PJ p;
  p.v = s.f0.v + a * s.f1.v;
  p.t = amp_dt(t) * s.f1.v;
  for (int i = 0; i < 3; ++i) {
    p.d[i] = s.f0.d[i] + a * s.f1.d[i];
    for (int j = 0; j < 3; ++j) p.dd[i][j] = s.f0.dd[i][j] + a * s.f1.dd[i][j];
  }
  return p;
}

double levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

template <class F0, class F1>
std::vector<Sep> sample_sep(const Grid& g, const F0& f0, const F1& f1) {
  std::vector<Sep> out(g.size());
  const bool x2 = g.has_x2();
  for (int k = 0; k < g.n3(); ++k)
    for (int j = 0; j < g.n2(); ++j)
      for (int i = 0; i < g.n1(); ++i)
        out[g.index(i, j, k)] = {make_jet(f0, g.x1(i), g.x2(j), g.x3(k), x2), make_jet(f1, g.x1(i), g.x2(j), g.x3(k), x2)};
  return out;
}

ScalarField field_at(const std::vector<Sep>& s, const Grid& g, double t) {
  ScalarField f(g);
  const double a = amp(t);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = s[i].f0.v + a * s[i].f1.v;
  return f;
}

double l2_sq(const ScalarField& a, const ScalarField& b) {
  const ScalarField d = a - b;
  return integral(d * d);
}

void remove_mean(ScalarField& f) {
  const double m = mean(f);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= m;
}

double observed_order(const MmsRow& a, const MmsRow& b) {
  const double ha = 1.0 / (a.n3 - 1), hb = 1.0 / (b.n3 - 1);
  return std::log(a.error / b.error) / std::log(ha / hb);
}

void finish(MmsTable& tab, const MmsOptions& opt) {
  tab.orders.clear();
  for (std::size_t i = 1; i < tab.vertical.size(); ++i) tab.orders.push_back(observed_order(tab.vertical[i - 1], tab.vertical[i]));
  tab.orders_ok = !tab.orders.empty();
  for (double o : tab.orders) tab.orders_ok = tab.orders_ok && o >= opt.order_lo && o <= opt.order_hi;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < tab.horizontal.size(); ++i) {
    const double e = tab.horizontal[i].error;
    lo = i == 0 ? e : std::min(lo, e);
    hi = i == 0 ? e : std::max(hi, e);
  }
  tab.horizontal_spread = lo > 0.0 ? (hi - lo) / lo : 0.0;
  tab.floor_ok = !tab.horizontal.empty() && tab.horizontal_spread <= opt.floor_tol;
}

// ---------------------------------------------------------------- limit system

struct ObmExact {
  // U and b1 on the torus, theta1 and G on the strip
  static constexpr auto U1_1 = [](auto x1, auto x2, auto) { return 0.2 * sin(pi * x1) * cos(pi * x2); };
  static constexpr auto U2_1 = [](auto x1, auto x2, auto) { return -0.2 * cos(pi * x1) * sin(pi * x2); };
  static constexpr auto b_1 = [](auto x1, auto x2, auto) { return 0.3 * cos(pi * x1) * cos(pi * x2); };
  static constexpr auto th_0 = [](auto x1, auto, auto x3) { return 0.2 * cos(pi * x1) * (1.0 - x3); };
  static constexpr auto th_1 = [](auto x1, auto x2, auto x3) {
    return sin(pi * x3) * (0.5 + 0.3 * cos(pi * x1) * sin(pi * x2));
  };
  static constexpr auto G = [](auto x1, auto, auto x3) { return 0.5 - x3 + 0.1 * cos(pi * x1) * cos(pi * x3); };
  static constexpr auto zero = [](auto x1, auto, auto) { return 0.0 * x1; };
};

template <class F>
double simpson_depth_average(const F& f, double x1, double x2, int m = 200) {
  double acc = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += w * f(x1, x2, static_cast<double>(k) / m);
  }
  return acc / (3.0 * m);
}

MmsRow run_obm(int n1, int n3, const MmsOptions& opt, MmsTable& tab) {
  using E = ObmExact;
  const Grid g = Grid::strip3(n1, n1, n3);
  const Grid hg = g.horizontal();
  ObmConfig cfg = ObmConfig::defaults(g);
  cfg.G = ScalarField::sample(g, [](double x1, double x2, double x3) { return E::G(x1, x2, x3); });
  cfg.theta_B_bottom = ScalarField::sample(hg, [](double x1, double x2, double) { return E::th_0(x1, x2, 0.0); });
  cfg.theta_B_top = ScalarField(hg);
  const int steps = std::max(1, static_cast<int>(std::ceil(opt.obm_t_end / (opt.obm_dt_per_h * g.h3()))));
  cfg.dt = opt.obm_t_end / steps;
  cfg.t_end = opt.obm_t_end;

  const auto c = thermo::reference_coefficients(cfg.ref, thermo::Eos(cfg.gas));
  const double rb = cfg.ref.rho_bar, tb = cfg.ref.theta_bar, bb = cfg.ref.b_bar;
  const double kap = thermo::kappa(tb, cfg.gas), zet = thermo::zeta(tb, cfg.gas);
  const double nu = thermo::mu(tb, cfg.gas) / rb;

  const auto U1 = sample_sep(hg, E::zero, E::U1_1);
  const auto U2 = sample_sep(hg, E::zero, E::U2_1);
  const auto B = sample_sep(hg, E::zero, E::b_1);
  const auto TH = sample_sep(g, E::th_0, E::th_1);
  std::vector<Jet> Gj(g.size());
  for (int k = 0; k < n3; ++k)
    for (int j = 0; j < n1; ++j)
      for (int i = 0; i < n1; ++i) Gj[g.index(i, j, k)] = make_jet(E::G, g.x1(i), g.x2(j), g.x3(k));

  // continuous means and depth averages
  double th0_mean = 0.0, th1_mean = 0.0;
  const int q = 32;
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < q; ++i) {
      const double x1 = -1.0 + 2.0 * i / q, x2 = -1.0 + 2.0 * j / q;
      th0_mean += simpson_depth_average([](double a, double b, double z) { return E::th_0(a, b, z); }, x1, x2);
      th1_mean += simpson_depth_average([](double a, double b, double z) { return E::th_1(a, b, z); }, x1, x2);
    }
  th0_mean /= q * q;
  th1_mean /= q * q;
  struct Avg {
    double G, t0, t1, one;
  };
  std::array<std::vector<Avg>, 2> avg{std::vector<Avg>(hg.size()), std::vector<Avg>(hg.size())};
  for (int j = 0; j < n1; ++j)
    for (int i = 0; i < n1; ++i) {
      const double x1 = hg.x1(i), x2 = hg.x2(j);
      for (int d = 0; d < 2; ++d) {
        auto dG = [d](double a, double b, double z) { return make_jet(E::G, a, b, z).d[d]; };
        Avg& A = avg[d][hg.index(i, j, 0)];
        A.G = simpson_depth_average([&](double a, double b, double z) { return E::G(a, b, z) * dG(a, b, z); }, x1, x2);
        A.t0 = simpson_depth_average([&](double a, double b, double z) { return E::th_0(a, b, z) * dG(a, b, z); }, x1, x2);
        A.t1 = simpson_depth_average([&](double a, double b, double z) { return E::th_1(a, b, z) * dG(a, b, z); }, x1, x2);
        A.one = simpson_depth_average(dG, x1, x2);
      }
    }

  cfg.sources.heat = [&, g](double t) {
    ScalarField s(g);
    const std::size_t p = g.plane_size();
    const double drift = amp_dt(t) * th1_mean;
    for (std::size_t n = 0; n < g.size(); ++n) {
      const PJ th = at_time(TH[n], t);
      const PJ u1 = at_time(U1[n % p], t), u2 = at_time(U2[n % p], t), b = at_time(B[n % p], t);
      const Jet& G = Gj[n];
      const double lap = th.dd[0][0] + th.dd[1][1] + th.dd[2][2];
      const double lapA = bb * (b.dd[0][0] + b.dd[1][1]);
      const double ugG = u1.v * G.d[0] + u2.v * G.d[1];
      const double ugt = u1.v * th.d[0] + u2.v * th.d[1];
      const double rhs = (kap * lap + rb * tb * c.alpha * ugG - tb * c.alpha * zet * lapA +
                          tb * c.alpha * c.dp_dtheta * drift) / (rb * c.cp);
      s[n] = th.t + ugt - rhs;
    }
    return s;
  };
  cfg.sources.induction = [&, hg](double t) {
    ScalarField s(hg);
    for (std::size_t n = 0; n < hg.size(); ++n) {
      const PJ u1 = at_time(U1[n], t), u2 = at_time(U2[n], t), b = at_time(B[n], t);
      s[n] = b.t + u1.v * b.d[0] + u2.v * b.d[1] - zet * (b.dd[0][0] + b.dd[1][1]);
    }
    remove_mean(s);
    return s;
  };
  cfg.sources.momentum = [&, hg](double t) {
    VectorField s(hg);
    const double a = amp(t);
    const double chi = c.dp_dtheta * (th0_mean + a * th1_mean);
    for (std::size_t n = 0; n < hg.size(); ++n) {
      const PJ u[2] = {at_time(U1[n], t), at_time(U2[n], t)};
      const PJ b = at_time(B[n], t);
      for (int d = 0; d < 2; ++d) {
        const Avg& A = avg[d][n];
        const double F =
            (rb * A.G + (chi - bb * b.v) * A.one - c.dp_dtheta * (A.t0 + a * A.t1)) / (c.dp_drho * rb);
        s[d][n] = u[d].t + u[0].v * u[d].d[0] + u[1].v * u[d].d[1] - nu * (u[d].dd[0][0] + u[d].dd[1][1]) - F;
      }
    }
    return s;
  };

  ObmSolver solver(cfg);
  ObmState st = make_obm_state(cfg, field_at(TH, g, 0.0), field_at(B, hg, 0.0),
                               VectorField(field_at(U1, hg, 0.0), field_at(U2, hg, 0.0), ScalarField(hg)));
  const double b_mean0 = mean(st.b1);
  for (int k = 0; k < steps; ++k) {
    st = solver.step(st);
    tab.b1_mean_drift = std::max(tab.b1_mean_drift, std::abs(mean(st.b1) - b_mean0));
    tab.max_div_U = std::max(tab.max_div_U, (d1(st.U[0]) + d2(st.U[1])).max_abs());
  }
  const double T = st.t;
  const double err = l2_sq(st.theta1, field_at(TH, g, T)) + l2_sq(st.b1, field_at(B, hg, T)) +
                     l2_sq(st.U[0], field_at(U1, hg, T)) + l2_sq(st.U[1], field_at(U2, hg, T));
  return {n1, n3, cfg.dt, steps, std::sqrt(err)};
}

// ------------------------------------------------------------ primitive system

struct MhdExact {
  static constexpr auto one = [](auto x1, auto, auto) { return 0.0 * x1 + 1.0; };
  static constexpr auto zero = [](auto x1, auto, auto) { return 0.0 * x1; };
  static constexpr auto rho_1 = [](auto x1, auto, auto x3) { return 0.1 * cos(pi * x1) * cos(pi * x3); };
  static constexpr auto u1_1 = [](auto x1, auto, auto x3) { return 0.1 * sin(pi * x1) * cos(pi * x3); };
  static constexpr auto u2_1 = [](auto x1, auto, auto x3) { return 0.1 * cos(pi * x1) * cos(pi * x3); };
  static constexpr auto u3_1 = [](auto x1, auto, auto x3) { return 0.1 * cos(pi * x1) * sin(pi * x3); };
  static constexpr auto th_0 = [](auto x1, auto, auto x3) { return 1.0 + 0.05 * cos(pi * x1) * (1.0 - x3); };
  static constexpr auto th_1 = [](auto x1, auto, auto x3) { return 0.1 * sin(pi * x3) * (1.0 + 0.5 * cos(pi * x1)); };
  static constexpr auto B1_1 = [](auto x1, auto, auto x3) { return 0.1 * pi * sin(pi * x1) * sin(pi * x3); };
  static constexpr auto B2_1 = [](auto x1, auto, auto x3) { return 0.1 * cos(pi * x1) * sin(pi * x3); };
  static constexpr auto B3_1 = [](auto x1, auto, auto x3) { return 0.1 * pi * cos(pi * x1) * cos(pi * x3); };
  static constexpr auto G = [](auto x1, auto, auto x3) { return 0.5 - x3 + 0.0 * x1; };
};

struct MhdFields {
  std::vector<Sep> rho, th;
  std::array<std::vector<Sep>, 3> u, B;
  std::vector<Jet> G;
};

// continuous residual d_t q - L(q) of every equation at one node
void mhd_source(const MhdFields& f, std::size_t n, double t, double eps, const thermo::Eos& eos,
                const thermo::GasParams& gas, PrimRhs& out) {
  const PJ rho = at_time(f.rho[n], t), th = at_time(f.th[n], t);
  const PJ u[3] = {at_time(f.u[0][n], t), at_time(f.u[1][n], t), at_time(f.u[2][n], t)};
  const PJ B[3] = {at_time(f.B[0][n], t), at_time(f.B[1][n], t), at_time(f.B[2][n], t)};
  const Jet& G = f.G[n];
  const double ie2 = 1.0 / (eps * eps);
  const thermo::ThermoPoint pt{rho.v, th.v};
  const double p_r = eos.dp_drho(pt), p_t = eos.dp_dtheta(pt), rcv = rho.v * eos.de_dtheta(pt);
  const double mu = thermo::mu(th.v, gas), mup = thermo::mu_prime(th.v, gas);
  const double eta = thermo::eta(th.v, gas), etap = thermo::eta_prime(th.v, gas);
  const double kap = thermo::kappa(th.v, gas), kapp = thermo::kappa_prime(th.v, gas);
  const double zet = thermo::zeta(th.v, gas), zetp = thermo::zeta_prime(th.v, gas);
  const double lam = eta - 2.0 / 3.0 * mu, lamp = etap - 2.0 / 3.0 * mup;

  double g[3][3], div = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g[i][j] = u[i].d[j];
    div += u[i].d[i];
  }
  double J[3], dJ[3][3];
  for (int i = 0; i < 3; ++i) {
    J[i] = 0.0;
    for (int a = 0; a < 3; ++a) dJ[i][a] = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double e = levi(i, j, k);
        if (e == 0.0) continue;
        J[i] += e * B[k].d[j];
        for (int a = 0; a < 3; ++a) dJ[i][a] += e * B[k].dd[j][a];
      }
  }

  double src_rho = rho.t;
  for (int i = 0; i < 3; ++i) src_rho += rho.d[i] * u[i].v + rho.v * u[i].d[i];
  out.rho[n] = src_rho;

  double SS = 0.0;
  for (int i = 0; i < 3; ++i) {
    double divS = 0.0;
    double ddiv = 0.0;
    for (int j = 0; j < 3; ++j) {
      divS += mup * th.d[j] * (g[i][j] + g[j][i]) + mu * (u[i].dd[j][j] + u[j].dd[i][j]);
      ddiv += u[j].dd[j][i];
      const double S = mu * (g[i][j] + g[j][i]) + (i == j ? lam * div : 0.0);
      SS += S * g[i][j];
    }
    divS += lamp * th.d[i] * div + lam * ddiv;
    double jxb = 0.0, adv = 0.0;
    for (int j = 0; j < 3; ++j) {
      adv += u[j].v * g[i][j];
      for (int k = 0; k < 3; ++k) jxb += levi(i, j, k) * J[j] * B[k].v;
    }
    const double gp = p_r * rho.d[i] + p_t * th.d[i];
    out.u[i][n] = u[i].t + adv - (divS - ie2 * gp + rho.v * G.d[i] / eps + ie2 * jxb) / rho.v;
  }

  double lap = 0.0, grad2 = 0.0, adv = 0.0, j2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    lap += th.dd[i][i];
    grad2 += th.d[i] * th.d[i];
    adv += u[i].v * th.d[i];
    j2 += J[i] * J[i];
  }
  const double heat = -th.v * p_t * div + eps * eps * SS + kap * lap + kapp * grad2 + zet * j2;
  out.theta[n] = th.t + adv - heat / rcv;

  // E = u x B - zeta J and its derivatives
  double dE[3][3];
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) {
      double v = -(zetp * th.d[a] * J[i] + zet * dJ[i][a]);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) v += levi(i, j, k) * (u[j].d[a] * B[k].v + u[j].v * B[k].d[a]);
      dE[i][a] = v;
    }
  for (int i = 0; i < 3; ++i) {
    double curlE = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) curlE += levi(i, j, k) * dE[k][j];
    out.B[i][n] = B[i].t - curlE;
  }
}

MmsRow run_mhd(int n1, int n3, const MmsOptions& opt, MmsTable& tab) {
  using E = MhdExact;
  const Grid g = Grid::strip2(n1, n3);
  const double eps = opt.mhd_eps;
  MhdConfig cfg = MhdConfig::defaults(g, eps);
  cfg.G = ScalarField::sample(g, [](double x1, double x2, double x3) { return E::G(x1, x2, x3); });
  cfg.theta_B_bottom =
      ScalarField::sample(g.horizontal(), [eps](double x1, double, double) { return 0.05 * std::cos(pi * x1) / eps; });
  cfg.theta_B_top = ScalarField(g.horizontal());

  MhdFields f;
  f.rho = sample_sep(g, E::one, E::rho_1);
  f.th = sample_sep(g, E::th_0, E::th_1);
  f.u = {sample_sep(g, E::zero, E::u1_1), sample_sep(g, E::zero, E::u2_1), sample_sep(g, E::zero, E::u3_1)};
  f.B = {sample_sep(g, E::zero, E::B1_1), sample_sep(g, E::zero, E::B2_1), sample_sep(g, E::one, E::B3_1)};
  f.G.resize(g.size());
  for (int k = 0; k < n3; ++k)
    for (int i = 0; i < n1; ++i) f.G[g.index(i, 0, k)] = make_jet(E::G, g.x1(i), 0.0, g.x3(k), false);

  const thermo::Eos eos(cfg.gas);
  const thermo::GasParams gas = cfg.gas;
  cfg.sources.forcing = [&f, g, eps, eos, gas](double t) {
    PrimRhs r{ScalarField(g), VectorField(g), ScalarField(g), VectorField(g)};
    for (std::size_t n = 0; n < g.size(); ++n) mhd_source(f, n, t, eps, eos, gas, r);
    remove_mean(r.rho);
    return r;
  };

  auto exact = [&](double t) {
    PrimitiveState s;
    s.eps = eps;
    s.t = t;
    s.rho = field_at(f.rho, g, t);
    s.theta = field_at(f.th, g, t);
    s.u = VectorField(field_at(f.u[0], g, t), field_at(f.u[1], g, t), field_at(f.u[2], g, t));
    s.B = VectorField(field_at(f.B[0], g, t), field_at(f.B[1], g, t), field_at(f.B[2], g, t));
    return s;
  };

  PrimitiveState s = exact(0.0);
  {
    const MhdSolver probe(cfg);
    s.B = probe.project_B(s.B);
    probe.apply_bc(s);
    const double dt0 = 0.8 * probe.stable_dt(s);
    const int steps = std::max(1, static_cast<int>(std::ceil(opt.mhd_t_end / dt0)));
    cfg.dt = opt.mhd_t_end / steps;
  }
  cfg.t_end = opt.mhd_t_end;
  const int steps = static_cast<int>(std::lround(opt.mhd_t_end / cfg.dt));
  const MhdSolver solver(cfg);
  const MhdDiagnostics d0 = mhd_diagnostics(s, cfg);
  tab.min_production = std::min(tab.min_production, d0.min_production_term);
  for (int k = 0; k < steps; ++k) {
    s = solver.step(s);
    const MhdDiagnostics d = mhd_diagnostics(s, cfg);
    tab.mass_drift = std::max(tab.mass_drift, std::abs(d.mass - d0.mass) / d0.mass);
    tab.max_div_B = std::max(tab.max_div_B, d.max_div_b);
    tab.min_production = std::min(tab.min_production, d.min_production_term);
  }
  const PrimitiveState ex = exact(s.t);
  double err = l2_sq(s.rho, ex.rho) + l2_sq(s.theta, ex.theta);
  for (int c = 0; c < 3; ++c) err += l2_sq(s.u[c], ex.u[c]) + l2_sq(s.B[c], ex.B[c]);
  return {n1, n3, cfg.dt, steps, std::sqrt(err)};
}

template <class Run>
MmsTable table(const std::string& name, const MmsOptions& opt, Run run) {
  opt.validate();
  MmsTable tab;
  tab.solver = name;
  for (int n3 : opt.n3_list) tab.vertical.push_back(run(opt.n1, n3, opt, tab));
  for (int n1 : opt.horizontal_n1) tab.horizontal.push_back(run(n1, opt.horizontal_n3, opt, tab));
  finish(tab, opt);
  return tab;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

void MmsOptions::validate() const {
  if (n3_list.size() < 2) throw ConfigError("mms needs at least two vertical resolutions");
  for (std::size_t i = 0; i < n3_list.size(); ++i) {
    if (n3_list[i] < 9) throw ConfigError("mms n3 values must be >= 9");
    if (i > 0 && n3_list[i] <= n3_list[i - 1]) throw ConfigError("mms n3 values must increase");
  }
  if (n1 < 8 || n1 % 2) throw ConfigError("mms n1 must be even and >= 8");
  for (int m : horizontal_n1)
    if (m < 8 || m % 2) throw ConfigError("mms horizontal sizes must be even and >= 8");
  if (horizontal_n3 < 9) throw ConfigError("mms horizontal_n3 must be >= 9");
  if (!(obm_t_end > 0.0 && mhd_t_end > 0.0)) throw ConfigError("mms end times must be positive");
  if (!(obm_dt_per_h > 0.0)) throw ConfigError("mms obm_dt_per_h must be positive");
  if (!(mhd_eps > 0.0 && mhd_eps <= 1.0)) throw ConfigError("mms eps must lie in (0, 1]");
  if (!(order_lo < order_hi)) throw ConfigError("mms order window is empty");
  if (!(floor_tol > 0.0)) throw ConfigError("mms floor_tol must be positive");
}

MmsTable mms_obm(const MmsOptions& opt) { return table("obm", opt, run_obm); }

MmsTable mms_mhd(const MmsOptions& opt) { return table("mhd", opt, run_mhd); }

std::string mms_csv(const std::vector<MmsTable>& tables) {
  std::ostringstream os;
  os << "solver,sweep,n1,n3,dt,steps,error,order\n";
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.vertical.size(); ++i) {
      const MmsRow& r = t.vertical[i];
      os << t.solver << ",vertical," << r.n1 << ',' << r.n3 << ',' << num(r.dt) << ',' << r.steps << ',' << num(r.error)
         << ',' << (i > 0 ? num(t.orders[i - 1]) : std::string("")) << '\n';
    }
    for (const MmsRow& r : t.horizontal)
      os << t.solver << ",horizontal," << r.n1 << ',' << r.n3 << ',' << num(r.dt) << ',' << r.steps << ','
         << num(r.error) << ",\n";
  }
  return os.str();
}

std::string mms_summary(const std::vector<MmsTable>& tables) {
  std::ostringstream os;
  char line[160];
  for (const auto& t : tables) {
    os << t.solver << " vertical refinement\n";
    std::snprintf(line, sizeof line, "  %6s %6s %12s %8s %12s %8s\n", "n1", "n3", "dt", "steps", "error", "order");
    os << line;
    for (std::size_t i = 0; i < t.vertical.size(); ++i) {
      const MmsRow& r = t.vertical[i];
      char ord[16] = "-";
      if (i > 0) std::snprintf(ord, sizeof ord, "%.3f", t.orders[i - 1]);
      std::snprintf(line, sizeof line, "  %6d %6d %12.4e %8d %12.4e %8s\n", r.n1, r.n3, r.dt, r.steps, r.error, ord);
      os << line;
    }
    os << t.solver << " horizontal refinement\n";
    for (const MmsRow& r : t.horizontal) {
      std::snprintf(line, sizeof line, "  %6d %6d %12.4e %8d %12.4e\n", r.n1, r.n3, r.dt, r.steps, r.error);
      os << line;
    }
    std::snprintf(line, sizeof line, "  orders in window: %s, horizontal spread %.3e (%s)\n", t.orders_ok ? "yes" : "no",
                  t.horizontal_spread, t.floor_ok ? "at floor" : "above floor");
    os << line;
  }
  return os.str();
}

}  // namespace obmhd
