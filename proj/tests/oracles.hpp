#pragma once

// Reference solutions used by the solver tests.

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

struct Heat1dParams {
  double kappa;     // conductivity at the reference temperature
  double rho_cp;    // rho_bar c_p
  double coupling;  // theta_bar alpha dp/dtheta
  int n = 1025;
};

/// Mean over [0,1] of the solution of
///   rho_cp T_t = kappa T_zz + coupling d<T>/dt,  T(0) = T(1) = 0,  T(0,z) = sin(pi z),
/// by second-order differences on a fine grid and classical RK4.
inline double heat1d_mean(const Heat1dParams& p, double t_end) {
  const int n = p.n;
  const double h = 1.0 / (n - 1);
  std::vector<double> T(n), k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (int i = 0; i < n; ++i) T[i] = std::sin(std::numbers::pi * i * h);
  auto trap_mean = [&](const std::vector<double>& f) {
    double s = 0.5 * (f[0] + f[n - 1]);
    for (int i = 1; i < n - 1; ++i) s += f[i];
    return s * h;
  };
  auto rhs = [&](const std::vector<double>& f, std::vector<double>& out) {
    out[0] = out[n - 1] = 0.0;
    for (int i = 1; i < n - 1; ++i) out[i] = (f[i - 1] - 2 * f[i] + f[i + 1]) / (h * h);
    const double lap_mean = trap_mean(out);
    const double drift = p.kappa * lap_mean / (p.rho_cp - p.coupling * (1.0 - h));
    for (int i = 1; i < n - 1; ++i) out[i] = (p.kappa * out[i] + p.coupling * drift) / p.rho_cp;
  };
  const double dt_max = 0.2 * h * h * p.rho_cp / p.kappa;
  const int steps = static_cast<int>(std::ceil(t_end / dt_max));
  const double dt = t_end / steps;
  for (int s = 0; s < steps; ++s) {
    rhs(T, k1);
    for (int i = 0; i < n; ++i) tmp[i] = T[i] + 0.5 * dt * k1[i];
    rhs(tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = T[i] + 0.5 * dt * k2[i];
    rhs(tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = T[i] + dt * k3[i];
    rhs(tmp, k4);
    for (int i = 0; i < n; ++i) T[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return trap_mean(T);
}

}  // namespace oracle
