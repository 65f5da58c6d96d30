#pragma once

// Scaled compressible Navier-Stokes-Fourier-MHD system on the 2.5D strip
// (fields independent of x2, vectors with three components), Ma = Al = eps,
// Fr = sqrt(eps). Temperature is evolved in internal-energy form.
//
// Wall treatment uses mirror parity: u1, u2, B3 are even about the walls,
// u3, B1, B2 odd (and vanish there); theta carries Dirichlet data.

#include <array>
#include <functional>
#include <memory>

#include "obmhd/fields.hpp"
#include "obmhd/thermo.hpp"

namespace obmhd {

using Tensor3 = std::array<std::array<double, 3>, 3>;

struct PrimitiveState {
  ScalarField rho;
  VectorField u;
  ScalarField theta;
  VectorField B;
  double eps = 0.1;
  double t = 0.0;
};

struct PrimRhs {
  ScalarField rho;
  VectorField u;
  ScalarField theta;
  VectorField B;
};

/// Manufactured forcing added to each equation (time derivative form).
struct MhdSources {
  std::function<PrimRhs(double)> forcing;
};

struct MhdConfig {
  thermo::GasParams gas;
  thermo::ReferenceState ref;
  Grid grid;                   // Strip2
  ScalarField G;
  ScalarField theta_B_bottom;  // wall deviations on grid.horizontal()
  ScalarField theta_B_top;
  double eps = 0.1;
  double dt = 0.0;             // 0 selects the CFL bound at every step
  double t_end = 0.1;
  double cfl = 0.4;
  MhdSources sources;

  static MhdConfig defaults(const Grid& grid, double eps);
  void validate() const;
};

/// Newtonian stress mu (grad u + grad u^T - 2/3 div u I) + eta div u I,
/// with grad_u[i][j] = d_j u_i.
Tensor3 viscous_stress(double theta, const Tensor3& grad_u, const thermo::GasParams& gas);

/// Rest state (rho_bar, 0, theta_bar, (0, 0, b_bar)) on the config grid.
PrimitiveState rest_state(const MhdConfig& cfg);

/// Time derivatives of all fields. Throws NumericalError(Positivity) for
/// rho <= 0 or theta <= 0 anywhere.
PrimRhs prim_rhs(const PrimitiveState& s, const MhdConfig& cfg);

/// d1 B1 + d3 B3 with the parity closures.
ScalarField div_B(const VectorField& B);

/// Pointwise entropy production terms eps^2 S:grad u / theta,
/// kappa |grad theta|^2 / theta^2 and zeta |curl B|^2 / theta.
struct EntropyProduction {
  ScalarField viscous;
  ScalarField thermal;
  ScalarField ohmic;
};

EntropyProduction entropy_production(const PrimitiveState& s, const MhdConfig& cfg);

/// Integral of 1/2 rho |u|^2 + eps^-2 (rho e + 1/2 |B|^2 - psi rho s).
double ballistic_energy(const PrimitiveState& s, const ScalarField& psi, const MhdConfig& cfg);

struct MhdDiagnostics {
  double t;
  double mass;
  double momentum;       // integral of rho u1
  double energy;         // kinetic + eps^-2 (internal + magnetic) - eps^-1 rho G
  double ballistic;
  double max_div_b;
  double min_rho;
  double min_theta;
  double entropy_production;
  double min_production_term;
};

MhdDiagnostics mhd_diagnostics(const PrimitiveState& s, const MhdConfig& cfg);

/// SSP-RK2 stepper with boundary enforcement and div B projection.
class MhdSolver {
public:
  explicit MhdSolver(MhdConfig cfg);
  ~MhdSolver();
  MhdSolver(MhdSolver&&) noexcept;
  MhdSolver& operator=(MhdSolver&&) noexcept;

  const MhdConfig& config() const { return cfg_; }

  /// Largest step permitted by the acoustic / magnetosonic and diffusive
  /// bounds at the given state.
  double stable_dt(const PrimitiveState& s) const;

  /// Advances by cfg.dt (or stable_dt when cfg.dt == 0). Throws
  /// NumericalError for CFL violations, positivity loss or NaN.
  PrimitiveState step(const PrimitiveState& s) const;

  /// Same with an explicit step; dt == 0 selects stable_dt.
  PrimitiveState step(const PrimitiveState& s, double dt) const;

  /// Removes the discrete divergence of B, keeping B1 = B2 = 0 on the walls
  /// and the horizontal mean untouched.
  VectorField project_B(const VectorField& B) const;

  /// Re-imposes the wall values of u3, theta, B1, B2.
  void apply_bc(PrimitiveState& s) const;

private:
  struct Projector;
  MhdConfig cfg_;
  std::unique_ptr<Projector> projector_;
};

PrimitiveState step_prim(const PrimitiveState& s, double dt, const MhdConfig& cfg);

}  // namespace obmhd
