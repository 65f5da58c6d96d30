#pragma once

// Modified Oberbeck-Boussinesq-MHD limit system: horizontal velocity U
// and vertical field deviation b1 on the horizontal torus, temperature
// deviation theta1 on the strip, with the non-local mean-temperature
// term in the heat equation.

#include <complex>
#include <functional>
#include <vector>

#include "obmhd/fields.hpp"
#include "obmhd/thermo.hpp"

namespace obmhd {

/// Optional manufactured forcing added to the right-hand sides.
struct ObmSources {
  std::function<ScalarField(double)> heat;        // strip field
  std::function<ScalarField(double)> induction;   // torus field
  std::function<VectorField(double)> momentum;    // torus field
};

struct ObmConfig {
  thermo::GasParams gas;
  thermo::ReferenceState ref;
  Grid grid;                   // strip grid carrying theta1
  ScalarField G;               // gravitational potential on grid, mean free
  ScalarField theta_B_bottom;  // wall temperature deviations on grid.horizontal()
  ScalarField theta_B_top;
  double dt = 1e-3;
  double t_end = 0.1;
  ObmSources sources;

  /// G = 1/2 - x3, homogeneous wall data.
  static ObmConfig defaults(const Grid& grid);

  /// Throws ConfigError on inconsistent sizes, dt <= 0 or mean(G) != 0.
  void validate() const;
};

struct ObmState {
  VectorField U;       // torus, third component zero
  ScalarField theta1;  // strip
  ScalarField b1;      // torus
  double chi = 0.0;
  double t = 0.0;
};

/// Builds a state from initial profiles: walls set to theta_B, U
/// projected (and zeroed on Strip2), chi evaluated.
ObmState make_obm_state(const ObmConfig& cfg, ScalarField theta1, ScalarField b1, VectorField U);

/// A = b_bar * b1.
ScalarField magnetic_potential(const ScalarField& b1, const ObmConfig& cfg);

/// First-order density from the magnetic Boussinesq relation, mean free.
ScalarField boussinesq_rho(const ScalarField& theta1, const ScalarField& b1, const ObmConfig& cfg);

/// -div(b1 U) + zeta(theta_bar) lap_h b1.
ScalarField induction_rhs(const ScalarField& b1, const VectorField& U, const ObmConfig& cfg);

struct HeatRhs {
  ScalarField rhs;
  double mean_drift;
};

/// Full right side of the theta1 equation at state.t, including the
/// non-local term, and the closed mean-temperature drift.
HeatRhs heat_rhs(const ObmState& state, const ObmConfig& cfg);

/// Leray-projected right side of the U equation.
VectorField momentum_rhs(const ObmState& state, const ObmConfig& cfg);

struct ObmPressure {
  ScalarField leray;     // rho_bar times the projection potential
  ScalarField magnetic;  // b1^2 / 2
};

ObmPressure obm_pressure(const ObmState& state, const ObmConfig& cfg);

double obm_kinetic_energy(const ObmState& state, const ObmConfig& cfg);
double obm_magnetic_energy(const ObmState& state, const ObmConfig& cfg);

/// Crank-Nicolson for the diffusion, Heun for everything else.
class ObmSolver {
public:
  explicit ObmSolver(ObmConfig cfg);

  const ObmConfig& config() const { return cfg_; }

  /// Throws NumericalError on a CFL violation or non-finite values.
  ObmState step(const ObmState& s);

  /// max |(rho1^{n+1} - rho1^n)/dt + div(rho1 U)| of the last step.
  double continuity_residual() const { return continuity_; }

private:
  struct Tendency {
    VectorField U;
    ScalarField theta1;
    ScalarField b1;
  };

  Tendency explicit_part(const ObmState& s) const;
  ScalarField solve_heat(const ScalarField& rhs) const;

  ObmConfig cfg_;
  double kappa_ = 0.0;
  double zeta_ = 0.0;
  double nu_ = 0.0;
  double heat_diff_ = 0.0;
  std::vector<std::complex<double>> wall_bottom_;
  std::vector<std::complex<double>> wall_top_;
  double continuity_ = 0.0;
};

ObmState step_obm(const ObmState& state, const ObmConfig& cfg);

}  // namespace obmhd
