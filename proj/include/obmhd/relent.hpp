#pragma once

// Scaled relative energy between a primitive state and smooth test
// functions, its essential / residual split, coercivity constants, and
// well-prepared initial data for the low Mach number limit.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "obmhd/fields.hpp"
#include "obmhd/mhd.hpp"
#include "obmhd/obm.hpp"
#include "obmhd/thermo.hpp"

namespace obmhd {

using Vec3 = std::array<double, 3>;

struct StatePoint {
  double rho;
  double theta;
  Vec3 u{};
  Vec3 B{};
};

struct TestPoint {
  double r;
  double Theta;
  Vec3 U{};
  Vec3 H{};
};

/// rho e - Theta (rho s - r s(r,Theta)) - (e - Theta s + p/r)(r,Theta) (rho - r) - r e(r,Theta),
/// the thermal part of the relative energy without the eps^-2 factor.
double thermal_bregman(double rho, double theta, double r, double Theta, const thermo::Eos& eos);

/// Pointwise scaled relative energy.
double rel_energy_density(const StatePoint& s, const TestPoint& t, double eps, const thermo::Eos& eos);

/// Test functions (r, Theta, U, H) on the primitive grid.
struct TestQuadruple {
  ScalarField r;
  ScalarField Theta;
  VectorField U;
  VectorField H;

  /// Checks positivity and the boundary compatibility conditions: Theta
  /// equals theta_bar + eps theta_B on the walls, U3 = H1 = H2 = 0 there,
  /// and the discrete div H is below tol. Throws DomainError otherwise.
  void validate(const MhdConfig& cfg, double eps, double tol = 1e-8) const;
};

/// Relative-energy density at every node.
ScalarField rel_energy_field(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg);

struct EnergySplit {
  ScalarField indicator;  // 1 on the essential set, 0 elsewhere
  double total;
  double ess;
  double res;
};

/// Essential set: rho_bar/2 <= rho <= 2 rho_bar and theta_bar/2 <= theta <= 2 theta_bar.
EnergySplit ess_res_split(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg);

/// Ranges the test functions are assumed to take.
struct TestBox {
  double r_lo = 0.75, r_hi = 1.5;          // in units of rho_bar
  double Theta_lo = 0.75, Theta_hi = 1.5;  // in units of theta_bar
  double U_max = 1.0;
  double H_max = 2.0;
};

struct CoercivityConstants {
  double c_thermal;  // H_th >= c_thermal (|rho-r|^2 + |theta-Theta|^2) on the essential box
  double c_ess;
  double c_res;
};

/// Constants derived by brute-force minimisation over the essential box
/// and a logarithmic sampling of the residual region; cached per
/// parameter set.
CoercivityConstants coercivity_constants(const thermo::GasParams& gas, const thermo::ReferenceState& ref,
                                         const TestBox& box = {});

/// Right-hand sides of the two coercivity bounds at a single point.
double ess_lower_bound(const StatePoint& s, const TestPoint& t, double eps, double c_ess);
double res_lower_bound(const StatePoint& s, double eps, double c_res, const thermo::Eos& eos);

bool in_essential_set(double rho, double theta, const thermo::ReferenceState& ref);

struct CoercivityReport {
  std::size_t ess_points = 0;
  std::size_t res_points = 0;
  double min_ess_margin = 0.0;  // min of E - bound over essential points
  double min_res_margin = 0.0;
  double min_energy = 0.0;
  bool holds = true;
};

/// Pointwise check of both coercivity inequalities on a grid state.
CoercivityReport coercivity_check(const PrimitiveState& s, const TestQuadruple& t, const MhdConfig& cfg,
                                  const CoercivityConstants& c);

/// Same check on a list of point pairs.
CoercivityReport coercivity_check(const std::vector<std::pair<StatePoint, TestPoint>>& points, double eps,
                                  const thermo::ReferenceState& ref, const thermo::Eos& eos,
                                  const CoercivityConstants& c);

struct RelEnergyReport {
  std::vector<double> times;
  std::vector<double> E_total;
  std::vector<double> E_ess;
  std::vector<double> E_res;
  std::vector<double> dissipation;
  double sup_E = 0.0;

  void append(double t, const EnergySplit& split, double diss);
};

/// Initial profiles of the limit system.
struct Profiles {
  ScalarField theta1;  // strip
  ScalarField b1;      // horizontal torus
  VectorField U;       // horizontal torus, divergence free
};

/// The strip profile theta_B-interpolation + sin(pi x3)(a + b cos(pi x1)),
/// b1 = c cos(pi x1), U = 0.
Profiles default_profiles(const Grid& grid, const ScalarField& theta_B_bottom, const ScalarField& theta_B_top,
                          double a = 1.0, double b = 0.5, double c = 0.5);

/// Primitive state (rho_bar + eps rho1, U, theta_bar + eps theta1, B_bar + eps b1 e3)
/// and the matching limit state. Throws DomainError if U is not divergence free.
std::pair<PrimitiveState, ObmState> well_prepared_data(const Profiles& profiles, double eps, const ObmConfig& obm_cfg,
                                                       const MhdConfig& mhd_cfg);

/// Test quadruple built from a limit state, broadcast to the primitive grid.
TestQuadruple test_from_obm(const ObmState& s, double eps, const ObmConfig& obm_cfg);

/// |d_rho p grad rho1 + d_theta p grad theta1 - rho_bar grad G + curl B1 x B_bar|, max norm.
double compatibility_residual(const ObmState& s, const ObmConfig& cfg);

}  // namespace obmhd
