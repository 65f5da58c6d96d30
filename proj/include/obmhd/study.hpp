#pragma once

// Epsilon sweep comparing primitive solutions against the limit solution
// through the relative energy and the L1 / L2 deviation norms.

#include <cstdint>
#include <string>
#include <vector>

#include "obmhd/relent.hpp"

namespace obmhd {

struct ProfileSpec {
  std::string kind = "smooth";  // zero | smooth | random
  double a = 1.0;               // mean part of the sin(pi x3) temperature bump
  double b = 0.5;               // cos(pi x1) part of the bump
  double c = 0.5;               // b1 amplitude
  std::uint64_t seed = 0;       // used by "random"
};

/// Profiles on a strip grid; "random" adds three seeded horizontal modes
/// to the temperature bump and to b1.
Profiles make_profiles(const ProfileSpec& spec, const Grid& grid, const ScalarField& theta_B_bottom,
                       const ScalarField& theta_B_top);

struct StudyConfig {
  thermo::GasParams gas;
  thermo::ReferenceState ref;
  std::vector<double> eps_list{0.2, 0.1, 0.05};
  int n1 = 64;
  int n3 = 65;
  double t_end = 0.25;
  int cadence = 10;
  double safety = 0.8;  // fraction of the stable step at t = 0
  double theta_B_bottom = 0.5;
  double theta_B_top = 0.0;
  double gravity = 1.0;  // G = gravity (1/2 - x3)
  ProfileSpec profiles;
  double monitor_ceiling = 1e3;

  void validate() const;
};

struct Deviations {
  double rho = 0.0;
  double theta = 0.0;
  double B = 0.0;
  double momentum = 0.0;  // sqrt(rho) u against sqrt(rho_bar) U
};

struct StudyRow {
  double eps = 0.0;
  double dt = 0.0;
  int steps = 0;
  double t_reached = 0.0;
  double sup_E = 0.0;
  double sup_E_ess = 0.0;
  double sup_E_res = 0.0;
  double E0 = 0.0;
  Deviations sup_L2;
  Deviations final_L2;
  Deviations sup_L1;
  Deviations final_L1;
  double mag_monitor = 0.0;  // sup_t eps^-2 |B - B_bar|_2^2
  double vel_monitor = 0.0;  // (int_0^t |u|_{W^{1,2}}^2)^{1/2}
  bool bounded = true;
  double mass_drift = 0.0;   // relative
  double b1_mean_drift = 0.0;
  double max_div_B = 0.0;
  double max_div_U = 0.0;
  double min_production = 0.0;
  std::string failure;       // empty on success
  RelEnergyReport energy;
};

struct StudyReport {
  std::vector<StudyRow> rows;
  std::vector<double> rates;  // log(E_i/E_{i+1}) / log(eps_i/eps_{i+1})
  bool sup_E_decreasing = false;
  bool deviations_decreasing = false;
  bool complete = false;
};

/// Runs each eps in turn. Solver failures are recorded in the row and
/// the sweep continues.
StudyReport convergence_study(const StudyConfig& cfg);

/// CSV with one row per eps; fixed header.
std::string study_csv(const StudyReport& report);

/// Plain-text summary table.
std::string study_summary(const StudyReport& report);

}  // namespace obmhd
