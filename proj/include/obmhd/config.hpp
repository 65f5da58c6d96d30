#pragma once

// Plain-text run configuration: "key = value" lines under [section]
// headers, '#' starts a comment. Unknown sections or keys are errors.
//
// [thermo]  p_inf=1 a=0 s0=0 mu_low=0.05 mu_high=0.05 eta_high=0
//           kappa_low=0.05 kappa_high=0.05 beta=3 zeta_low=0.05
//           zeta_high=0.05 rho_bar=1 theta_bar=1 b_bar=1
//           entropy_slope_factor=1 (anything else breaks Gibbs' relation)
// [grid]    geometry=strip2 (strip2|strip3) n1=32 n2=1 n3=33
// [obm]     dt=1e-3 t_end=0.1 theta_B_bottom=0 theta_B_top=0
//           theta_B_amp=0 (cos(pi x1) part of the bottom data) G_amp=0
//           (cos(pi x1) cos(pi x3) part of G) u_amp=0 (initial U on strip3)
// [mhd]     eps=0.1 n1=0 n3=0 (0 = take [grid]) dt=0 (0 = CFL bound) t_end=0.1
//           cfl=0.4 theta_B_bottom=0 theta_B_top=0 theta_B_amp=0 G_amp=0
//           initial=well_prepared (rest|well_prepared)
// [study]   eps_list=0.2,0.1,0.05 n1=64 n3=65 t_end=0.25 cadence=10
//           safety=0.8 theta_B_bottom=0.5 theta_B_top=0 gravity=1 (G scale)
//           profile=smooth (zero|smooth|random) profile_a=1 profile_b=0.5
//           profile_c=0.5 seed=0 monitor_ceiling=1000
//           mms_n3=33,65,129 mms_n1=16 mms_horizontal_n1=16,32
//           mms_horizontal_n3=33 mms_obm_t_end=0.1 mms_obm_dt_per_h=0.25
//           mms_mhd_t_end=0.02 mms_eps=0.5
// [output]  dir=out csv_every=1 snapshot_every=0 (0 = final only)
//
// The profile keys of [study] also set the initial data of run-obm and
// run-mhd.

#include <cstdint>
#include <memory>
#include <string>

#include "obmhd/mhd.hpp"
#include "obmhd/mms.hpp"
#include "obmhd/obm.hpp"
#include "obmhd/study.hpp"
#include "obmhd/thermo.hpp"

namespace obmhd {

struct GridSection {
  std::string geometry = "strip2";
  int n1 = 32;
  int n2 = 1;
  int n3 = 33;

  Grid make() const;
};

struct ObmSection {
  double dt = 1e-3;
  double t_end = 0.1;
  double theta_B_bottom = 0.0;
  double theta_B_top = 0.0;
  double theta_B_amp = 0.0;
  double G_amp = 0.0;
  double u_amp = 0.0;
};

struct MhdSection {
  double eps = 0.1;
  int n1 = 0;
  int n3 = 0;
  double dt = 0.0;
  double t_end = 0.1;
  double cfl = 0.4;
  double theta_B_bottom = 0.0;
  double theta_B_top = 0.0;
  double theta_B_amp = 0.0;
  double G_amp = 0.0;
  std::string initial = "well_prepared";
};

struct OutputSection {
  std::string dir = "out";
  int csv_every = 1;
  int snapshot_every = 0;
};

struct RunConfig {
  thermo::GasParams gas;
  thermo::ReferenceState ref;
  double entropy_slope_factor = 1.0;
  GridSection grid;
  ObmSection obm;
  MhdSection mhd;
  StudyConfig study;
  MmsOptions mms;
  OutputSection output;

  /// Throws ConfigError on any value outside its module's preconditions.
  void validate() const;

  /// EOS including the entropy tamper factor.
  thermo::Eos eos() const;

  ObmConfig obm_config() const;
  MhdConfig mhd_config() const;
};

/// Parses and validates. Throws ConfigError with the offending line.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace obmhd
