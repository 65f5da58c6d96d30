#pragma once

// Manufactured-solution convergence tables for the limit and primitive
// solvers. Exact fields are fixed trigonometric profiles with the wall
// parities each solver assumes; forcing is evaluated from the continuous
// operators with dual-number derivatives.

#include <string>
#include <vector>

namespace obmhd {

struct MmsOptions {
  std::vector<int> n3_list{33, 65, 129};
  int n1 = 16;                          // horizontal size for the vertical sweep
  std::vector<int> horizontal_n1{16, 32};
  int horizontal_n3 = 33;
  double obm_t_end = 0.1;
  double obm_dt_per_h = 0.25;           // dt = obm_dt_per_h * h3
  double mhd_t_end = 0.02;
  double mhd_eps = 0.5;
  double order_lo = 1.8;
  double order_hi = 2.2;
  double floor_tol = 0.05;              // relative spread allowed across horizontal_n1

  void validate() const;
};

struct MmsRow {
  int n1 = 0;
  int n3 = 0;
  double dt = 0.0;
  int steps = 0;
  double error = 0.0;  // combined L2 error of all evolved fields at t_end
};

struct MmsTable {
  std::string solver;
  std::vector<MmsRow> vertical;
  std::vector<double> orders;
  std::vector<MmsRow> horizontal;
  double horizontal_spread = 0.0;  // (max - min) / min over the horizontal sweep
  bool orders_ok = false;
  bool floor_ok = false;
  // conservation over every run in the table
  double mass_drift = 0.0;
  double b1_mean_drift = 0.0;
  double max_div_U = 0.0;
  double max_div_B = 0.0;
  double min_production = 0.0;
};

MmsTable mms_obm(const MmsOptions& opt);
MmsTable mms_mhd(const MmsOptions& opt);

std::string mms_csv(const std::vector<MmsTable>& tables);
std::string mms_summary(const std::vector<MmsTable>& tables);

}  // namespace obmhd
