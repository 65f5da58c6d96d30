#pragma once

// Subcommand drivers. Return values are process exit codes: 0 pass,
// 1 check failure, 2 configuration error, 3 numerical failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "obmhd/config.hpp"

namespace obmhd {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitConfig = 2, kExitNumerical = 3 };

struct CommandOptions {
  std::string out_dir;                // overrides [output] dir when not empty
  std::optional<std::uint64_t> seed;  // overrides [study] seed
  bool quiet = false;
};

struct Check {
  std::string name;
  double value;
  double tol;
  bool pass;
};

/// Gibbs relation (closed form and finite differences), thermodynamic
/// stability, the drift and conduction identities, p_M = 2/3 rho e_M and,
/// for the default reference state, alpha = 3/8 and c_p = 15/8.
std::vector<Check> thermo_checks(const RunConfig& cfg, std::uint64_t seed, int points = 100);

int cmd_thermo_check(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out);
int cmd_run_obm(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out);
int cmd_run_mhd(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out);
int cmd_converge(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out);
int cmd_mms(const RunConfig& cfg, const CommandOptions& opt, std::ostream& out);

}  // namespace obmhd
