#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "obmhd/commands.hpp"
#include "obmhd/config.hpp"
#include "obmhd/error.hpp"

using namespace obmhd;

int main(int argc, char** argv) {
  CLI::App app{"Oberbeck-Boussinesq MHD low Mach number solver"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  app.add_option("--config", config_path, "configuration file (INI)")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--quiet", quiet, "suppress the summary");
  app.fallthrough();

  auto* thermo = app.add_subcommand("thermo-check", "thermodynamic consistency checks");
  auto* obm = app.add_subcommand("run-obm", "integrate the limit system");
  auto* mhd = app.add_subcommand("run-mhd", "integrate the compressible system");
  auto* conv = app.add_subcommand("converge", "low Mach number convergence study");
  auto* mms = app.add_subcommand("mms", "manufactured-solution order study");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = config_path.empty() ? parse_config("") : load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  const CommandOptions opt{out_dir, seed, quiet};
  try {
    if (thermo->parsed()) return cmd_thermo_check(cfg, opt, std::cout);
    if (obm->parsed()) return cmd_run_obm(cfg, opt, std::cout);
    if (mhd->parsed()) return cmd_run_mhd(cfg, opt, std::cout);
    if (conv->parsed()) return cmd_converge(cfg, opt, std::cout);
    if (mms->parsed()) return cmd_mms(cfg, opt, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DomainError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}
