#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "obmhd/commands.hpp"
#include "obmhd/config.hpp"
#include "obmhd/error.hpp"
#include "obmhd/snapshot.hpp"

using namespace obmhd;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("obmhd_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config defaults and overrides") {
  const RunConfig d = parse_config("");
  CHECK(d.gas.p_inf == 1.0);
  CHECK(d.study.eps_list == std::vector<double>{0.2, 0.1, 0.05});
  CHECK(d.study.n1 == 64);
  CHECK(d.study.n3 == 65);
  CHECK(d.study.t_end == 0.25);

  const RunConfig c = parse_config(
      "# comment\n[thermo]\np_inf = 2   # trailing\nbeta=4\n\n[study]\neps_list = 0.3, 0.1\nprofile = random\nseed = 42\n"
      "[grid]\ngeometry = strip3\nn1 = 16\nn2 = 16\nn3 = 9\n");
  CHECK(c.gas.p_inf == 2.0);
  CHECK(c.gas.beta == 4.0);
  CHECK(c.study.gas.p_inf == 2.0);
  CHECK(c.study.eps_list == std::vector<double>{0.3, 0.1});
  CHECK(c.study.profiles.kind == "random");
  CHECK(c.study.profiles.seed == 42);
  CHECK(c.obm_config().grid == Grid::strip3(16, 16, 9));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("[thermo]\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[nowhere]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[thermo]\np_inf = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p_inf = 1\n"), ConfigError);
  CHECK_THROWS(parse_config("[thermo]\na = -1\n"));
  CHECK_THROWS(parse_config("[thermo]\na = -2.5\n"));
  CHECK_THROWS_AS(parse_config("[study]\neps_list = 0.1, 0.2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[grid]\nn1 = 12\n"), std::exception);
  CHECK_THROWS_AS(load_config("/nonexistent/obmhd.ini"), ConfigError);
  try {
    parse_config("[thermo]\n\nwhat = 3\n");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("thermo checks") {
  const RunConfig d = parse_config("");
  for (const auto& c : thermo_checks(d, 1)) CHECK_MESSAGE(c.pass, c.name);
  const RunConfig t = parse_config("[thermo]\nentropy_slope_factor = 1.02\n");
  bool gibbs_failed = false;
  for (const auto& c : thermo_checks(t, 1))
    if (c.name.rfind("gibbs", 0) == 0 && !c.pass) gibbs_failed = true;
  CHECK(gibbs_failed);

  std::ostringstream out;
  CommandOptions opt{scratch("thermo").string(), std::nullopt, true};
  CHECK(cmd_thermo_check(d, opt, out) == kExitPass);
  CHECK(cmd_thermo_check(t, opt, out) == kExitCheckFailed);
  CHECK(out.str().empty());
}

TEST_CASE("run-obm with zero data writes zero rows") {
  const RunConfig c = parse_config("[study]\nprofile = zero\n[obm]\nt_end = 0.02\n");
  const fs::path dir = scratch("obm_zero");
  std::ostringstream out;
  CHECK(cmd_run_obm(c, {dir.string(), std::nullopt, true}, out) == kExitPass);
  std::istringstream csv(slurp(dir / "obm.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "t,mean_theta1,chi,kinetic_energy,magnetic_energy,continuity_residual");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    while (std::getline(fields, cell, ',')) CHECK(std::stod(cell) == 0.0);
  }
  CHECK(rows == 21);
}

TEST_CASE("outputs are deterministic and snapshots round trip") {
  const RunConfig c = parse_config("[obm]\nt_end = 0.02\n[mhd]\nn1 = 16\nn3 = 17\nt_end = 0.01\n[study]\nprofile = random\nseed = 7\n");
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  std::ostringstream out;
  for (const fs::path& d : {a, b}) {
    CHECK(cmd_run_obm(c, {d.string(), std::nullopt, true}, out) == kExitPass);
    CHECK(cmd_run_mhd(c, {d.string(), std::nullopt, true}, out) == kExitPass);
  }
  CHECK(slurp(a / "obm.csv") == slurp(b / "obm.csv"));
  CHECK(slurp(a / "mhd.csv") == slurp(b / "mhd.csv"));
  CHECK(slurp(a / "mhd_final.snap") == slurp(b / "mhd_final.snap"));

  const Snapshot s = read_snapshot((a / "mhd_final.snap").string());
  const fs::path copy = a / "copy.snap";
  write_snapshot(copy.string(), s);
  CHECK(slurp(copy) == slurp(a / "mhd_final.snap"));
  CHECK(s.get("rho").grid() == Grid::strip2(16, 17));

  const fs::path e = scratch("det_seed");
  CHECK(cmd_run_obm(c, {e.string(), std::uint64_t{8}, true}, out) == kExitPass);
  CHECK(slurp(e / "obm.csv") != slurp(a / "obm.csv"));
}

TEST_CASE("run-mhd reports numerical failure and keeps the last state") {
  const RunConfig c = parse_config("[mhd]\nn1 = 16\nn3 = 17\ndt = 0.5\n");
  const fs::path dir = scratch("mhd_fail");
  std::ostringstream out;
  CHECK(cmd_run_mhd(c, {dir.string(), std::nullopt, true}, out) == kExitNumerical);
  CHECK(fs::exists(dir / "mhd_failed.snap"));
  const Snapshot s = read_snapshot((dir / "mhd_failed.snap").string());
  CHECK(s.get("theta").max_abs() > 0.0);
}

TEST_CASE("converge on a small study") {
  const RunConfig c = parse_config("[study]\nn1 = 16\nn3 = 17\nt_end = 0.05\n");
  const fs::path dir = scratch("converge");
  std::ostringstream out;
  CHECK(cmd_converge(c, {dir.string(), std::nullopt, false}, out) == kExitPass);
  CHECK(out.str().find("sup") != std::string::npos);
  CHECK(fs::exists(dir / "study.csv"));
  CHECK(fs::exists(dir / "study_summary.txt"));
  CHECK(slurp(dir / "study.csv").rfind("eps,dt,steps,sup_E", 0) == 0);
}
