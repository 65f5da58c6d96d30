#include "obmhd/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "obmhd/error.hpp"

namespace obmhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& v) {
  T out{};
  const char* first = v.data();
  const char* last = v.data() + v.size();
  if (!v.empty() && v[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) throw ConfigError("not a number: '" + v + "'");
  return out;
}

template <class T>
std::vector<T> parse_list(const std::string& v) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<T>(trim(item)));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

using Setter = std::function<void(const std::string&)>;
using Table = std::map<std::string, std::map<std::string, Setter>>;

Setter num(double& x) {
  return [&x](const std::string& v) { x = parse_number<double>(v); };
}
Setter integer(int& x) {
  return [&x](const std::string& v) { x = parse_number<int>(v); };
}
Setter text(std::string& x) {
  return [&x](const std::string& v) { x = v; };
}

Table make_table(RunConfig& c) {
  Table t;
  auto& th = t["thermo"];
  th["p_inf"] = num(c.gas.p_inf);
  th["a"] = num(c.gas.a);
  th["s0"] = num(c.gas.s0);
  th["mu_low"] = num(c.gas.mu_low);
  th["mu_high"] = num(c.gas.mu_high);
  th["eta_high"] = num(c.gas.eta_high);
  th["kappa_low"] = num(c.gas.kappa_low);
  th["kappa_high"] = num(c.gas.kappa_high);
  th["beta"] = num(c.gas.beta);
  th["zeta_low"] = num(c.gas.zeta_low);
  th["zeta_high"] = num(c.gas.zeta_high);
  th["rho_bar"] = num(c.ref.rho_bar);
  th["theta_bar"] = num(c.ref.theta_bar);
  th["b_bar"] = num(c.ref.b_bar);
  th["entropy_slope_factor"] = num(c.entropy_slope_factor);

  auto& gr = t["grid"];
  gr["geometry"] = text(c.grid.geometry);
  gr["n1"] = integer(c.grid.n1);
  gr["n2"] = integer(c.grid.n2);
  gr["n3"] = integer(c.grid.n3);

  auto& ob = t["obm"];
  ob["dt"] = num(c.obm.dt);
  ob["t_end"] = num(c.obm.t_end);
  ob["theta_B_bottom"] = num(c.obm.theta_B_bottom);
  ob["theta_B_top"] = num(c.obm.theta_B_top);
  ob["theta_B_amp"] = num(c.obm.theta_B_amp);
  ob["G_amp"] = num(c.obm.G_amp);
  ob["u_amp"] = num(c.obm.u_amp);

  auto& mh = t["mhd"];
  mh["eps"] = num(c.mhd.eps);
  mh["n1"] = integer(c.mhd.n1);
  mh["n3"] = integer(c.mhd.n3);
  mh["dt"] = num(c.mhd.dt);
  mh["t_end"] = num(c.mhd.t_end);
  mh["cfl"] = num(c.mhd.cfl);
  mh["theta_B_bottom"] = num(c.mhd.theta_B_bottom);
  mh["theta_B_top"] = num(c.mhd.theta_B_top);
  mh["theta_B_amp"] = num(c.mhd.theta_B_amp);
  mh["G_amp"] = num(c.mhd.G_amp);
  mh["initial"] = text(c.mhd.initial);

  auto& st = t["study"];
  st["eps_list"] = [&c](const std::string& v) { c.study.eps_list = parse_list<double>(v); };
  st["n1"] = integer(c.study.n1);
  st["n3"] = integer(c.study.n3);
  st["t_end"] = num(c.study.t_end);
  st["cadence"] = integer(c.study.cadence);
  st["safety"] = num(c.study.safety);
  st["theta_B_bottom"] = num(c.study.theta_B_bottom);
  st["theta_B_top"] = num(c.study.theta_B_top);
  st["gravity"] = num(c.study.gravity);
  st["profile"] = text(c.study.profiles.kind);
  st["profile_a"] = num(c.study.profiles.a);
  st["profile_b"] = num(c.study.profiles.b);
  st["profile_c"] = num(c.study.profiles.c);
  st["seed"] = [&c](const std::string& v) { c.study.profiles.seed = parse_number<std::uint64_t>(v); };
  st["monitor_ceiling"] = num(c.study.monitor_ceiling);
  st["mms_n3"] = [&c](const std::string& v) { c.mms.n3_list = parse_list<int>(v); };
  st["mms_n1"] = integer(c.mms.n1);
  st["mms_horizontal_n1"] = [&c](const std::string& v) { c.mms.horizontal_n1 = parse_list<int>(v); };
  st["mms_horizontal_n3"] = integer(c.mms.horizontal_n3);
  st["mms_obm_t_end"] = num(c.mms.obm_t_end);
  st["mms_obm_dt_per_h"] = num(c.mms.obm_dt_per_h);
  st["mms_mhd_t_end"] = num(c.mms.mhd_t_end);
  st["mms_eps"] = num(c.mms.mhd_eps);

  auto& out = t["output"];
  out["dir"] = text(c.output.dir);
  out["csv_every"] = integer(c.output.csv_every);
  out["snapshot_every"] = integer(c.output.snapshot_every);
  return t;
}

ScalarField wall(const Grid& g, double mean_value, double amp) {
  return ScalarField::sample(g.horizontal(), [=](double x1, double, double) {
    return mean_value + amp * std::cos(std::numbers::pi * x1);
  });
}

ScalarField gravity(const Grid& g, double amp) {
  const double pi = std::numbers::pi;
  return ScalarField::sample(g, [=](double x1, double, double x3) {
    return 0.5 - x3 + amp * std::cos(pi * x1) * std::cos(pi * x3);
  });
}

}  // namespace

Grid GridSection::make() const {
  if (n1 < 4 || n1 % 2) throw ConfigError("grid n1 must be even and >= 4");
  if (n3 < 5) throw ConfigError("grid n3 must be >= 5");
  if (geometry == "strip2") {
    if (n2 != 1) throw ConfigError("strip2 grids need n2 = 1");
    return Grid::strip2(n1, n3);
  }
  if (geometry == "strip3") {
    if (n2 < 4 || n2 % 2) throw ConfigError("grid n2 must be even and >= 4");
    return Grid::strip3(n1, n2, n3);
  }
  throw ConfigError("unknown geometry '" + geometry + "'");
}

thermo::Eos RunConfig::eos() const {
  if (entropy_slope_factor == 1.0) return thermo::Eos(gas);
  auto base = std::make_shared<thermo::PowerLawStructural>(gas.p_inf, gas.s0);
  return thermo::Eos(gas, std::make_shared<thermo::TamperedEntropy>(base, entropy_slope_factor));
}

ObmConfig RunConfig::obm_config() const {
  const Grid g = grid.make();
  ObmConfig c = ObmConfig::defaults(g);
  c.gas = gas;
  c.ref = ref;
  c.dt = obm.dt;
  c.t_end = obm.t_end;
  c.G = gravity(g, obm.G_amp);
  c.theta_B_bottom = wall(g, obm.theta_B_bottom, obm.theta_B_amp);
  c.theta_B_top = wall(g, obm.theta_B_top, 0.0);
  return c;
}

MhdConfig RunConfig::mhd_config() const {
  const Grid g = Grid::strip2(mhd.n1 > 0 ? mhd.n1 : grid.n1, mhd.n3 > 0 ? mhd.n3 : grid.n3);
  MhdConfig c = MhdConfig::defaults(g, mhd.eps);
  c.gas = gas;
  c.ref = ref;
  c.dt = mhd.dt;
  c.t_end = mhd.t_end;
  c.cfl = mhd.cfl;
  c.G = gravity(g, mhd.G_amp);
  c.theta_B_bottom = wall(g, mhd.theta_B_bottom, mhd.theta_B_amp);
  c.theta_B_top = wall(g, mhd.theta_B_top, 0.0);
  return c;
}

void RunConfig::validate() const {
  gas.validate();
  ref.validate();
  if (!std::isfinite(entropy_slope_factor) || entropy_slope_factor <= 0.0)
    throw ConfigError("entropy_slope_factor must be positive");
  obm_config().validate();
  if (obm.t_end < obm.dt) throw ConfigError("obm t_end must be at least one step");
  if (!(mhd.eps > 0.0 && mhd.eps <= 1.0)) throw ConfigError("mhd eps must lie in (0, 1]");
  if (mhd.n1 < 0 || mhd.n3 < 0) throw ConfigError("mhd grid sizes must be nonnegative");
  if ((mhd.n1 > 0 && (mhd.n1 < 4 || mhd.n1 % 2)) || (mhd.n3 > 0 && mhd.n3 < 5))
    throw ConfigError("mhd n1 must be even and >= 4, n3 >= 5");
  if (!(mhd.cfl > 0.0 && mhd.cfl <= 1.0)) throw ConfigError("mhd cfl must lie in (0, 1]");
  mhd_config().validate();
  if (mhd.initial != "rest" && mhd.initial != "well_prepared")
    throw ConfigError("mhd initial must be rest or well_prepared");
  study.validate();
  mms.validate();
  if (output.dir.empty()) throw ConfigError("output dir is empty");
  if (output.csv_every < 1) throw ConfigError("csv_every must be >= 1");
  if (output.snapshot_every < 0) throw ConfigError("snapshot_every must be >= 0");
}

RunConfig parse_config(const std::string& input) {
  RunConfig c;
  Table table = make_table(c);
  std::istringstream in(input);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!table.count(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto& keys = table.at(section);
    const auto it = keys.find(key);
    if (it == keys.end()) throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
    try {
      it->second(value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  c.study.gas = c.gas;
  c.study.ref = c.ref;
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace obmhd
