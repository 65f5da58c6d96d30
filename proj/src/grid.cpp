#include "obmhd/grid.hpp"

#include "obmhd/error.hpp"

namespace obmhd {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Strip2: return "strip2";
    case Geometry::Strip3: return "strip3";
    case Geometry::Torus2: return "torus2";
  }
  return "unknown";
}

Geometry geometry_from_string(const std::string& name) {
  if (name == "strip2") return Geometry::Strip2;
  if (name == "strip3") return Geometry::Strip3;
  if (name == "torus2") return Geometry::Torus2;
  throw ConfigError("unknown geometry '" + name + "'");
}

Grid::Grid(Geometry geometry, int n1, int n2, int n3)
    : geometry_(geometry), n1_(n1), n2_(n2), n3_(n3) {
  if (!power_of_two(n1_)) throw DomainError("n1 must be a power of two");
  switch (geometry_) {
    case Geometry::Strip2:
      if (n2_ != 1) throw DomainError("strip2 grids have n2 = 1");
      if (n3_ < 3) throw DomainError("strip grids need n3 >= 3");
      break;
    case Geometry::Strip3:
      if (!power_of_two(n2_)) throw DomainError("n2 must be a power of two");
      if (n3_ < 3) throw DomainError("strip grids need n3 >= 3");
      break;
    case Geometry::Torus2:
      if (!power_of_two(n2_)) throw DomainError("n2 must be a power of two");
      if (n3_ != 1) throw DomainError("torus2 grids have n3 = 1");
      break;
  }
}

double Grid::vertical_weight(int k) const {
  if (!has_walls()) return 1.0;
  const double h = h3();
  return (k == 0 || k == n3_ - 1) ? 0.5 * h : h;
}

double Grid::volume() const {
  double v = kPeriod;
  if (has_x2()) v *= kPeriod;
  return v;
}

double Grid::cell_weight(int k) const {
  double w = h1() * vertical_weight(k);
  if (has_x2()) w *= h2();
  return w;
}

}  // namespace obmhd
