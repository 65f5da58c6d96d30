#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace obmhd {

/// Strip2: x1 periodic, x3 in [0,1] (fields independent of x2).
/// Strip3: x1, x2 periodic, x3 in [0,1].
/// Torus2: x1, x2 periodic (fields independent of x3).
enum class Geometry : std::uint32_t { Strip2 = 0, Strip3 = 1, Torus2 = 2 };

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& name);

/// Horizontal period in each periodic direction.
inline constexpr double kPeriod = 2.0;

/// Vertex-centred grid. Horizontal nodes x = -1 + kPeriod*i/n; vertical
/// nodes x3 = k/(n3-1) including both walls. Storage is x3-major with x1
/// fastest: index = i1 + n1*(i2 + n2*i3).
class Grid {
public:
  Grid() = default;
  Grid(Geometry geometry, int n1, int n2, int n3);

  static Grid strip2(int n1, int n3) { return Grid(Geometry::Strip2, n1, 1, n3); }
  static Grid strip3(int n1, int n2, int n3) { return Grid(Geometry::Strip3, n1, n2, n3); }
  static Grid torus2(int n1, int n2) { return Grid(Geometry::Torus2, n1, n2, 1); }

  Geometry geometry() const { return geometry_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int n3() const { return n3_; }
  std::size_t size() const { return static_cast<std::size_t>(n1_) * n2_ * n3_; }
  std::size_t plane_size() const { return static_cast<std::size_t>(n1_) * n2_; }

  bool has_walls() const { return geometry_ != Geometry::Torus2; }
  bool has_x2() const { return geometry_ != Geometry::Strip2; }

  double h1() const { return kPeriod / n1_; }
  double h2() const { return kPeriod / n2_; }
  double h3() const { return has_walls() ? 1.0 / (n3_ - 1) : 0.0; }

  double x1(int i) const { return -1.0 + h1() * i; }
  double x2(int j) const { return -1.0 + h2() * j; }
  double x3(int k) const { return has_walls() ? h3() * k : 0.0; }

  std::size_t index(int i1, int i2, int i3) const {
    return static_cast<std::size_t>(i1) + static_cast<std::size_t>(n1_) * (i2 + static_cast<std::size_t>(n2_) * i3);
  }

  /// Trapezoidal weight of vertical level k (1 on tori).
  double vertical_weight(int k) const;

  /// Measure of the domain: kPeriod^d_h times 1.
  double volume() const;

  /// Quadrature weight of a single node (sums to volume()).
  double cell_weight(int k) const;

  /// The periodic horizontal cross-section as a Torus2 grid (n2 = 1 for Strip2).
  Grid horizontal() const { return Grid(Geometry::Torus2, n1_, n2_, 1); }

  bool operator==(const Grid& o) const {
    return geometry_ == o.geometry_ && n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

private:
  Geometry geometry_ = Geometry::Torus2;
  int n1_ = 1;
  int n2_ = 1;
  int n3_ = 1;
};

}  // namespace obmhd
