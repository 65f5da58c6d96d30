#pragma once

// Discrete fields and calculus on the strip / torus: Fourier
// differentiation horizontally, second-order finite differences
// vertically.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "obmhd/grid.hpp"

namespace obmhd {

class ScalarField {
public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, double value = 0.0) : grid_(grid), v_(grid.size(), value) {}

  /// Samples f(x1, x2, x3) at every node.
  static ScalarField sample(const Grid& grid, const std::function<double(double, double, double)>& f);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return v_.size(); }
  double& operator[](std::size_t i) { return v_[i]; }
  double operator[](std::size_t i) const { return v_[i]; }
  double& at(int i1, int i2, int i3) { return v_[grid_.index(i1, i2, i3)]; }
  double at(int i1, int i2, int i3) const { return v_[grid_.index(i1, i2, i3)]; }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::span<double> values() { return v_; }
  std::span<const double> values() const { return v_; }

  /// Throws NumericalError(NonFinite) naming the field if any value is NaN/Inf.
  void require_finite(const std::string& name) const;
  double max_abs() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
  ScalarField& add_scaled(double s, const ScalarField& o);

private:
  Grid grid_;
  std::vector<double> v_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
ScalarField operator*(const ScalarField& a, const ScalarField& b);

/// Three-component field; components are stored separately.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(const Grid& grid) : c_{ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}
  VectorField(ScalarField a, ScalarField b, ScalarField c) : c_{std::move(a), std::move(b), std::move(c)} {}

  const Grid& grid() const { return c_[0].grid(); }
  ScalarField& operator[](int i) { return c_[i]; }
  const ScalarField& operator[](int i) const { return c_[i]; }

  void require_finite(const std::string& name) const;
  double max_abs() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);

private:
  std::array<ScalarField, 3> c_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);

/// Wall treatment of vertical differences. OneSided uses second-order
/// one-sided stencils; Even and Odd use mirror ghost nodes (f_{-1} = f_1,
/// respectively f_{-1} = 2 f_0 - f_1).
enum class Closure { OneSided, Even, Odd };

ScalarField d1(const ScalarField& f);
ScalarField d2(const ScalarField& f);
ScalarField d3(const ScalarField& f, Closure closure = Closure::OneSided);
ScalarField d33(const ScalarField& f, Closure closure = Closure::OneSided);
/// d11 + d22, spectral.
ScalarField laplacian_h(const ScalarField& f);
/// Zeroes every horizontal mode outside the 2/3-rule band.
ScalarField dealias(const ScalarField& f);
/// dealias(dealias(a) * dealias(b)).
ScalarField dealiased_product(const ScalarField& a, const ScalarField& b);

VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& f);

VectorField cross(const VectorField& a, const VectorField& b);
ScalarField dot(const VectorField& a, const VectorField& b);

/// Spectral Helmholtz-Leray projection of a field on a torus. The
/// potential (if requested) satisfies v = P v + grad(phi), mean(phi) = 0.
VectorField leray_project(const VectorField& v, ScalarField* potential = nullptr);

/// curl(B) x B.
VectorField lorentz_force(const VectorField& b);

/// Domain average, trapezoidal vertically.
double mean(const ScalarField& f);
double integral(const ScalarField& f);

struct BoundaryFlux {
  double value;
  bool has_boundary;
};

/// |Omega|^{-1} times the outward normal derivative integrated over both
/// walls. The wall derivative stencils are the ones for which the
/// identity mean(laplacian(f)) == flux holds exactly for the discrete
/// operators; on a torus returns {0, false}.
BoundaryFlux mean_laplacian_flux(const ScalarField& f);

/// Vertical (trapezoidal) average of a strip field, as a field on the
/// horizontal torus.
ScalarField depth_average(const ScalarField& f);
/// Copies a horizontal field to every level of a strip grid.
ScalarField extend_vertically(const ScalarField& f, const Grid& strip);

}  // namespace obmhd
