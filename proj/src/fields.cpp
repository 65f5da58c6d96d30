#include "obmhd/fields.hpp"

#include <cmath>
#include <vector>

#include "obmhd/error.hpp"
#include "obmhd/spectral.hpp"

namespace obmhd {

namespace {

void require_same_grid(const Grid& a, const Grid& b) {
  if (a != b) throw DomainError("field grids differ");
}

// Applies mult(spectrum, m1, m2) -> Complex to each horizontal plane.
template <class F>
ScalarField spectral_map(const ScalarField& f, F mult) {
  const Grid& g = f.grid();
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  ScalarField out(g);
  std::vector<Complex> spec(sp.modes());
  const std::size_t plane = g.plane_size();
  for (int k = 0; k < g.n3(); ++k) {
    sp.forward(f.data() + k * plane, spec.data());
    for (int m2 = 0; m2 < sp.n2(); ++m2) {
      for (int m1 = 0; m1 < sp.nc(); ++m1) {
        auto& c = spec[static_cast<std::size_t>(m2) * sp.nc() + m1];
        c *= mult(sp, m1, m2);
      }
    }
    sp.backward(spec.data(), out.data() + k * plane);
  }
  return out;
}

}  // namespace

ScalarField ScalarField::sample(const Grid& grid, const std::function<double(double, double, double)>& f) {
  ScalarField out(grid);
  for (int k = 0; k < grid.n3(); ++k)
    for (int j = 0; j < grid.n2(); ++j)
      for (int i = 0; i < grid.n1(); ++i)
        out.at(i, j, k) = f(grid.x1(i), grid.has_x2() ? grid.x2(j) : 0.0, grid.x3(k));
  return out;
}

void ScalarField::require_finite(const std::string& name) const {
  for (double x : v_) {
    if (!std::isfinite(x)) throw NumericalError(NumericalError::Kind::NonFinite, "non-finite value in " + name);
  }
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& x : v_) x *= s;
  return *this;
}

ScalarField& ScalarField::add_scaled(double s, const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += s * o.v_[i];
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

void VectorField::require_finite(const std::string& name) const {
  for (int i = 0; i < 3; ++i) c_[i].require_finite(name + "[" + std::to_string(i) + "]");
}

double VectorField::max_abs() const {
  return std::max({c_[0].max_abs(), c_[1].max_abs(), c_[2].max_abs()});
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

ScalarField d1(const ScalarField& f) {
  return spectral_map(f, [](const PlaneSpectrum& sp, int m1, int) { return Complex(0.0, sp.k1_odd(m1)); });
}

ScalarField d2(const ScalarField& f) {
  if (!f.grid().has_x2()) return ScalarField(f.grid());
  return spectral_map(f, [](const PlaneSpectrum& sp, int, int m2) { return Complex(0.0, sp.k2_odd(m2)); });
}

ScalarField laplacian_h(const ScalarField& f) {
  return spectral_map(f, [](const PlaneSpectrum& sp, int m1, int m2) {
    const double k1 = sp.k1(m1), k2 = sp.k2(m2);
    return Complex(-(k1 * k1 + k2 * k2), 0.0);
  });
}

ScalarField dealias(const ScalarField& f) {
  return spectral_map(f, [](const PlaneSpectrum& sp, int m1, int m2) {
    return Complex(sp.retained(m1, m2) ? 1.0 : 0.0, 0.0);
  });
}

ScalarField dealiased_product(const ScalarField& a, const ScalarField& b) {
  return dealias(dealias(a) * dealias(b));
}

ScalarField d3(const ScalarField& f, Closure closure) {
  const Grid& g = f.grid();
  ScalarField out(g);
  if (!g.has_walls()) return out;
  const int n3 = g.n3();
  const std::size_t p = g.plane_size();
  const double inv2h = 0.5 / g.h3();
  const double invh = 1.0 / g.h3();
  const double* v = f.data();
  double* o = out.data();
  for (int k = 1; k < n3 - 1; ++k) {
    for (std::size_t i = 0; i < p; ++i) o[k * p + i] = (v[(k + 1) * p + i] - v[(k - 1) * p + i]) * inv2h;
  }
  const std::size_t top = (n3 - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    const double f0 = v[i], f1 = v[p + i], f2 = v[2 * p + i];
    const double fn = v[top + i], fn1 = v[top - p + i], fn2 = v[top - 2 * p + i];
    switch (closure) {
      case Closure::OneSided:
        o[i] = (-3.0 * f0 + 4.0 * f1 - f2) * inv2h;
        o[top + i] = (3.0 * fn - 4.0 * fn1 + fn2) * inv2h;
        break;
      case Closure::Even:
        o[i] = 0.0;
        o[top + i] = 0.0;
        break;
      case Closure::Odd:
        o[i] = (f1 - f0) * invh;
        o[top + i] = (fn - fn1) * invh;
        break;
    }
  }
  return out;
}

ScalarField d33(const ScalarField& f, Closure closure) {
  const Grid& g = f.grid();
  ScalarField out(g);
  if (!g.has_walls()) return out;
  const int n3 = g.n3();
  if (closure == Closure::OneSided && n3 < 4) throw DomainError("one-sided second derivative needs n3 >= 4");
  const std::size_t p = g.plane_size();
  const double invh2 = 1.0 / (g.h3() * g.h3());
  const double* v = f.data();
  double* o = out.data();
  for (int k = 1; k < n3 - 1; ++k) {
    for (std::size_t i = 0; i < p; ++i)
      o[k * p + i] = (v[(k + 1) * p + i] - 2.0 * v[k * p + i] + v[(k - 1) * p + i]) * invh2;
  }
  const std::size_t top = (n3 - 1) * p;
  for (std::size_t i = 0; i < p; ++i) {
    switch (closure) {
      case Closure::OneSided:
        o[i] = (2.0 * v[i] - 5.0 * v[p + i] + 4.0 * v[2 * p + i] - v[3 * p + i]) * invh2;
        o[top + i] = (2.0 * v[top + i] - 5.0 * v[top - p + i] + 4.0 * v[top - 2 * p + i] - v[top - 3 * p + i]) * invh2;
        break;
      case Closure::Even:
        o[i] = 2.0 * (v[p + i] - v[i]) * invh2;
        o[top + i] = 2.0 * (v[top - p + i] - v[top + i]) * invh2;
        break;
      case Closure::Odd:
        o[i] = 0.0;
        o[top + i] = 0.0;
        break;
    }
  }
  return out;
}

VectorField grad(const ScalarField& f) {
  f.require_finite("grad input");
  return VectorField(d1(f), d2(f), d3(f));
}

ScalarField div(const VectorField& v) {
  v.require_finite("div input");
  ScalarField out = d1(v[0]);
  out += d2(v[1]);
  out += d3(v[2]);
  return out;
}

VectorField curl(const VectorField& v) {
  v.require_finite("curl input");
  ScalarField c1 = d2(v[2]) - d3(v[1]);
  ScalarField c2 = d3(v[0]) - d1(v[2]);
  ScalarField c3 = d1(v[1]) - d2(v[0]);
  return VectorField(std::move(c1), std::move(c2), std::move(c3));
}

ScalarField laplacian(const ScalarField& f) {
  f.require_finite("laplacian input");
  ScalarField out = laplacian_h(f);
  if (f.grid().has_walls()) out += d33(f);
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  VectorField out(a.grid());
  for (std::size_t i = 0; i < a.grid().size(); ++i) {
    out[0][i] = a[1][i] * b[2][i] - a[2][i] * b[1][i];
    out[1][i] = a[2][i] * b[0][i] - a[0][i] * b[2][i];
    out[2][i] = a[0][i] * b[1][i] - a[1][i] * b[0][i];
  }
  return out;
}

ScalarField dot(const VectorField& a, const VectorField& b) {
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < a.grid().size(); ++i)
    out[i] = a[0][i] * b[0][i] + a[1][i] * b[1][i] + a[2][i] * b[2][i];
  return out;
}

VectorField leray_project(const VectorField& v, ScalarField* potential) {
  const Grid& g = v.grid();
  if (g.has_walls()) throw DomainError("leray_project operates on torus fields");
  v.require_finite("leray_project input");
  const auto& sp = PlaneSpectrum::get(g.n1(), g.n2());
  std::vector<Complex> a(sp.modes()), b(sp.modes()), phi(sp.modes());
  sp.forward(v[0].data(), a.data());
  sp.forward(v[1].data(), b.data());
  for (int m2 = 0; m2 < sp.n2(); ++m2) {
    for (int m1 = 0; m1 < sp.nc(); ++m1) {
      const std::size_t idx = static_cast<std::size_t>(m2) * sp.nc() + m1;
      const double k1 = sp.k1_odd(m1), k2 = sp.k2_odd(m2);
      const double kk = k1 * k1 + k2 * k2;
      if (kk == 0.0) {
        phi[idx] = 0.0;
        continue;
      }
      // v_hat = P v_hat + i k phi_hat
      const Complex kdotv = k1 * a[idx] + k2 * b[idx];
      phi[idx] = kdotv / (Complex(0.0, 1.0) * kk);
      a[idx] -= k1 * kdotv / kk;
      b[idx] -= k2 * kdotv / kk;
    }
  }
  VectorField out(g);
  sp.backward(a.data(), out[0].data());
  sp.backward(b.data(), out[1].data());
  out[2] = v[2];
  if (potential) {
    *potential = ScalarField(g);
    sp.backward(phi.data(), potential->data());
  }
  return out;
}

VectorField lorentz_force(const VectorField& b) { return cross(curl(b), b); }

double integral(const ScalarField& f) {
  const Grid& g = f.grid();
  const std::size_t p = g.plane_size();
  double total = 0.0;
  for (int k = 0; k < g.n3(); ++k) {
    double level = 0.0;
    for (std::size_t i = 0; i < p; ++i) level += f[k * p + i];
    total += level * g.cell_weight(k);
  }
  return total;
}

double mean(const ScalarField& f) { return integral(f) / f.grid().volume(); }

BoundaryFlux mean_laplacian_flux(const ScalarField& f) {
  const Grid& g = f.grid();
  if (!g.has_walls()) return {0.0, false};
  if (g.n3() < 4) throw DomainError("mean_laplacian_flux needs n3 >= 4");
  const std::size_t p = g.plane_size();
  const std::size_t top = (g.n3() - 1) * p;
  const double inv2h = 0.5 / g.h3();
  double sum = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    const double bottom = (-4.0 * f[i] + 7.0 * f[p + i] - 4.0 * f[2 * p + i] + f[3 * p + i]) * inv2h;
    const double upper =
        (4.0 * f[top + i] - 7.0 * f[top - p + i] + 4.0 * f[top - 2 * p + i] - f[top - 3 * p + i]) * inv2h;
    sum += upper - bottom;
  }
  // Horizontal average of the two wall fluxes over a unit-height domain.
  return {sum / static_cast<double>(p), true};
}

ScalarField depth_average(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g.horizontal());
  const std::size_t p = g.plane_size();
  for (int k = 0; k < g.n3(); ++k) {
    const double w = g.vertical_weight(k);
    for (std::size_t i = 0; i < p; ++i) out[i] += w * f[k * p + i];
  }
  return out;
}

ScalarField extend_vertically(const ScalarField& f, const Grid& strip) {
  if (f.grid() != strip.horizontal()) throw DomainError("horizontal field does not match strip cross-section");
  ScalarField out(strip);
  const std::size_t p = strip.plane_size();
  for (int k = 0; k < strip.n3(); ++k)
    for (std::size_t i = 0; i < p; ++i) out[k * p + i] = f[i];
  return out;
}

}  // namespace obmhd
