#pragma once

// Forward-mode dual numbers; nest Dual<Dual<double>> for second derivatives.

#include <array>
#include <cmath>

namespace obmhd {

template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(T value, T deriv) : v(value), d(deriv) {}
  Dual(double c) : v(c), d(0.0) {}  // NOLINT: constants promote implicitly
};

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.v + b.v, a.d + b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.v - b.v, a.d - b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T> Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
template <class T> Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double c) { return {a.v + c, a.d}; }
template <class T> Dual<T> operator+(double c, const Dual<T>& a) { return {a.v + c, a.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a, double c) { return {a.v - c, a.d}; }
template <class T> Dual<T> operator-(double c, const Dual<T>& a) { return {c - a.v, -a.d}; }
template <class T> Dual<T> operator*(const Dual<T>& a, double c) { return {a.v * c, a.d * c}; }
template <class T> Dual<T> operator*(double c, const Dual<T>& a) { return {a.v * c, a.d * c}; }
template <class T> Dual<T> operator/(const Dual<T>& a, double c) { return {a.v / c, a.d / c}; }

template <class T> Dual<T> sin(const Dual<T>& a) {
  using std::cos;
  using std::sin;
  return {sin(a.v), a.d * cos(a.v)};
}

template <class T> Dual<T> cos(const Dual<T>& a) {
  using std::cos;
  using std::sin;
  return {cos(a.v), -(a.d * sin(a.v))};
}

template <class T> Dual<T> exp(const Dual<T>& a) {
  using std::exp;
  const T e = exp(a.v);
  return {e, a.d * e};
}

template <class T> Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T r = sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}

/// Value, gradient and Hessian of a scalar function of (x1, x2, x3).
struct Jet {
  double v = 0.0;
  std::array<double, 3> d{};
  std::array<std::array<double, 3>, 3> dd{};
};

/// f must be callable as f(T x1, T x2, T x3) for T = Dual<Dual<double>>.
/// Derivatives in x2 are skipped (left zero) unless with_x2 is set.
template <class F>
Jet make_jet(const F& f, double x1, double x2, double x3, bool with_x2 = true) {
  using D = Dual<double>;
  using DD = Dual<D>;
  const double x[3] = {x1, x2, x3};
  auto eval = [&](int a, int b) {
    DD arg[3];
    for (int c = 0; c < 3; ++c) arg[c] = DD(D(x[c], c == a ? 1.0 : 0.0), D(c == b ? 1.0 : 0.0, 0.0));
    return f(arg[0], arg[1], arg[2]);
  };
  Jet j;
  for (int a = 0; a < 3; ++a) {
    if (a == 1 && !with_x2) continue;
    for (int b = a; b < 3; ++b) {
      if (b == 1 && !with_x2) continue;
      const DD r = eval(a, b);
      j.v = r.v.v;
      if (a == b) j.d[a] = r.v.d;
      j.dd[a][b] = j.dd[b][a] = r.d.d;
    }
  }
  return j;
}

}  // namespace obmhd
