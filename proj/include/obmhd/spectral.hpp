#pragma once

#include <complex>
#include <vector>

namespace obmhd {

using Complex = std::complex<double>;

/// Real-to-complex FFT of one horizontal plane (n2 x n1, x1 fastest) with
/// wavenumber bookkeeping for the period-2 torus. Instances are cached per
/// thread; plan creation is serialised.
class PlaneSpectrum {
public:
  static const PlaneSpectrum& get(int n1, int n2);

  PlaneSpectrum(int n1, int n2);
  ~PlaneSpectrum();
  PlaneSpectrum(const PlaneSpectrum&) = delete;
  PlaneSpectrum& operator=(const PlaneSpectrum&) = delete;

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int nc() const { return n1_ / 2 + 1; }
  int modes() const { return n2_ * nc(); }

  /// plane (n1*n2 reals) -> spectrum (modes() complex), unnormalised.
  void forward(const double* plane, Complex* spectrum) const;
  /// spectrum -> plane, normalised so backward(forward(f)) == f.
  void backward(const Complex* spectrum, double* plane) const;

  double k1(int m1) const;
  double k2(int m2) const;
  /// Wavenumbers used by first derivatives (zero on Nyquist modes).
  double k1_odd(int m1) const;
  double k2_odd(int m2) const;
  /// Mode inside the 2/3-rule retained band.
  bool retained(int m1, int m2) const;

private:
  int n1_;
  int n2_;
  void* plan_fwd_;
  void* plan_bwd_;
  double* rbuf_;
  Complex* cbuf_;
};

}  // namespace obmhd
