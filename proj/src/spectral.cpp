#include "obmhd/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

namespace obmhd {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const PlaneSpectrum& PlaneSpectrum::get(int n1, int n2) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<PlaneSpectrum>> cache;
  auto& slot = cache[{n1, n2}];
  if (!slot) slot = std::make_unique<PlaneSpectrum>(n1, n2);
  return *slot;
}

PlaneSpectrum::PlaneSpectrum(int n1, int n2) : n1_(n1), n2_(n2) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  rbuf_ = fftw_alloc_real(static_cast<std::size_t>(n1) * n2);
  cbuf_ = reinterpret_cast<Complex*>(fftw_alloc_complex(static_cast<std::size_t>(n2) * (n1 / 2 + 1)));
  auto* c = reinterpret_cast<fftw_complex*>(cbuf_);
  plan_fwd_ = fftw_plan_dft_r2c_2d(n2, n1, rbuf_, c, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_c2r_2d(n2, n1, c, rbuf_, FFTW_ESTIMATE);
}

PlaneSpectrum::~PlaneSpectrum() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(rbuf_);
  fftw_free(cbuf_);
}

void PlaneSpectrum::forward(const double* plane, Complex* spectrum) const {
  const std::size_t n = static_cast<std::size_t>(n1_) * n2_;
  std::memcpy(rbuf_, plane, n * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(static_cast<void*>(spectrum), cbuf_, static_cast<std::size_t>(modes()) * sizeof(Complex));
}

void PlaneSpectrum::backward(const Complex* spectrum, double* plane) const {
  const std::size_t n = static_cast<std::size_t>(n1_) * n2_;
  std::memcpy(static_cast<void*>(cbuf_), spectrum, static_cast<std::size_t>(modes()) * sizeof(Complex));
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) plane[i] = rbuf_[i] * scale;
}

double PlaneSpectrum::k1(int m1) const { return std::numbers::pi * m1; }

double PlaneSpectrum::k2(int m2) const {
  const int m = (m2 <= n2_ / 2) ? m2 : m2 - n2_;
  return std::numbers::pi * m;
}

double PlaneSpectrum::k1_odd(int m1) const {
  if (n1_ > 1 && 2 * m1 == n1_) return 0.0;
  return k1(m1);
}

double PlaneSpectrum::k2_odd(int m2) const {
  if (n2_ > 1 && 2 * m2 == n2_) return 0.0;
  return k2(m2);
}

bool PlaneSpectrum::retained(int m1, int m2) const {
  const int a1 = m1;
  const int a2 = (m2 <= n2_ / 2) ? m2 : n2_ - m2;
  return 3 * a1 <= n1_ && 3 * a2 <= n2_;
}

}  // namespace obmhd
