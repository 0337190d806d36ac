#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "picoqed/kernels.hpp"

using namespace picoqed::kernels;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit-for-bit") {
  // Decaying oscillation with a known transform.
  const int n_tau = 5000;
  const double dt = 0.01;
  std::vector<std::complex<double>> g(n_tau);
  for (int k = 0; k < n_tau; ++k) {
    const double t = k * dt;
    g[k] = std::exp(-0.5 * t) *
           std::complex<double>(std::cos(7.0 * t), std::sin(7.0 * t));
  }
  const auto omega = grid(-30.0, 30.0, 1501);
  const auto serial = halfline_fourier_serial(g, dt, omega);
  const auto parallel = halfline_fourier_parallel(g, dt, omega);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);

  const std::vector<LorentzianLine> lines = {{-3.0, 0.25, 0.4},
                                             {0.0, 0.5, 0.2},
                                             {3.0, 0.25, 0.4}};
  const auto x = grid(-10.0, 10.0, 20001);
  const auto ls = lorentzian_profile_serial(lines, x);
  const auto lp = lorentzian_profile_parallel(lines, x);
  for (size_t i = 0; i < ls.size(); ++i) CHECK(ls[i] == lp[i]);

  const std::vector<GaussianLine> glines = {{376.0, 1.0, 6.0},
                                            {440.0, 0.8, 7.0}};
  const auto wl = grid(320.0, 520.0, 4001);
  const auto gs = gaussian_profile_serial(glines, wl);
  const auto gp = gaussian_profile_parallel(glines, wl);
  for (size_t i = 0; i < gs.size(); ++i) CHECK(gs[i] == gp[i]);
}

TEST_CASE("half-line Fourier of an exponential decay is a Lorentzian") {
  // g(tau) = exp(-a tau) => Re int_0^inf g e^{i w tau} = a / (a^2 + w^2).
  const double a = 0.7;
  const int n_tau = 600001;
  const double dt = 0.0001;
  std::vector<std::complex<double>> g(n_tau);
  for (int k = 0; k < n_tau; ++k) g[k] = std::exp(-a * k * dt);
  const auto omega = grid(-5.0, 5.0, 101);
  const auto s = halfline_fourier(g, dt, omega);
  for (size_t i = 0; i < omega.size(); ++i) {
    const double exact = a / (a * a + omega[i] * omega[i]);
    CHECK(s[i] == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("lorentzian profile height and area") {
  const std::vector<LorentzianLine> line = {{0.0, 1.0, 0.5}};
  const auto x = grid(-200.0, 200.0, 800001);
  const auto y = lorentzian_profile(line, x);
  // Height A / (pi w)
  double peak = 0.0;
  for (double v : y) peak = std::max(peak, v);
  CHECK(peak == doctest::Approx(1.0 / (std::numbers::pi * 0.5)).epsilon(1e-6));
  // Area by trapezoid close to 1 up to the window tails.
  double area = 0.0;
  const double step = x[1] - x[0];
  for (size_t i = 0; i + 1 < y.size(); ++i)
    area += 0.5 * (y[i] + y[i + 1]) * step;
  CHECK(area == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("degenerate inputs") {
  const std::vector<std::complex<double>> empty;
  const auto omega = grid(-1.0, 1.0, 3);
  const auto s = halfline_fourier(empty, 0.1, omega);
  for (double v : s) CHECK(v == 0.0);

  const std::vector<LorentzianLine> none;
  for (double v : lorentzian_profile(none, omega)) CHECK(v == 0.0);
}
