// Serial-vs-OpenMP timing for the grid-sweep kernels. The serial variants
// are the reference implementations the tests check against; this target
// reports what the parallel ones buy on the current machine.

#include <chrono>
#include <functional>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "picoqed/kernels.hpp"

using namespace picoqed::kernels;
namespace chrono = std::chrono;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  fn();  // warm up
  const auto t0 = chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  const auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace

int main() {
  std::printf("OpenMP compiled in: %s\n",
              openmp_enabled() ? "yes" : "no (parallel falls back to serial)");
  std::printf("%-28s %10s %12s %12s %8s\n", "kernel", "size", "serial_ms",
              "parallel_ms", "speedup");

  for (const auto [n_tau, n_omega] : {std::pair{2000, 800},
                                      std::pair{8000, 2400},
                                      std::pair{16000, 6000}}) {
    std::vector<std::complex<double>> g(n_tau);
    for (int k = 0; k < n_tau; ++k) {
      const double t = k * 0.005;
      g[k] = std::exp(-0.5 * t) *
             std::complex<double>(std::cos(20.0 * t), std::sin(20.0 * t));
    }
    const auto omega = grid(-60.0, 60.0, n_omega);
    double sink = 0.0;
    const double serial = time_ms(
        [&] { sink = halfline_fourier_serial(g, 0.005, omega)[0]; }, 3);
    const double parallel = time_ms(
        [&] { sink = halfline_fourier_parallel(g, 0.005, omega)[0]; }, 3);
    std::printf("%-28s %5dx%-5d %12.3f %12.3f %7.2fx\n", "halfline_fourier",
                n_tau, n_omega, serial, parallel, serial / parallel);
    (void)sink;
  }

  for (const int n : {100000, 1000000, 4000000}) {
    const std::vector<LorentzianLine> lines = {
        {-20.0, 0.25, 0.75}, {0.0, 0.5, 0.5}, {20.0, 0.25, 0.75}};
    const auto x = grid(-60.0, 60.0, n);
    double sink = 0.0;
    const double serial =
        time_ms([&] { sink = lorentzian_profile_serial(lines, x)[0]; }, 3);
    const double parallel = time_ms(
        [&] { sink = lorentzian_profile_parallel(lines, x)[0]; }, 3);
    std::printf("%-28s %10d %12.3f %12.3f %7.2fx\n", "lorentzian_profile", n,
                serial, parallel, serial / parallel);
    (void)sink;
  }

  for (const int n : {100000, 1000000, 4000000}) {
    const std::vector<GaussianLine> lines = {{372.0, 1.0, 4.0},
                                             {392.0, 0.9, 4.0},
                                             {430.0, 0.5, 6.0}};
    const auto x = grid(330.0, 520.0, n);
    double sink = 0.0;
    const double serial =
        time_ms([&] { sink = gaussian_profile_serial(lines, x)[0]; }, 3);
    const double parallel =
        time_ms([&] { sink = gaussian_profile_parallel(lines, x)[0]; }, 3);
    std::printf("%-28s %10d %12.3f %12.3f %7.2fx\n", "gaussian_profile", n,
                serial, parallel, serial / parallel);
    (void)sink;
  }
  return 0;
}
