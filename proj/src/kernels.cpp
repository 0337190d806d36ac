#include "picoqed/kernels.hpp"

#include <cmath>

namespace picoqed::kernels {

namespace {

// One output point of the half-line transform. Summation order is fixed
// (ascending k) so serial and parallel runs produce identical bits.
double fourier_point(std::span<const std::complex<double>> g, double tau_step,
                     double omega) {
  const size_t n = g.size();
  if (n < 2) return 0.0;
  // exp(i w dt) recurrence instead of n sin/cos calls.
  const std::complex<double> step(std::cos(omega * tau_step),
                                  std::sin(omega * tau_step));
  std::complex<double> phase(1.0, 0.0);
  std::complex<double> acc = 0.5 * g[0];
  phase *= step;
  for (size_t k = 1; k + 1 < n; ++k) {
    acc += g[k] * phase;
    phase *= step;
  }
  acc += 0.5 * g[n - 1] * phase;
  return acc.real() * tau_step;
}

double lorentzian_point(std::span<const LorentzianLine> lines, double x) {
  double y = 0.0;
  for (const auto& l : lines) {
    const double d = x - l.center;
    y += l.area / M_PI * l.half_width / (d * d + l.half_width * l.half_width);
  }
  return y;
}

double gaussian_point(std::span<const GaussianLine> lines, double x) {
  double y = 0.0;
  for (const auto& l : lines) {
    const double z = (x - l.center) / l.sigma;
    y += l.amplitude * std::exp(-0.5 * z * z);
  }
  return y;
}

}  // namespace

std::vector<double> halfline_fourier_serial(
    std::span<const std::complex<double>> g, double tau_step,
    std::span<const double> omega) {
  std::vector<double> out(omega.size());
  for (size_t i = 0; i < omega.size(); ++i)
    out[i] = fourier_point(g, tau_step, omega[i]);
  return out;
}

std::vector<double> halfline_fourier_parallel(
    std::span<const std::complex<double>> g, double tau_step,
    std::span<const double> omega) {
  std::vector<double> out(omega.size());
  const long n = static_cast<long>(omega.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = fourier_point(g, tau_step, omega[i]);
  return out;
}

std::vector<double> halfline_fourier(std::span<const std::complex<double>> g,
                                     double tau_step,
                                     std::span<const double> omega,
                                     Execution exec) {
  return exec == Execution::Serial
             ? halfline_fourier_serial(g, tau_step, omega)
             : halfline_fourier_parallel(g, tau_step, omega);
}

std::vector<double> lorentzian_profile_serial(
    std::span<const LorentzianLine> lines, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    out[i] = lorentzian_point(lines, grid[i]);
  return out;
}

std::vector<double> lorentzian_profile_parallel(
    std::span<const LorentzianLine> lines, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = lorentzian_point(lines, grid[i]);
  return out;
}

std::vector<double> lorentzian_profile(std::span<const LorentzianLine> lines,
                                       std::span<const double> grid,
                                       Execution exec) {
  return exec == Execution::Serial ? lorentzian_profile_serial(lines, grid)
                                   : lorentzian_profile_parallel(lines, grid);
}

std::vector<double> gaussian_profile_serial(std::span<const GaussianLine> lines,
                                            std::span<const double> grid) {
  std::vector<double> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    out[i] = gaussian_point(lines, grid[i]);
  return out;
}

std::vector<double> gaussian_profile_parallel(
    std::span<const GaussianLine> lines, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = gaussian_point(lines, grid[i]);
  return out;
}

std::vector<double> gaussian_profile(std::span<const GaussianLine> lines,
                                     std::span<const double> grid,
                                     Execution exec) {
  return exec == Execution::Serial ? gaussian_profile_serial(lines, grid)
                                   : gaussian_profile_parallel(lines, grid);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace picoqed::kernels
