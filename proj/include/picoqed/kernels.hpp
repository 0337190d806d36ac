#ifndef PICOQED_KERNELS_HPP
#define PICOQED_KERNELS_HPP

#include <complex>
#include <span>
#include <vector>

// Grid-sweep kernels. Each has a serial reference implementation and an
// OpenMP variant over the output grid; the dispatching entry point picks
// the parallel one when OpenMP is compiled in. The serial versions are
// kept as the ground truth for the comparison tests and the benchmark.
namespace picoqed::kernels {

enum class Execution { Serial, Parallel };

// S(w) = Re sum_k trapezoid-weight * g[k] * exp(i w tau_k) * dt for a
// uniform tau grid tau_k = k * dt (half-line Fourier transform).
std::vector<double> halfline_fourier_serial(
    std::span<const std::complex<double>> g, double tau_step,
    std::span<const double> omega);
std::vector<double> halfline_fourier_parallel(
    std::span<const std::complex<double>> g, double tau_step,
    std::span<const double> omega);
std::vector<double> halfline_fourier(std::span<const std::complex<double>> g,
                                     double tau_step,
                                     std::span<const double> omega,
                                     Execution exec = Execution::Parallel);

struct LorentzianLine {
  double center = 0.0;
  double area = 0.0;
  double half_width = 0.0;  // HWHM
};

// Sum of area-normalized Lorentzians evaluated on a grid.
std::vector<double> lorentzian_profile_serial(
    std::span<const LorentzianLine> lines, std::span<const double> grid);
std::vector<double> lorentzian_profile_parallel(
    std::span<const LorentzianLine> lines, std::span<const double> grid);
std::vector<double> lorentzian_profile(std::span<const LorentzianLine> lines,
                                       std::span<const double> grid,
                                       Execution exec = Execution::Parallel);

struct GaussianLine {
  double center = 0.0;
  double amplitude = 0.0;  // peak height
  double sigma = 0.0;
};

std::vector<double> gaussian_profile_serial(std::span<const GaussianLine> lines,
                                            std::span<const double> grid);
std::vector<double> gaussian_profile_parallel(
    std::span<const GaussianLine> lines, std::span<const double> grid);
std::vector<double> gaussian_profile(std::span<const GaussianLine> lines,
                                     std::span<const double> grid,
                                     Execution exec = Execution::Parallel);

// True when the parallel variants actually run multithreaded.
bool openmp_enabled();

}  // namespace picoqed::kernels

#endif
