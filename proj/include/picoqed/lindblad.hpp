#ifndef PICOQED_LINDBLAD_HPP
#define PICOQED_LINDBLAD_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "picoqed/kernels.hpp"
#include "picoqed/mollow.hpp"

namespace picoqed::lindblad {

using Matrix = Eigen::MatrixXcd;

// Scaling-and-squaring matrix exponential with Pade approximants
// (degrees 3/5/7/9/13 picked by the 1-norm).
Matrix matrix_exponential(const Matrix& a);

struct CollapseChannel {
  Matrix op;
  double rate_cm1 = 0.0;
};

// Master-equation problem in the rotating frame. Energies and rates are
// wavenumbers; the matching time unit is 1/(2 pi c x 1 cm^-1), so a rate
// of G cm^-1 decays as exp(-G tau) on the internal tau axis and no second
// ever appears in the interface.
class LindbladProblem {
 public:
  // Validates Hermiticity of H (to 1e-12 of its largest entry) and
  // non-negativity of all rates.
  LindbladProblem(Matrix hamiltonian, std::vector<CollapseChannel> collapse,
                  Matrix emission_op);

  int dim() const { return static_cast<int>(hamiltonian_.rows()); }
  const Matrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<CollapseChannel>& collapse() const { return collapse_; }
  // The operator whose fluctuations are observed in emission (sigma^- for
  // one emitter, the collective sum for several).
  const Matrix& emission_op() const { return emission_op_; }

  // d^2 x d^2 superoperator, column-stacking convention.
  const Matrix& liouvillian() const { return liouvillian_; }

 private:
  Matrix hamiltonian_;
  std::vector<CollapseChannel> collapse_;
  Matrix emission_op_;
  Matrix liouvillian_;
};

// One driven two-level emitter: H = -Delta s+s- + (Omega/2)(s+ + s-),
// collapse sqrt(Gamma) s-. Throws std::domain_error for Gamma <= 0.
LindbladProblem driven_tls_problem(double rabi_cm1, double detuning_cm1,
                                   double gamma_cm1);

// Two emitters with coherent exchange dd_coupling (s1+ s2- + h.c.),
// symmetric drive, individual decay gamma and cross-decay gamma12. The
// dissipator matrix over {s1-, s2-} must stay positive semidefinite,
// i.e. |gamma12| <= gamma.
LindbladProblem two_emitter_problem(double rabi_cm1, double detuning_cm1,
                                    double gamma_cm1, double dd_coupling_cm1,
                                    double cross_decay_cm1);

struct DensityMatrix {
  Matrix rho;
  double trace_defect() const;       // |Tr rho - 1|
  double hermiticity_defect() const;
  double min_eigenvalue() const;
};

// Unique Liouvillian null vector, trace-normalized. Uniqueness is checked
// by requiring the second-smallest singular value of L to clear
// 1e-8 * sigma_max; otherwise a MultiplicityError is thrown.
DensityMatrix steady_state(const LindbladProblem& p);

std::complex<double> expectation(const Matrix& rho, const Matrix& op);

// Tr[observable * exp(L tau_k)(initial)] on a uniform tau grid.
std::vector<std::complex<double>> evolve_expectation(
    const LindbladProblem& p, const Matrix& initial, const Matrix& observable,
    std::span<const double> tau_grid);

struct Correlation {
  std::vector<double> tau;
  std::vector<std::complex<double>> value;
  // Coherent (factorized) part |<A>_ss|^2 carried along so callers can
  // split off the incoherent spectrum.
  std::complex<double> coherent_offset = 0.0;
  // False when the correlation has not decayed below 1e-6 of its initial
  // value by the end of the grid (spectra would be truncated).
  bool decayed = true;
};

// g1(tau) = <A+(tau) A(0)> with A the problem's emission operator.
Correlation correlation_g1(const LindbladProblem& p,
                           std::span<const double> tau_grid);

// Normalized g2(tau) = <A+ A+A(tau) A> / <A+A>^2 (real part; the imaginary
// residue is numerical noise).
Correlation correlation_g2(const LindbladProblem& p,
                           std::span<const double> tau_grid);

// S(w) = Re integral_0^inf g1_inc(tau) exp(i w tau) dtau by trapezoidal
// quadrature on the half line; w is measured from the drive. The coherent
// offset is subtracted before transforming when subtract_coherent is set.
FrequencySpectrum spectrum_from_g1(
    const Correlation& g1, std::span<const double> omega_grid,
    bool subtract_coherent = true,
    kernels::Execution exec = kernels::Execution::Parallel);

// Uniform grids.
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace picoqed::lindblad

#endif
