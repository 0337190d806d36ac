#ifndef PICOQED_COLLECTIVE_HPP
#define PICOQED_COLLECTIVE_HPP

#include <vector>

#include <Eigen/Dense>

#include "picoqed/units.hpp"

namespace picoqed {

// Phenomenological N-ensemble line-position model: the Rabi splitting of
// the N-molecule ensemble is N^{3/2} times the single-molecule one. This
// is a line model only; no Hamiltonian backs it, by construction.
struct CollectiveModel {
  int ensemble_size = 1;       // N
  double rabi0_cm1 = 0.0;      // single-molecule vacuum Rabi splitting
  double resonance_cm1 = 0.0;  // w0
};

// Omega_N = N^{3/2} * Omega_0.
double collective_rabi_cm1(const CollectiveModel& m);

struct CollectiveDoublet {
  int order = 0;  // N
  double p_plus_cm1 = 0.0;
  double p_minus_cm1 = 0.0;
};

// Lines w0 +- N^{3/2} Omega_0 / 2 for N = 1..n_max.
std::vector<CollectiveDoublet> collective_doublet_ladder(
    const CollectiveModel& m, int n_max);

// N identical two-level emitters sharing one truncated photon mode.
struct TCProblem {
  int emitters = 1;            // N
  double omega_mode_cm1 = 0.0;
  double omega_atom_cm1 = 0.0;
  double g_cm1 = 0.0;
  int n_max_photons = 5;       // photon-space truncation
};

// Hilbert dimension (n_max+1) * 2^N; a CapacityError is thrown above 4096.
int tc_dimension(const TCProblem& p);

// H = w_mode a^dag a + (w_atom/2) sum sigma_z + g sum (a^dag sigma^- + h.c.),
// assembled by Kronecker products. Hermitian by construction.
Eigen::MatrixXcd tc_hamiltonian(const TCProblem& p);

struct TCBrightSplitting {
  double splitting_cm1 = 0.0;
  double e_plus_cm1 = 0.0;
  double e_minus_cm1 = 0.0;
  std::vector<double> dark_energies_cm1;  // N-1 of them in the 1-excitation block
};

// Gap between the two bright single-excitation polaritons, identified by
// maximal overlap with span{a^dag|vac>, S^+|vac>}. Equals 2 g sqrt(N) at
// resonance.
TCBrightSplitting tc_bright_splitting(const TCProblem& p);

// Re-runs tc_bright_splitting at n_max + 2 and reports the relative change.
double tc_truncation_change(const TCProblem& p);

enum class CouplingRegime { WeakOrStrong, Ultrastrong };

struct CouplingAssessment {
  double splitting_cm1 = 0.0;
  double omega0_cm1 = 0.0;
  double eta = 0.0;  // (splitting/2) / w0
  CouplingRegime regime = CouplingRegime::WeakOrStrong;
};

// eta = (Omega/2)/w0; ultrastrong iff eta > 0.1 (boundary exclusive).
CouplingAssessment assess_coupling(double splitting_cm1, double omega0_cm1);

struct ScalingComparisonRow {
  int order = 0;                  // N
  double nsqrtn_cm1 = 0.0;        // N^{3/2} * Omega_0
  double tavis_cummings_cm1 = 0;  // diagonalized bright splitting
  double ratio = 0.0;             // nsqrtn / tavis-cummings
};

// Side-by-side N^{3/2} model vs Tavis-Cummings bright splitting, N = 1..n_max,
// both at resonance omega0. When nsqrtn_rabi0 = 2*tc_g the two ladders
// coincide at N = 1 and the ratio column equals N exactly.
std::vector<ScalingComparisonRow> collective_comparison_table(
    double omega0_cm1, double nsqrtn_rabi0_cm1, double tc_g_cm1, int n_max);

}  // namespace picoqed

#endif
