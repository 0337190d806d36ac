#include "picoqed/collective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "picoqed/errors.hpp"
#include "picoqed/operators.hpp"

namespace picoqed {

double collective_rabi_cm1(const CollectiveModel& m) {
  if (m.ensemble_size < 1)
    throw std::domain_error("collective_rabi: ensemble size must be >= 1");
  if (m.rabi0_cm1 < 0.0)
    throw std::domain_error("collective_rabi: negative base splitting");
  return std::pow(double(m.ensemble_size), 1.5) * m.rabi0_cm1;
}

std::vector<CollectiveDoublet> collective_doublet_ladder(
    const CollectiveModel& m, int n_max) {
  if (n_max < 1)
    throw std::domain_error("collective_doublet_ladder: n_max must be >= 1");
  std::vector<CollectiveDoublet> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    CollectiveModel mn = m;
    mn.ensemble_size = n;
    const double half = 0.5 * collective_rabi_cm1(mn);
    out.push_back({n, m.resonance_cm1 + half, m.resonance_cm1 - half});
  }
  return out;
}

int tc_dimension(const TCProblem& p) {
  if (p.emitters < 1 || p.n_max_photons < p.emitters)
    throw std::domain_error("tc_dimension: need n_max >= N >= 1");
  const double dim = (p.n_max_photons + 1.0) * std::pow(2.0, p.emitters);
  if (dim > 4096.0)
    throw CapacityError("tc_dimension: Hilbert dimension exceeds 4096");
  return (p.n_max_photons + 1) * (1 << p.emitters);
}

Eigen::MatrixXcd tc_hamiltonian(const TCProblem& p) {
  const int dim = tc_dimension(p);
  const int spin_dim = 1 << p.emitters;
  const auto a = ops::annihilation(p.n_max_photons);
  const auto spin_id = ops::identity(spin_dim);

  Eigen::MatrixXcd h =
      p.omega_mode_cm1 * ops::kron(a.adjoint() * a, spin_id);
  const auto mode_id = ops::identity(p.n_max_photons + 1);
  for (int i = 0; i < p.emitters; ++i) {
    h += 0.5 * p.omega_atom_cm1 *
         ops::kron(mode_id, ops::embed_spin(ops::sigma_z(), i, p.emitters));
    const auto sm = ops::embed_spin(ops::sigma_minus(), i, p.emitters);
    h += p.g_cm1 * (ops::kron(a.adjoint(), sm) + ops::kron(a, sm.adjoint()));
  }
  if (h.rows() != dim)
    throw std::logic_error("tc_hamiltonian: dimension mismatch");
  return h;
}

TCBrightSplitting tc_bright_splitting(const TCProblem& p) {
  const int dim = tc_dimension(p);
  const Eigen::MatrixXcd h = tc_hamiltonian(p);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const auto& energies = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  // Bright subspace of the single-excitation manifold:
  // |B1> = a^dag |vac,G>, |B2> = N^{-1/2} sum_i sigma_i^+ |vac,G>.
  const int spin_dim = 1 << p.emitters;
  Eigen::VectorXcd b1 = Eigen::VectorXcd::Zero(dim);
  b1(1 * spin_dim + 0) = 1.0;  // one photon, all spins ground
  Eigen::VectorXcd b2 = Eigen::VectorXcd::Zero(dim);
  for (int i = 0; i < p.emitters; ++i)
    b2(0 * spin_dim + (1 << (p.emitters - 1 - i))) =
        1.0 / std::sqrt(double(p.emitters));

  // Rank eigenvectors by their weight in the bright plane; the two
  // polaritons carry essentially all of it.
  std::vector<std::pair<double, int>> weights(dim);
  for (int k = 0; k < dim; ++k) {
    const auto v = vectors.col(k);
    const double w = std::norm(b1.dot(v)) + std::norm(b2.dot(v));
    weights[k] = {w, k};
  }
  std::sort(weights.begin(), weights.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  const int ka = weights[0].second;
  const int kb = weights[1].second;
  const double ea = energies(ka);
  const double eb = energies(kb);

  // Dark states: remaining single-excitation states, recognized by their
  // weight on the zero-photon single-flip basis vectors.
  TCBrightSplitting result;
  result.e_plus_cm1 = std::max(ea, eb);
  result.e_minus_cm1 = std::min(ea, eb);
  result.splitting_cm1 = result.e_plus_cm1 - result.e_minus_cm1;
  for (int k = 0; k < dim; ++k) {
    if (k == ka || k == kb) continue;
    double single_flip_weight = 0.0;
    for (int i = 0; i < p.emitters; ++i)
      single_flip_weight +=
          std::norm(vectors.col(k)(0 * spin_dim + (1 << i)));
    if (single_flip_weight > 0.5)
      result.dark_energies_cm1.push_back(energies(k));
  }
  std::sort(result.dark_energies_cm1.begin(), result.dark_energies_cm1.end());
  return result;
}

double tc_truncation_change(const TCProblem& p) {
  const double s0 = tc_bright_splitting(p).splitting_cm1;
  TCProblem bigger = p;
  bigger.n_max_photons += 2;
  const double s1 = tc_bright_splitting(bigger).splitting_cm1;
  return std::abs(s1 - s0) / std::max(std::abs(s0), 1e-300);
}

CouplingAssessment assess_coupling(double splitting_cm1, double omega0_cm1) {
  if (splitting_cm1 < 0.0 || omega0_cm1 <= 0.0)
    throw std::domain_error("assess_coupling: invalid inputs");
  CouplingAssessment a;
  a.splitting_cm1 = splitting_cm1;
  a.omega0_cm1 = omega0_cm1;
  a.eta = 0.5 * splitting_cm1 / omega0_cm1;
  a.regime = a.eta > 0.1 ? CouplingRegime::Ultrastrong
                         : CouplingRegime::WeakOrStrong;
  return a;
}

std::vector<ScalingComparisonRow> collective_comparison_table(
    double omega0_cm1, double nsqrtn_rabi0_cm1, double tc_g_cm1, int n_max) {
  std::vector<ScalingComparisonRow> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    ScalingComparisonRow row;
    row.order = n;
    row.nsqrtn_cm1 =
        collective_rabi_cm1({n, nsqrtn_rabi0_cm1, omega0_cm1});
    TCProblem tc{n, omega0_cm1, omega0_cm1, tc_g_cm1, n + 4};
    row.tavis_cummings_cm1 = tc_bright_splitting(tc).splitting_cm1;
    row.ratio = row.nsqrtn_cm1 / row.tavis_cummings_cm1;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace picoqed
