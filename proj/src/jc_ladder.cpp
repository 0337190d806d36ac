#include "picoqed/jc_ladder.hpp"

#include <cmath>
#include <stdexcept>

namespace picoqed {

DressedDoublet dressed_energies(const JCParameters& p, int n) {
  if (n < 1) throw std::domain_error("dressed_energies: n must be >= 1");
  if (p.g_cm1 < 0.0) throw std::domain_error("dressed_energies: g < 0");
  const double delta = p.omega_atom_cm1 - p.omega_mode_cm1;
  const double split = std::sqrt(delta * delta + 4.0 * p.g_cm1 * p.g_cm1 * n);
  const double center = n * p.omega_mode_cm1 + 0.5 * delta;
  return {n, center + 0.5 * split, center - 0.5 * split, split};
}

DoubletLines rabi_doublet_lines(double omega0_cm1, double splitting_cm1) {
  if (splitting_cm1 < 0.0)
    throw std::domain_error("rabi_doublet_lines: negative splitting");
  return {omega0_cm1 + 0.5 * splitting_cm1, omega0_cm1 - 0.5 * splitting_cm1};
}

}  // namespace picoqed
