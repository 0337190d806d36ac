#ifndef PICOQED_JC_LADDER_HPP
#define PICOQED_JC_LADDER_HPP

namespace picoqed {

// Single two-level emitter coupled to one photonic mode, rotating-wave
// approximation. g is the single-excitation vacuum coupling, so the n = 1
// splitting at resonance is 2g.
struct JCParameters {
  double omega_mode_cm1 = 0.0;
  double omega_atom_cm1 = 0.0;
  double g_cm1 = 0.0;
};

// Dressed pair of the n-excitation manifold (n counts total excitations,
// photons plus the atomic one).
struct DressedDoublet {
  int n = 0;
  double e_plus_cm1 = 0.0;
  double e_minus_cm1 = 0.0;
  double splitting_cm1 = 0.0;
};

// E_pm(n) = n w_mode + Delta/2 +- sqrt(Delta^2 + 4 g^2 n)/2,
// Delta = w_atom - w_mode. Throws std::domain_error for n < 1.
DressedDoublet dressed_energies(const JCParameters& p, int n);

struct DoubletLines {
  double p_plus_cm1 = 0.0;
  double p_minus_cm1 = 0.0;
};

// P_pm = w0 +- Omega/2: polariton pair flanking a bare line symmetrically
// in energy.
DoubletLines rabi_doublet_lines(double omega0_cm1, double splitting_cm1);

}  // namespace picoqed

#endif
