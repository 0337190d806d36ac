#ifndef PICOQED_RESONATOR_HPP
#define PICOQED_RESONATOR_HPP

#include "picoqed/units.hpp"

namespace picoqed {

// Two ions of radius R whose centres sit a distance D apart. The photonic
// mode is modelled as the cylinder of radius R spanning the gap between
// the ion surfaces.
struct ResonatorGeometry {
  double atom_separation_nm = 0.0;  // D
  double ionic_radius_nm = 0.0;     // R
};

struct Resonator {
  double mode_volume_nm3 = 0.0;
  double quality_factor = 0.0;
  SpectralValue resonance;
};

struct VacuumField {
  double amplitude_v_per_m = 0.0;
  double mode_frequency_rad_per_s = 0.0;
};

// d = D - 2R. Throws std::domain_error in the contact regime (d <= 0).
double interfacial_gap_nm(const ResonatorGeometry& geom);

// V = pi R^2 (D - 2R): cylinder of radius R and height d.
double mode_volume_nm3(const ResonatorGeometry& geom);

// Q = center / FWHM, both taken in wavenumbers.
double quality_factor(SpectralValue center, SpectralValue fwhm);

// F_p = (3 / 4 pi^2) (lambda/n)^3 (Q/V), lambda^3 and V in nm^3.
double purcell_factor(SpectralValue lambda, double n_medium, double q,
                      double volume_nm3);

// E0 = sqrt(hbar w / (2 eps0 V)), evaluated in SI.
VacuumField vacuum_field_amplitude(SpectralValue omega, double volume_nm3);

// |g| = mu E0 / hbar, returned in wavenumbers. The sign of the coupling is
// not observable in a splitting and is dropped.
SpectralValue coupling_rate_from_dipole(double mu_debye,
                                        const VacuumField& field);

}  // namespace picoqed

#endif
