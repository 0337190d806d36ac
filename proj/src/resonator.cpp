#include "picoqed/resonator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "picoqed/constants.hpp"

namespace picoqed {

double interfacial_gap_nm(const ResonatorGeometry& geom) {
  if (geom.ionic_radius_nm < 0.0 || geom.atom_separation_nm <= 0.0)
    throw std::domain_error("interfacial_gap: non-positive geometry");
  const double d = geom.atom_separation_nm - 2.0 * geom.ionic_radius_nm;
  if (d <= 0.0)
    throw std::domain_error("interfacial_gap: contact regime (D <= 2R)");
  return d;
}

double mode_volume_nm3(const ResonatorGeometry& geom) {
  const double d = interfacial_gap_nm(geom);
  return std::numbers::pi * geom.ionic_radius_nm * geom.ionic_radius_nm * d;
}

double quality_factor(SpectralValue center, SpectralValue fwhm) {
  const double c = to_wavenumber(center);
  const double w = to_wavenumber(fwhm);
  if (w <= 0.0) throw std::domain_error("quality_factor: non-positive width");
  return c / w;
}

double purcell_factor(SpectralValue lambda, double n_medium, double q,
                      double volume_nm3) {
  const double lambda_nm = to_nanometre(lambda);
  if (lambda_nm <= 0.0 || n_medium <= 0.0 || q <= 0.0 || volume_nm3 <= 0.0)
    throw std::domain_error("purcell_factor: all inputs must be positive");
  const double lam = lambda_nm / n_medium;
  return 3.0 / (4.0 * std::numbers::pi * std::numbers::pi) * lam * lam * lam *
         q / volume_nm3;
}

VacuumField vacuum_field_amplitude(SpectralValue omega, double volume_nm3) {
  if (volume_nm3 <= 0.0)
    throw std::domain_error("vacuum_field_amplitude: non-positive volume");
  const double w =
      convert(omega, Unit::AngularFrequency).magnitude;  // rejects w <= 0
  if (w <= 0.0)
    throw std::domain_error("vacuum_field_amplitude: non-positive frequency");
  const double volume_m3 = volume_nm3 * 1e-27;
  const double e0 = std::sqrt(
      constants::hbar_j_s * w /
      (2.0 * constants::vacuum_permittivity_f_per_m * volume_m3));
  return {e0, w};
}

SpectralValue coupling_rate_from_dipole(double mu_debye,
                                        const VacuumField& field) {
  if (mu_debye <= 0.0)
    throw std::domain_error("coupling_rate_from_dipole: non-positive dipole");
  if (field.amplitude_v_per_m <= 0.0)
    throw std::domain_error("coupling_rate_from_dipole: non-positive field");
  const double g_rad_per_s =
      mu_debye * constants::debye_c_m * field.amplitude_v_per_m /
      constants::hbar_j_s;
  return wavenumbers(g_rad_per_s / constants::rad_per_s_per_wavenumber);
}

}  // namespace picoqed
