#ifndef PICOQED_CONSTANTS_HPP
#define PICOQED_CONSTANTS_HPP

#include <numbers>

// CODATA 2018 values. Every conversion factor used anywhere in the library
// comes from this table; nothing is re-derived locally.
namespace picoqed::constants {

inline constexpr double speed_of_light_m_per_s = 299792458.0;
inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double hbar_j_s = planck_j_s / (2.0 * std::numbers::pi);
inline constexpr double vacuum_permittivity_f_per_m = 8.8541878128e-12;
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double avogadro_per_mol = 6.02214076e23;

// 1 eV expressed in wavenumbers.
inline constexpr double wavenumbers_per_ev = 8065.543937;

// 1 debye in C·m (1e-21 / c).
inline constexpr double debye_c_m = 1.0e-21 / speed_of_light_m_per_s;

// Angular frequency per wavenumber: 2*pi*c with c in cm/s.
inline constexpr double rad_per_s_per_wavenumber =
    2.0 * std::numbers::pi * speed_of_light_m_per_s * 100.0;

// nm <-> cm^-1 inversion constant: sigma[cm^-1] = nm_per_cm / lambda[nm].
inline constexpr double nm_per_cm = 1.0e7;

}  // namespace picoqed::constants

#endif
