#ifndef PICOQED_UNITS_HPP
#define PICOQED_UNITS_HPP

#include <string>
#include <string_view>

namespace picoqed {

enum class Unit {
  Nanometre,         // wavelength, vacuum
  Wavenumber,        // cm^-1, the canonical internal unit
  ElectronVolt,      // eV
  AngularFrequency,  // rad/s
};

// A spectral quantity tagged with its unit. Splittings, ladders and
// midpoints are always evaluated in wavenumber space: sidebands add in
// energy, not in wavelength.
struct SpectralValue {
  double magnitude = 0.0;
  Unit unit = Unit::Wavenumber;
};

inline SpectralValue wavenumbers(double cm1) {
  return {cm1, Unit::Wavenumber};
}
inline SpectralValue nanometres(double nm) { return {nm, Unit::Nanometre}; }
inline SpectralValue electron_volts(double ev) {
  return {ev, Unit::ElectronVolt};
}

// Converts between any unit pair. Conversions that invert (anything
// involving a wavelength) reject non-positive magnitudes with
// std::domain_error.
SpectralValue convert(SpectralValue v, Unit target);

// Shorthand for convert(v, Wavenumber).magnitude.
double to_wavenumber(SpectralValue v);

// Display helper: the vacuum wavelength of a value, in nm.
double to_nanometre(SpectralValue v);

// |a - b| in wavenumbers.
SpectralValue energy_difference(SpectralValue a, SpectralValue b);

// a - b in wavenumbers, sign kept.
double signed_energy_difference(SpectralValue a, SpectralValue b);

// Arithmetic mean in wavenumber space (not in wavelength space).
SpectralValue midpoint(SpectralValue a, SpectralValue b);

// CLI unit tokens: nm, cm-1, ev, rad-s.
std::string unit_token(Unit u);
Unit parse_unit(std::string_view token);

// Parses "382nm", "1372cm-1", "3.25ev", "1e15rad-s" or a bare number,
// which gets default_unit.
SpectralValue parse_spectral(std::string_view text,
                             Unit default_unit = Unit::Wavenumber);

}  // namespace picoqed

#endif
