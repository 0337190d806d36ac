#include "picoqed/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "picoqed/constants.hpp"

namespace picoqed {

namespace {

bool involves_inversion(Unit a, Unit b) {
  return (a == Unit::Nanometre) != (b == Unit::Nanometre);
}

double wavenumber_from(SpectralValue v) {
  switch (v.unit) {
    case Unit::Wavenumber:
      return v.magnitude;
    case Unit::Nanometre:
      return constants::nm_per_cm / v.magnitude;
    case Unit::ElectronVolt:
      return v.magnitude * constants::wavenumbers_per_ev;
    case Unit::AngularFrequency:
      return v.magnitude / constants::rad_per_s_per_wavenumber;
  }
  throw std::logic_error("unreachable unit");
}

double wavenumber_to(double cm1, Unit target) {
  switch (target) {
    case Unit::Wavenumber:
      return cm1;
    case Unit::Nanometre:
      return constants::nm_per_cm / cm1;
    case Unit::ElectronVolt:
      return cm1 / constants::wavenumbers_per_ev;
    case Unit::AngularFrequency:
      return cm1 * constants::rad_per_s_per_wavenumber;
  }
  throw std::logic_error("unreachable unit");
}

}  // namespace

SpectralValue convert(SpectralValue v, Unit target) {
  if (!std::isfinite(v.magnitude))
    throw std::domain_error("convert: non-finite magnitude");
  if (v.unit == target) return v;
  if (involves_inversion(v.unit, target) && v.magnitude <= 0.0)
    throw std::domain_error(
        "convert: wavelength conversions require a positive magnitude");
  return {wavenumber_to(wavenumber_from(v), target), target};
}

double to_wavenumber(SpectralValue v) {
  return convert(v, Unit::Wavenumber).magnitude;
}

double to_nanometre(SpectralValue v) {
  return convert(v, Unit::Nanometre).magnitude;
}

SpectralValue energy_difference(SpectralValue a, SpectralValue b) {
  return wavenumbers(std::abs(signed_energy_difference(a, b)));
}

double signed_energy_difference(SpectralValue a, SpectralValue b) {
  return to_wavenumber(a) - to_wavenumber(b);
}

SpectralValue midpoint(SpectralValue a, SpectralValue b) {
  return wavenumbers(0.5 * (to_wavenumber(a) + to_wavenumber(b)));
}

std::string unit_token(Unit u) {
  switch (u) {
    case Unit::Nanometre:
      return "nm";
    case Unit::Wavenumber:
      return "cm-1";
    case Unit::ElectronVolt:
      return "ev";
    case Unit::AngularFrequency:
      return "rad-s";
  }
  throw std::logic_error("unreachable unit");
}

Unit parse_unit(std::string_view token) {
  std::string t;
  t.reserve(token.size());
  for (char c : token) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "nm") return Unit::Nanometre;
  if (t == "cm-1" || t == "cm^-1" || t == "1/cm") return Unit::Wavenumber;
  if (t == "ev") return Unit::ElectronVolt;
  if (t == "rad-s" || t == "rad/s") return Unit::AngularFrequency;
  throw std::invalid_argument("unknown unit token '" + std::string(token) +
                              "' (expected nm, cm-1, ev or rad-s)");
}

SpectralValue parse_spectral(std::string_view text, Unit default_unit) {
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  double value = 0.0;
  auto [rest, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || rest == begin)
    throw std::invalid_argument("cannot parse spectral value '" +
                                std::string(text) + "'");
  std::string_view suffix(rest, static_cast<size_t>(end - rest));
  while (!suffix.empty() &&
         std::isspace(static_cast<unsigned char>(suffix.front())))
    suffix.remove_prefix(1);
  while (!suffix.empty() &&
         std::isspace(static_cast<unsigned char>(suffix.back())))
    suffix.remove_suffix(1);
  if (suffix.empty()) return {value, default_unit};
  return {value, parse_unit(suffix)};
}

}  // namespace picoqed
