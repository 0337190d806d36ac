#include "picoqed/mollow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picoqed {

double generalized_rabi_cm1(const DriveField& d) {
  if (d.rabi_cm1 < 0.0)
    throw std::domain_error("generalized_rabi: negative drive strength");
  return std::hypot(d.rabi_cm1, d.detuning_cm1);
}

TripletLines mollow_triplet_lines(const DriveField& d) {
  const double r = generalized_rabi_cm1(d);
  return {d.omega_l_cm1 - r, d.omega_l_cm1, d.omega_l_cm1 + r};
}

std::vector<SidebandPair> sideband_ladder(const MollowLadder& l) {
  if (l.spacing_cm1 < 0.0)
    throw std::domain_error("sideband_ladder: negative spacing");
  std::vector<SidebandPair> out;
  out.reserve(l.orders.size());
  for (int n : l.orders) {
    if (n < 0) throw std::domain_error("sideband_ladder: negative order");
    out.push_back({n, l.omega0_cm1 - n * l.spacing_cm1,
                   l.omega0_cm1 + n * l.spacing_cm1});
  }
  return out;
}

std::array<double, 5> quintet_lines(double omega0_cm1, double spacing_cm1) {
  if (spacing_cm1 < 0.0)
    throw std::domain_error("quintet_lines: negative spacing");
  return {omega0_cm1 - 2.0 * spacing_cm1, omega0_cm1 - spacing_cm1,
          omega0_cm1, omega0_cm1 + spacing_cm1, omega0_cm1 + 2.0 * spacing_cm1};
}

FrequencySpectrum asymptotic_mollow_spectrum(const DriveField& d,
                                             double gamma_cm1, int grid_points,
                                             double span_rabi,
                                             kernels::Execution exec) {
  if (gamma_cm1 <= 0.0)
    throw std::domain_error("asymptotic_mollow_spectrum: Gamma must be > 0");
  if (grid_points < 3)
    throw std::domain_error("asymptotic_mollow_spectrum: grid too small");
  if (d.detuning_cm1 != 0.0)
    throw std::domain_error(
        "asymptotic_mollow_spectrum: valid on resonance only");
  const double rabi = generalized_rabi_cm1(d);

  FrequencySpectrum s;
  s.asymptotics_reliable = rabi >= 5.0 * gamma_cm1;
  const double span = span_rabi * std::max(rabi, gamma_cm1);
  s.omega_cm1.resize(grid_points);
  for (int i = 0; i < grid_points; ++i)
    s.omega_cm1[i] = -span + 2.0 * span * i / (grid_points - 1);

  const std::array<kernels::LorentzianLine, 3> lines = {{
      {-rabi, 0.25, 0.75 * gamma_cm1},
      {0.0, 0.5, 0.5 * gamma_cm1},
      {rabi, 0.25, 0.75 * gamma_cm1},
  }};
  s.value = kernels::lorentzian_profile(lines, s.omega_cm1, exec);
  return s;
}

}  // namespace picoqed
