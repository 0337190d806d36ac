#ifndef PICOQED_MOLLOW_HPP
#define PICOQED_MOLLOW_HPP

#include <array>
#include <vector>

#include "picoqed/kernels.hpp"

namespace picoqed {

struct DriveField {
  double omega_l_cm1 = 0.0;   // drive frequency
  double rabi_cm1 = 0.0;      // drive strength
  double detuning_cm1 = 0.0;  // w_L - w_0
};

// Generalized Rabi frequency sqrt(Omega^2 + Delta^2).
double generalized_rabi_cm1(const DriveField& d);

struct TripletLines {
  double red_cm1 = 0.0;
  double center_cm1 = 0.0;
  double blue_cm1 = 0.0;
};

// Three lines centred on the drive: w_L - Rabi, w_L, w_L + Rabi.
TripletLines mollow_triplet_lines(const DriveField& d);

// Equally spaced sideband ladder w0 +- N * spacing. The spacing Omega' is
// a separate constant from a vacuum Rabi splitting and never derived from
// one.
struct MollowLadder {
  double omega0_cm1 = 0.0;
  double spacing_cm1 = 0.0;  // Omega'
  std::vector<int> orders;
};

struct SidebandPair {
  int order = 0;
  double red_cm1 = 0.0;
  double blue_cm1 = 0.0;
};

std::vector<SidebandPair> sideband_ladder(const MollowLadder& l);

// {w0 - 2W', w0 - W', w0, w0 + W', w0 + 2W'}: union of the order-1 and
// order-2 triplets sharing the central line, sorted ascending.
std::array<double, 5> quintet_lines(double omega0_cm1, double spacing_cm1);

struct FrequencySpectrum {
  std::vector<double> omega_cm1;  // offsets from the drive
  std::vector<double> value;
  bool asymptotics_reliable = true;
};

// Strong-drive (Omega >> Gamma) incoherent resonance-fluorescence limit:
// central Lorentzian of area 1/2 and half-width Gamma/2 plus sidebands of
// area 1/4 and half-width 3*Gamma/4 at +-Rabi, sampled over
// +- span * Rabi around the drive. For Omega < 5*Gamma the reliable flag
// is cleared; the master-equation engine is the tool for that regime.
FrequencySpectrum asymptotic_mollow_spectrum(
    const DriveField& d, double gamma_cm1, int grid_points,
    double span_rabi = 3.0,
    kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace picoqed

#endif
