#ifndef PICOQED_ANALYSIS_HPP
#define PICOQED_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "picoqed/units.hpp"

namespace picoqed::analysis {

// A sampled (wavelength, intensity) series. Wavelengths strictly increase
// after loading.
struct Spectrum {
  std::vector<double> wavelength_nm;
  std::vector<double> intensity;
  std::string label;
  std::optional<double> excitation_nm;
  std::optional<double> concentration_mm;
};

struct LoadReport {
  int reordered_rows = 0;
  int duplicates_averaged = 0;
  std::vector<std::string> warnings;
};

// Two numeric columns (wavelength_nm, intensity), comma or whitespace
// separated, '#' comments, an optional header row auto-detected. Throws
// ParseError with the offending line number on malformed input;
// out-of-order rows are sorted and duplicate wavelengths averaged, both
// with a warning in the report.
Spectrum load_spectrum(std::istream& in, LoadReport* report = nullptr);
Spectrum load_spectrum_file(const std::string& path,
                            LoadReport* report = nullptr);

struct Peak {
  double position_cm1 = 0.0;
  double height = 0.0;
  double prominence = 0.0;
};

struct PeakSet {
  std::vector<Peak> peaks;  // sorted by position ascending
};

// Local maxima with topographic prominence of at least
// min_prominence_fraction times the maximum intensity. Positions are
// refined by a 3-point parabola in wavenumber space. An empty result is
// not an error.
PeakSet detect_peaks(const Spectrum& s, double min_prominence_fraction);

// Same detector on an arbitrary sampled (x, y) series; x need not be
// uniform but must be strictly monotone.
std::vector<Peak> detect_peaks_xy(std::span<const double> x,
                                  std::span<const double> y,
                                  double min_prominence_fraction);

enum class LadderFamily {
  RabiNSqrtN,  // lines w0 +- N^{3/2} Omega0 / 2
  Mollow,      // lines w0 +- N Omega'
};

struct MatchedLine {
  double peak_cm1 = 0.0;
  int order = 0;
  int side = 0;  // -1, 0, +1
  double predicted_cm1 = 0.0;
  double residual_cm1 = 0.0;
};

struct Assignment {
  LadderFamily family = LadderFamily::RabiNSqrtN;
  double omega0_cm1 = 0.0;
  double coupling_cm1 = 0.0;  // Omega0 or Omega'
  double omega0_stderr_cm1 = 0.0;
  double coupling_stderr_cm1 = 0.0;
  double rms_residual_cm1 = 0.0;
  std::vector<MatchedLine> matches;
  std::vector<double> unmatched_cm1;
};

// No assignment satisfied the tolerance window; carries the best
// candidate found so the caller can inspect how close it came.
class NoFitError : public std::runtime_error {
 public:
  explicit NoFitError(const std::string& what,
                      std::optional<Assignment> best = std::nullopt)
      : std::runtime_error(what), best_candidate(std::move(best)) {}
  std::optional<Assignment> best_candidate;
};

// Exhaustive search over ladder order labels up to max_order: every
// (peak, order) pair seeds a candidate coupling, peaks are matched to
// their nearest line, and the candidate with the most matches (ties by
// rms, then by coupling) wins. The winner's (w0, coupling) are then
// refit jointly by least squares over the matched lines.
Assignment assign_ladder(const PeakSet& peaks, LadderFamily family,
                         double omega0_hint_cm1, double tolerance_cm1 = 300.0,
                         int max_order = 6);

struct CollectiveRow {
  int order = 0;
  double measured_cm1 = 0.0;
  double predicted_cm1 = 0.0;  // N^{3/2} times the order-1 splitting
  double deviation_percent = 0.0;
};

struct CollectiveLadderTable {
  double omega0_cm1 = 0.0;
  double base_splitting_cm1 = 0.0;
  std::vector<CollectiveRow> rows;
  // Peaks that could not be paired symmetrically about w0 (midpoint off
  // by more than the tolerance); excluded from the rows.
  std::vector<double> flagged_cm1;
};

// Pairs peaks symmetrically about w0, orders the pairs by splitting, and
// compares each splitting with the N^{3/2} prediction anchored on the
// innermost pair.
CollectiveLadderTable extract_collective_ladder(const PeakSet& peaks,
                                                double omega0_cm1,
                                                double pair_tolerance_cm1 =
                                                    300.0);

// Pointwise oxidized - neutral difference on the overlap range, resampled
// by linear interpolation onto the coarser of the two grids. No
// extrapolation ever happens.
Spectrum delta_a(const Spectrum& oxidized, const Spectrum& neutral);

struct BleachResult {
  double p_plus_cm1 = 0.0;
  double p_minus_cm1 = 0.0;
  double rabi_cm1 = 0.0;    // P+ - P-
  double center_cm1 = 0.0;  // midpoint
  // |center - dark| / rabi; large values signal far-off-resonant coupling.
  double asymmetry_ratio = 0.0;
};

// The two difference-spectrum maxima flanking the bleached dark line.
// Throws NoFitError when either side has no maximum above the valley.
BleachResult rabi_from_bleach(const Spectrum& delta, SpectralValue dark_line);

struct SolutionEnsemble {
  double concentration_mm = 0.0;
  double mean_distance_angstrom = 0.0;
  double calibration = 1.0;
};

// Simple cubic number-density estimate R = cal * (N_A C)^{-1/3}. The
// published data this pipeline is aimed at implies cal ~ 0.93; 1.0 stays
// the default.
SolutionEnsemble mean_distance(double concentration_mm,
                               double calibration = 1.0);

enum class ScalingLaw { SqrtC, CSqrtC };

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of coupling against C^{1/2} or C^{3/2}.
ScalingFit scaling_fit(std::span<const std::pair<double, double>> data,
                       ScalingLaw law);

struct ResonanceMatch {
  double detuning_cm1 = 0.0;  // a - b, sign kept
  bool near_resonant = false;
};

// near-resonant iff |a - b| < omega_ref / 2.
ResonanceMatch resonance_match(double a_cm1, double b_cm1,
                               double omega_ref_cm1);

}  // namespace picoqed::analysis

#endif
