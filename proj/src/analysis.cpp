#include "picoqed/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "picoqed/constants.hpp"
#include "picoqed/errors.hpp"

namespace picoqed::analysis {

namespace {

bool parse_double(const std::string& field, double& out) {
  try {
    size_t consumed = 0;
    out = std::stod(field, &consumed);
    while (consumed < field.size() &&
           std::isspace(static_cast<unsigned char>(field[consumed])))
      ++consumed;
    return consumed == field.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> split_fields(const std::string& line) {
  std::string normalized = line;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream ss(normalized);
  std::vector<std::string> fields;
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

// Vertex of the parabola through three points with distinct abscissae.
// Falls back to the middle point when the curvature vanishes.
void parabolic_vertex(double x0, double y0, double x1, double y1, double x2,
                      double y2, double& xv, double& yv) {
  const double d0 = (y1 - y0) / (x1 - x0);
  const double d1 = (y2 - y1) / (x2 - x1);
  const double curv = (d1 - d0) / (x2 - x0);
  if (curv == 0.0) {
    xv = x1;
    yv = y1;
    return;
  }
  xv = 0.5 * (x0 + x1 - d0 / curv);
  const double a = curv;
  const double b = d0 - a * (x0 + x1);
  const double c = y0 - (a * x0 + b) * x0;
  yv = (a * xv + b) * xv + c;
}

double ladder_coefficient(LadderFamily family, int order, int side) {
  if (family == LadderFamily::RabiNSqrtN)
    return side * 0.5 * std::pow(double(order), 1.5);
  return double(side * order);
}

struct Candidate {
  double coupling = 0.0;
  std::vector<MatchedLine> matches;
  std::vector<double> unmatched;
  double rms = 0.0;
};

Candidate match_peaks(std::span<const double> positions, LadderFamily family,
                      double omega0, double coupling, double tolerance,
                      int max_order) {
  Candidate c;
  c.coupling = coupling;
  double sq_sum = 0.0;
  for (double p : positions) {
    const double offset = p - omega0;
    MatchedLine best;
    double best_abs = std::numeric_limits<double>::infinity();
    const int order_lo = family == LadderFamily::Mollow ? 0 : 1;
    for (int order = order_lo; order <= max_order; ++order) {
      for (int side : {-1, 1}) {
        if (order == 0 && side > 0) continue;  // order 0 is one line
        const double pred =
            ladder_coefficient(family, order, side) * coupling;
        const double resid = offset - pred;
        if (std::abs(resid) < best_abs) {
          best_abs = std::abs(resid);
          best = {p, order, order == 0 ? 0 : side, omega0 + pred, resid};
        }
      }
    }
    if (best_abs <= tolerance) {
      c.matches.push_back(best);
      sq_sum += best.residual_cm1 * best.residual_cm1;
    } else {
      c.unmatched.push_back(p);
    }
  }
  c.rms = c.matches.empty() ? std::numeric_limits<double>::infinity()
                            : std::sqrt(sq_sum / c.matches.size());
  return c;
}

// 2-parameter OLS of peak = w0 + coeff * coupling over the matched lines.
// Returns false when the design is rank deficient (all coefficients
// equal, a single point, ...).
bool refit_lines(std::vector<MatchedLine>& matches, LadderFamily family,
                 double& omega0, double& coupling, double& omega0_err,
                 double& coupling_err, double& rms) {
  const size_t m = matches.size();
  if (m < 2) return false;
  double sc = 0.0, scc = 0.0, sy = 0.0, scy = 0.0;
  for (const auto& line : matches) {
    const double coeff =
        ladder_coefficient(family, line.order, line.side);
    sc += coeff;
    scc += coeff * coeff;
    sy += line.peak_cm1;
    scy += coeff * line.peak_cm1;
  }
  const double det = m * scc - sc * sc;
  if (std::abs(det) < 1e-12 * (m * scc + sc * sc + 1e-300)) return false;
  coupling = (m * scy - sc * sy) / det;
  omega0 = (sy - coupling * sc) / m;

  double sse = 0.0;
  for (auto& line : matches) {
    const double coeff =
        ladder_coefficient(family, line.order, line.side);
    line.predicted_cm1 = omega0 + coeff * coupling;
    line.residual_cm1 = line.peak_cm1 - line.predicted_cm1;
    sse += line.residual_cm1 * line.residual_cm1;
  }
  rms = std::sqrt(sse / m);
  const double variance = m > 2 ? sse / (m - 2) : 0.0;
  omega0_err = std::sqrt(variance * scc / det);
  coupling_err = std::sqrt(variance * m / det);
  return true;
}

}  // namespace

Spectrum load_spectrum(std::istream& in, LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    double wl = 0.0, inten = 0.0;
    const bool numeric = fields.size() >= 2 && parse_double(fields[0], wl) &&
                         parse_double(fields[1], inten);
    if (!numeric) {
      if (header_allowed) {  // a single leading text row is a header
        header_allowed = false;
        continue;
      }
      throw ParseError("load_spectrum: cannot parse '" + line + "'", line_no);
    }
    header_allowed = false;
    if (fields.size() > 2)
      throw ParseError("load_spectrum: expected two columns", line_no);
    if (!std::isfinite(wl) || !std::isfinite(inten))
      throw ParseError("load_spectrum: non-finite value", line_no);
    if (wl <= 0.0)
      throw ParseError("load_spectrum: non-positive wavelength", line_no);
    rows.emplace_back(wl, inten);
  }
  if (rows.empty()) throw ParseError("load_spectrum: no data rows", line_no);

  if (!std::is_sorted(rows.begin(), rows.end(),
                      [](const auto& a, const auto& b) {
                        return a.first < b.first;
                      })) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    rep.reordered_rows = 1;
    rep.warnings.push_back("wavelengths were not monotone; rows reordered");
  }

  Spectrum s;
  for (size_t i = 0; i < rows.size();) {
    size_t j = i;
    double sum = 0.0;
    while (j < rows.size() && rows[j].first == rows[i].first) {
      sum += rows[j].second;
      ++j;
    }
    if (j - i > 1) {
      rep.duplicates_averaged += static_cast<int>(j - i - 1);
    }
    s.wavelength_nm.push_back(rows[i].first);
    s.intensity.push_back(sum / (j - i));
    i = j;
  }
  if (rep.duplicates_averaged > 0)
    rep.warnings.push_back("duplicate wavelengths averaged");
  return s;
}

Spectrum load_spectrum_file(const std::string& path, LoadReport* report) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  Spectrum s = load_spectrum(f, report);
  s.label = path;
  return s;
}

std::vector<Peak> detect_peaks_xy(std::span<const double> x,
                                  std::span<const double> y,
                                  double min_prominence_fraction) {
  std::vector<Peak> peaks;
  const size_t n = x.size();
  if (n < 3 || y.size() != n) return peaks;
  const double y_max = *std::max_element(y.begin(), y.end());
  const double threshold = min_prominence_fraction * y_max;

  for (size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1] && y[i] > y[i + 1])) continue;
    // Topographic prominence: lowest point on the way to higher terrain
    // (or to the boundary) on each side, take the higher of the two.
    double left_min = y[i];
    for (size_t j = i; j-- > 0;) {
      left_min = std::min(left_min, y[j]);
      if (y[j] > y[i]) break;
    }
    double right_min = y[i];
    for (size_t j = i + 1; j < n; ++j) {
      right_min = std::min(right_min, y[j]);
      if (y[j] > y[i]) break;
    }
    const double prominence = y[i] - std::max(left_min, right_min);
    if (prominence < threshold) continue;
    double xv = x[i], yv = y[i];
    parabolic_vertex(x[i - 1], y[i - 1], x[i], y[i], x[i + 1], y[i + 1], xv,
                     yv);
    peaks.push_back({xv, yv, prominence});
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    return a.position_cm1 < b.position_cm1;
  });
  return peaks;
}

PeakSet detect_peaks(const Spectrum& s, double min_prominence_fraction) {
  if (s.wavelength_nm.size() < 3)
    throw std::domain_error("detect_peaks: need at least 3 samples");
  // Work in wavenumber space; ascending lambda maps to descending cm^-1,
  // so flip the series.
  const size_t n = s.wavelength_nm.size();
  std::vector<double> x(n), y(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = constants::nm_per_cm / s.wavelength_nm[n - 1 - i];
    y[i] = s.intensity[n - 1 - i];
  }
  return PeakSet{detect_peaks_xy(x, y, min_prominence_fraction)};
}

Assignment assign_ladder(const PeakSet& peaks, LadderFamily family,
                         double omega0_hint_cm1, double tolerance_cm1,
                         int max_order) {
  if (max_order < 1 || max_order > 6)
    throw std::domain_error("assign_ladder: max_order must be in 1..6");
  if (peaks.peaks.size() > 20)
    throw CapacityError("assign_ladder: more than 20 peaks");
  std::vector<double> positions;
  positions.reserve(peaks.peaks.size());
  for (const auto& p : peaks.peaks) positions.push_back(p.position_cm1);
  std::sort(positions.begin(), positions.end());
  if (positions.size() < 2)
    throw NoFitError("assign_ladder: need at least two peaks");

  // Every (peak, order) pair seeds one candidate coupling.
  std::vector<double> seeds;
  for (double p : positions) {
    const double offset = std::abs(p - omega0_hint_cm1);
    if (offset == 0.0) continue;
    for (int order = 1; order <= max_order; ++order)
      seeds.push_back(offset /
                      std::abs(ladder_coefficient(family, order, 1)));
  }
  std::sort(seeds.begin(), seeds.end());
  if (seeds.empty())
    throw NoFitError("assign_ladder: all peaks coincide with the hint");

  // A coupling c with order labels {N} and c/k with labels {k N} predict
  // identical lines, so rms ties are broken toward the larger coupling
  // (the lowest-order labelling).
  Candidate best;
  bool have_best = false;
  for (double coupling : seeds) {
    Candidate c = match_peaks(positions, family, omega0_hint_cm1, coupling,
                              tolerance_cm1, max_order);
    bool better = false;
    if (!have_best || c.matches.size() > best.matches.size()) {
      better = true;
    } else if (c.matches.size() == best.matches.size()) {
      if (c.rms < best.rms - 1e-6)
        better = true;
      else if (std::abs(c.rms - best.rms) <= 1e-6 &&
               c.coupling > best.coupling)
        better = true;
    }
    if (better) {
      best = std::move(c);
      have_best = true;
    }
  }

  Assignment a;
  a.family = family;
  a.omega0_cm1 = omega0_hint_cm1;
  a.coupling_cm1 = best.coupling;
  a.matches = best.matches;
  a.unmatched_cm1 = best.unmatched;
  a.rms_residual_cm1 = best.rms;
  if (best.matches.size() < 2 ||
      !refit_lines(a.matches, family, a.omega0_cm1, a.coupling_cm1,
                   a.omega0_stderr_cm1, a.coupling_stderr_cm1,
                   a.rms_residual_cm1)) {
    throw NoFitError("assign_ladder: underdetermined assignment", a);
  }
  if (a.coupling_cm1 <= 0.0)
    throw NoFitError("assign_ladder: best fit has non-positive coupling", a);
  return a;
}

CollectiveLadderTable extract_collective_ladder(const PeakSet& peaks,
                                                double omega0_cm1,
                                                double pair_tolerance_cm1) {
  std::vector<double> positions;
  for (const auto& p : peaks.peaks) positions.push_back(p.position_cm1);
  std::sort(positions.begin(), positions.end());

  CollectiveLadderTable table;
  table.omega0_cm1 = omega0_cm1;

  // Enumerate symmetric pairs, best-centred first, each peak used once.
  struct PairCandidate {
    size_t i, j;
    double center_offset;
    double splitting;
  };
  std::vector<PairCandidate> candidates;
  for (size_t i = 0; i < positions.size(); ++i)
    for (size_t j = i + 1; j < positions.size(); ++j) {
      const double mid = 0.5 * (positions[i] + positions[j]);
      const double off = std::abs(mid - omega0_cm1);
      if (off <= pair_tolerance_cm1)
        candidates.push_back({i, j, off, positions[j] - positions[i]});
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const PairCandidate& a, const PairCandidate& b) {
              if (a.center_offset != b.center_offset)
                return a.center_offset < b.center_offset;
              return a.splitting < b.splitting;
            });
  std::vector<bool> used(positions.size(), false);
  std::vector<double> splittings;
  for (const auto& c : candidates) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    splittings.push_back(c.splitting);
  }
  for (size_t i = 0; i < positions.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(positions[i] - omega0_cm1) <= pair_tolerance_cm1)
      continue;  // a central line, not an asymmetric leftover
    table.flagged_cm1.push_back(positions[i]);
  }
  std::sort(splittings.begin(), splittings.end());
  if (splittings.empty()) return table;

  table.base_splitting_cm1 = splittings.front();
  for (size_t k = 0; k < splittings.size(); ++k) {
    CollectiveRow row;
    row.order = static_cast<int>(k) + 1;
    row.measured_cm1 = splittings[k];
    row.predicted_cm1 =
        std::pow(double(row.order), 1.5) * table.base_splitting_cm1;
    row.deviation_percent =
        100.0 * (row.measured_cm1 - row.predicted_cm1) / row.predicted_cm1;
    table.rows.push_back(row);
  }
  return table;
}

Spectrum delta_a(const Spectrum& oxidized, const Spectrum& neutral) {
  if (oxidized.wavelength_nm.size() < 2 || neutral.wavelength_nm.size() < 2)
    throw std::domain_error("delta_a: spectra too short");
  const double lo =
      std::max(oxidized.wavelength_nm.front(), neutral.wavelength_nm.front());
  const double hi =
      std::min(oxidized.wavelength_nm.back(), neutral.wavelength_nm.back());
  if (lo >= hi)
    throw std::domain_error("delta_a: wavelength ranges do not overlap");

  const auto mean_step = [](const Spectrum& s) {
    return (s.wavelength_nm.back() - s.wavelength_nm.front()) /
           (s.wavelength_nm.size() - 1);
  };
  const Spectrum& coarse =
      mean_step(oxidized) >= mean_step(neutral) ? oxidized : neutral;

  const auto interpolate = [](const Spectrum& s, double wl) {
    const auto& x = s.wavelength_nm;
    auto it = std::lower_bound(x.begin(), x.end(), wl);
    if (it == x.begin()) ++it;
    const size_t hi_idx = static_cast<size_t>(it - x.begin());
    const size_t lo_idx = hi_idx - 1;
    const double t = (wl - x[lo_idx]) / (x[hi_idx] - x[lo_idx]);
    return (1.0 - t) * s.intensity[lo_idx] + t * s.intensity[hi_idx];
  };

  Spectrum out;
  out.label = "delta_a";
  for (size_t i = 0; i < coarse.wavelength_nm.size(); ++i) {
    const double wl = coarse.wavelength_nm[i];
    if (wl < lo || wl > hi) continue;  // no extrapolation
    out.wavelength_nm.push_back(wl);
    out.intensity.push_back(interpolate(oxidized, wl) -
                            interpolate(neutral, wl));
  }
  if (out.wavelength_nm.size() < 3)
    throw std::domain_error("delta_a: overlap region too small");
  return out;
}

BleachResult rabi_from_bleach(const Spectrum& delta, SpectralValue dark_line) {
  const double dark = to_wavenumber(dark_line);
  const size_t n = delta.wavelength_nm.size();
  if (n < 5) throw std::domain_error("rabi_from_bleach: spectrum too short");
  std::vector<double> x(n), y(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = constants::nm_per_cm / delta.wavelength_nm[n - 1 - i];
    y[i] = delta.intensity[n - 1 - i];
  }
  if (dark <= x.front() || dark >= x.back())
    throw std::domain_error("rabi_from_bleach: dark line outside spectrum");
  const size_t dark_idx = static_cast<size_t>(
      std::lower_bound(x.begin(), x.end(), dark) - x.begin());
  const double valley = y[dark_idx];

  const auto side_max = [&](size_t begin, size_t end) -> std::optional<size_t> {
    std::optional<size_t> best;
    for (size_t i = std::max<size_t>(begin, 1); i + 1 < n && i < end; ++i) {
      if (y[i] > y[i - 1] && y[i] > y[i + 1] && y[i] > valley) {
        if (!best || y[i] > y[*best]) best = i;
      }
    }
    return best;
  };
  const auto lo_idx = side_max(1, dark_idx);
  const auto hi_idx = side_max(dark_idx + 1, n);
  if (!lo_idx || !hi_idx)
    throw NoFitError(
        "rabi_from_bleach: no pair of maxima flanking the dark line");

  double p_minus, h_minus, p_plus, h_plus;
  parabolic_vertex(x[*lo_idx - 1], y[*lo_idx - 1], x[*lo_idx], y[*lo_idx],
                   x[*lo_idx + 1], y[*lo_idx + 1], p_minus, h_minus);
  parabolic_vertex(x[*hi_idx - 1], y[*hi_idx - 1], x[*hi_idx], y[*hi_idx],
                   x[*hi_idx + 1], y[*hi_idx + 1], p_plus, h_plus);

  BleachResult r;
  r.p_plus_cm1 = p_plus;
  r.p_minus_cm1 = p_minus;
  r.rabi_cm1 = p_plus - p_minus;
  r.center_cm1 = 0.5 * (p_plus + p_minus);
  r.asymmetry_ratio = std::abs(r.center_cm1 - dark) / r.rabi_cm1;
  return r;
}

SolutionEnsemble mean_distance(double concentration_mm, double calibration) {
  if (concentration_mm <= 0.0)
    throw std::domain_error("mean_distance: concentration must be > 0");
  if (calibration <= 0.0)
    throw std::domain_error("mean_distance: calibration must be > 0");
  // 1 mM = 1 mol/m^3 exactly.
  const double number_density =
      constants::avogadro_per_mol * concentration_mm;
  const double r_m = std::pow(number_density, -1.0 / 3.0);
  return {concentration_mm, calibration * r_m * 1e10, calibration};
}

ScalingFit scaling_fit(std::span<const std::pair<double, double>> data,
                       ScalingLaw law) {
  if (data.size() < 3)
    throw std::domain_error("scaling_fit: need at least 3 points");
  const double exponent = law == ScalingLaw::SqrtC ? 0.5 : 1.5;
  std::vector<double> x, y;
  for (const auto& [c, omega] : data) {
    if (c <= 0.0)
      throw std::domain_error("scaling_fit: concentrations must be > 0");
    x.push_back(std::pow(c, exponent));
    y.push_back(omega);
  }
  const size_t m = x.size();
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = m * sxx - sx * sx;
  if (std::abs(det) <= 1e-12 * (m * sxx + sx * sx))
    throw std::domain_error("scaling_fit: degenerate abscissae");
  ScalingFit fit;
  fit.slope = (m * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / m;
  double sse = 0.0, sst = 0.0;
  const double y_mean = sy / m;
  for (size_t i = 0; i < m; ++i) {
    const double e = y[i] - (fit.slope * x[i] + fit.intercept);
    sse += e * e;
    sst += (y[i] - y_mean) * (y[i] - y_mean);
  }
  fit.r_squared = sst > 0.0 ? 1.0 - sse / sst : 1.0;
  if (fit.r_squared < 0.0) fit.r_squared = 0.0;
  return fit;
}

ResonanceMatch resonance_match(double a_cm1, double b_cm1,
                               double omega_ref_cm1) {
  if (omega_ref_cm1 <= 0.0)
    throw std::domain_error("resonance_match: reference must be > 0");
  ResonanceMatch r;
  r.detuning_cm1 = a_cm1 - b_cm1;
  r.near_resonant = std::abs(r.detuning_cm1) < 0.5 * omega_ref_cm1;
  return r;
}

}  // namespace picoqed::analysis
