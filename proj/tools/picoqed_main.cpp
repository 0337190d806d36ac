// picoqed command-line front end: line-position models, the resonator
// figures of merit, the master-equation simulator and the spectrum
// analysis pipeline behind one binary.
//
// Exit codes: 0 success, 1 domain/no-fit/parse failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "picoqed/analysis.hpp"
#include "picoqed/collective.hpp"
#include "picoqed/errors.hpp"
#include "picoqed/jc_ladder.hpp"
#include "picoqed/lindblad.hpp"
#include "picoqed/mollow.hpp"
#include "picoqed/resonator.hpp"
#include "picoqed/units.hpp"

using json = nlohmann::ordered_json;
using namespace picoqed;

namespace {

struct GlobalOptions {
  bool json_output = false;
  int precision = 6;
};

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

void emit(const GlobalOptions& g, const json& summary,
          const std::function<void()>& print_table) {
  if (g.json_output)
    std::cout << summary.dump(2) << "\n";
  else
    print_table();
}

double cm1_of(const std::string& text) {
  return to_wavenumber(parse_spectral(text, Unit::Wavenumber));
}

std::string regime_name(CouplingRegime r) {
  return r == CouplingRegime::Ultrastrong ? "ultrastrong" : "weak-or-strong";
}

std::vector<std::pair<double, double>> load_xy_pairs(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(f, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::string a, b;
    if (!(ss >> a)) continue;
    ss >> b;
    try {
      rows.emplace_back(std::stod(a), std::stod(b));
      header_allowed = false;
    } catch (const std::exception&) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw ParseError("fit-scaling: cannot parse '" + line + "'", line_no);
    }
  }
  return rows;
}

json spectrum_summary(const std::vector<double>& omega,
                      const std::vector<double>& value) {
  const auto peaks = analysis::detect_peaks_xy(omega, value, 0.02);
  json out = json::array();
  for (const auto& p : peaks)
    out.push_back({{"position_cm1", p.position_cm1}, {"height", p.height}});
  return out;
}

// Ratio of the central peak to the mean sideband height, when the
// spectrum has the three-peak shape.
std::optional<double> triplet_ratio(const std::vector<analysis::Peak>& peaks) {
  if (peaks.size() < 3) return std::nullopt;
  const analysis::Peak* central = nullptr;
  double best = 1e300;
  for (const auto& p : peaks) {
    if (std::abs(p.position_cm1) < best) {
      best = std::abs(p.position_cm1);
      central = &p;
    }
  }
  double side_sum = 0.0;
  int side_count = 0;
  for (const auto& p : peaks) {
    if (&p == central) continue;
    side_sum += p.height;
    ++side_count;
  }
  if (!central || side_count == 0) return std::nullopt;
  return central->height / (side_sum / side_count);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavity-QED line positions, resonance fluorescence and "
               "spectral analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json_output, "emit a JSON record");
  app.add_option("--precision", global.precision,
                 "significant digits in tables (JSON is full precision)")
      ->check(CLI::Range(1, 17));

  std::function<int()> action;

  // ---- convert ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("convert", "convert a spectral value");
    auto value = std::make_shared<double>(0.0);
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    cmd->add_option("--value", *value, "magnitude")->required();
    cmd->add_option("--from", *from, "unit: nm, cm-1, ev, rad-s")->required();
    cmd->add_option("--to", *to, "unit: nm, cm-1, ev, rad-s")->required();
    cmd->callback([&, value, from, to] {
      action = [&, value, from, to] {
        const Unit src = parse_unit(*from);
        const Unit dst = parse_unit(*to);
        const SpectralValue result = convert({*value, src}, dst);
        emit(global,
             {{"command", "convert"},
              {"value", *value},
              {"from", unit_token(src)},
              {"to", unit_token(dst)},
              {"result", result.magnitude},
              {"unit", unit_token(dst)}},
             [&] {
               std::cout << fmt(result.magnitude, global.precision) << " "
                         << unit_token(dst) << "\n";
             });
        return 0;
      };
    });
  }

  // ---- geometry ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "geometry", "gap, mode volume, vacuum field and coupling rate");
    auto d = std::make_shared<double>(0.0);
    auto r = std::make_shared<double>(0.0);
    auto lambda = std::make_shared<double>(380.0);
    auto mu = std::make_shared<double>(1.0);
    cmd->add_option("--d-nm", *d, "centre separation D in nm")->required();
    cmd->add_option("--r-nm", *r, "ionic radius R in nm")->required();
    cmd->add_option("--lambda-nm", *lambda, "mode wavelength in nm");
    cmd->add_option("--mu-debye", *mu, "transition dipole in debye");
    cmd->callback([&, d, r, lambda, mu] {
      action = [&, d, r, lambda, mu] {
        const ResonatorGeometry geom{*d, *r};
        const double gap = interfacial_gap_nm(geom);
        const double volume = mode_volume_nm3(geom);
        const VacuumField field =
            vacuum_field_amplitude(nanometres(*lambda), volume);
        const double g = coupling_rate_from_dipole(*mu, field).magnitude;
        emit(global,
             {{"command", "geometry"},
              {"gap_nm", gap},
              {"mode_volume_nm3", volume},
              {"vacuum_field_v_per_m", field.amplitude_v_per_m},
              {"coupling_cm1", g}},
             [&] {
               std::cout << "gap_nm            "
                         << fmt(gap, global.precision) << "\n"
                         << "mode_volume_nm3   "
                         << fmt(volume, global.precision) << "\n"
                         << "vacuum_field_V_m  "
                         << fmt(field.amplitude_v_per_m, global.precision)
                         << "\n"
                         << "coupling_cm1      " << fmt(g, global.precision)
                         << "\n";
             });
        return 0;
      };
    });
  }

  // ---- purcell ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("purcell", "Purcell enhancement factor");
    auto lambda = std::make_shared<double>(0.0);
    auto n = std::make_shared<double>(1.0);
    auto q = std::make_shared<double>(0.0);
    auto v = std::make_shared<double>(0.0);
    cmd->add_option("--lambda-nm", *lambda, "wavelength in nm")->required();
    cmd->add_option("--n", *n, "refractive index");
    cmd->add_option("--q", *q, "quality factor")->required();
    cmd->add_option("--volume-nm3", *v, "mode volume in nm^3")->required();
    cmd->callback([&, lambda, n, q, v] {
      action = [&, lambda, n, q, v] {
        const double fp = purcell_factor(nanometres(*lambda), *n, *q, *v);
        emit(global,
             {{"command", "purcell"}, {"purcell_factor", fp}},
             [&] {
               std::cout << fmt(fp, global.precision) << "\n";
             });
        return 0;
      };
    });
  }

  // ---- jc-ladder --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("jc-ladder",
                                   "dressed-state energies per excitation");
    auto mode = std::make_shared<std::string>();
    auto atom = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    auto n_max = std::make_shared<int>(4);
    cmd->add_option("--omega-mode", *mode, "mode frequency")->required();
    cmd->add_option("--omega-atom", *atom, "emitter frequency")->required();
    cmd->add_option("--g", *g, "coupling g")->required();
    cmd->add_option("--n-max", *n_max, "largest excitation number");
    cmd->callback([&, mode, atom, g, n_max] {
      action = [&, mode, atom, g, n_max] {
        const JCParameters p{cm1_of(*mode), cm1_of(*atom), cm1_of(*g)};
        json rows = json::array();
        for (int n = 1; n <= *n_max; ++n) {
          const DressedDoublet d = dressed_energies(p, n);
          rows.push_back({{"n", n},
                          {"e_minus_cm1", d.e_minus_cm1},
                          {"e_plus_cm1", d.e_plus_cm1},
                          {"splitting_cm1", d.splitting_cm1}});
        }
        emit(global, {{"command", "jc-ladder"}, {"rows", rows}}, [&] {
          std::cout << "n   E-_cm1        E+_cm1        splitting_cm1\n";
          for (int n = 1; n <= *n_max; ++n) {
            const DressedDoublet d = dressed_energies(p, n);
            std::printf("%-3d %-13s %-13s %s\n", n,
                        fmt(d.e_minus_cm1, global.precision).c_str(),
                        fmt(d.e_plus_cm1, global.precision).c_str(),
                        fmt(d.splitting_cm1, global.precision).c_str());
          }
        });
        return 0;
      };
    });
  }

  // ---- doublet ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("doublet", "Rabi doublet line positions");
    auto omega0 = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>();
    cmd->add_option("--omega0", *omega0, "bare line")->required();
    cmd->add_option("--omega", *omega, "splitting")->required();
    cmd->callback([&, omega0, omega] {
      action = [&, omega0, omega] {
        const DoubletLines d =
            rabi_doublet_lines(cm1_of(*omega0), cm1_of(*omega));
        emit(global,
             {{"command", "doublet"},
              {"p_plus_cm1", d.p_plus_cm1},
              {"p_minus_cm1", d.p_minus_cm1},
              {"p_plus_nm", to_nanometre(wavenumbers(d.p_plus_cm1))},
              {"p_minus_nm", to_nanometre(wavenumbers(d.p_minus_cm1))}},
             [&] {
               std::printf(
                   "P+  %s cm-1  (%s nm)\nP-  %s cm-1  (%s nm)\n",
                   fmt(d.p_plus_cm1, global.precision).c_str(),
                   fmt(to_nanometre(wavenumbers(d.p_plus_cm1)),
                       global.precision)
                       .c_str(),
                   fmt(d.p_minus_cm1, global.precision).c_str(),
                   fmt(to_nanometre(wavenumbers(d.p_minus_cm1)),
                       global.precision)
                       .c_str());
             });
        return 0;
      };
    });
  }

  // ---- collective -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "collective", "N-ensemble ladders: N^{3/2} model or Tavis-Cummings");
    auto omega0 = std::make_shared<std::string>();
    auto coupling = std::make_shared<std::string>();
    auto n_max = std::make_shared<int>(4);
    auto model = std::make_shared<std::string>("nsqrtn");
    cmd->add_option("--omega0", *omega0, "resonance")->required();
    cmd->add_option("--coupling", *coupling,
                    "Omega0 for nsqrtn; g for tavis-cummings")
        ->required();
    cmd->add_option("--n-max", *n_max, "largest ensemble size");
    cmd->add_option("--model", *model, "nsqrtn or tavis-cummings")
        ->check(CLI::IsMember({"nsqrtn", "tavis-cummings"}));
    cmd->callback([&, omega0, coupling, n_max, model] {
      action = [&, omega0, coupling, n_max, model] {
        const double w0 = cm1_of(*omega0);
        const double c = cm1_of(*coupling);
        if (*model == "nsqrtn") {
          const auto ladder =
              collective_doublet_ladder({1, c, w0}, *n_max);
          json rows = json::array();
          for (const auto& d : ladder) {
            rows.push_back(
                {{"n", d.order},
                 {"splitting_cm1", collective_rabi_cm1({d.order, c, w0})},
                 {"p_plus_cm1", d.p_plus_cm1},
                 {"p_minus_cm1", d.p_minus_cm1},
                 {"p_plus_nm", to_nanometre(wavenumbers(d.p_plus_cm1))},
                 {"p_minus_nm", to_nanometre(wavenumbers(d.p_minus_cm1))}});
          }
          emit(global,
               {{"command", "collective"}, {"model", "nsqrtn"}, {"rows", rows}},
               [&] {
                 std::cout << "N   splitting_cm1  P+_cm1 (nm)          "
                              "P-_cm1 (nm)\n";
                 for (const auto& d : ladder) {
                   std::printf(
                       "%-3d %-14s %s (%s)   %s (%s)\n", d.order,
                       fmt(collective_rabi_cm1({d.order, c, w0}),
                           global.precision)
                           .c_str(),
                       fmt(d.p_plus_cm1, global.precision).c_str(),
                       fmt(to_nanometre(wavenumbers(d.p_plus_cm1)),
                           global.precision)
                           .c_str(),
                       fmt(d.p_minus_cm1, global.precision).c_str(),
                       fmt(to_nanometre(wavenumbers(d.p_minus_cm1)),
                           global.precision)
                           .c_str());
                 }
               });
        } else {
          const auto table = collective_comparison_table(w0, c, c, *n_max);
          json rows = json::array();
          for (const auto& row : table)
            rows.push_back({{"n", row.order},
                            {"tavis_cummings_cm1", row.tavis_cummings_cm1},
                            {"nsqrtn_cm1", row.nsqrtn_cm1},
                            {"ratio", row.ratio}});
          emit(global,
               {{"command", "collective"},
                {"model", "tavis-cummings"},
                {"rows", rows}},
               [&] {
                 std::cout
                     << "N   tavis_cummings_cm1  nsqrtn_cm1   ratio\n";
                 for (const auto& row : table)
                   std::printf("%-3d %-19s %-12s %s\n", row.order,
                               fmt(row.tavis_cummings_cm1, global.precision)
                                   .c_str(),
                               fmt(row.nsqrtn_cm1, global.precision).c_str(),
                               fmt(row.ratio, global.precision).c_str());
               });
        }
        return 0;
      };
    });
  }

  // ---- eta --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("eta", "normalized coupling rate");
    auto splitting = std::make_shared<std::string>();
    auto omega0 = std::make_shared<std::string>();
    cmd->add_option("--splitting", *splitting, "measured splitting")
        ->required();
    cmd->add_option("--omega0", *omega0, "resonance")->required();
    cmd->callback([&, splitting, omega0] {
      action = [&, splitting, omega0] {
        const auto a = assess_coupling(cm1_of(*splitting), cm1_of(*omega0));
        emit(global,
             {{"command", "eta"},
              {"eta", a.eta},
              {"regime", regime_name(a.regime)}},
             [&] {
               std::cout << "eta     " << fmt(a.eta, global.precision)
                         << "\nregime  " << regime_name(a.regime) << "\n";
             });
        return 0;
      };
    });
  }

  // ---- mollow -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("mollow", "sideband ladder positions");
    auto omega0 = std::make_shared<std::string>();
    auto spacing = std::make_shared<std::string>();
    auto orders = std::make_shared<int>(3);
    auto side = std::make_shared<std::string>("both");
    cmd->add_option("--omega0", *omega0, "ladder centre")->required();
    cmd->add_option("--omega-prime", *spacing, "sideband spacing in cm-1")
        ->required();
    cmd->add_option("--orders", *orders, "highest order N");
    cmd->add_option("--side", *side, "red, blue or both")
        ->check(CLI::IsMember({"red", "blue", "both"}));
    cmd->callback([&, omega0, spacing, orders, side] {
      action = [&, omega0, spacing, orders, side] {
        MollowLadder l{cm1_of(*omega0), cm1_of(*spacing), {}};
        for (int n = 1; n <= *orders; ++n) l.orders.push_back(n);
        const auto pairs = sideband_ladder(l);
        json rows = json::array();
        for (const auto& p : pairs) {
          json row{{"order", p.order}};
          if (*side != "blue") {
            row["red_cm1"] = p.red_cm1;
            row["red_nm"] = to_nanometre(wavenumbers(p.red_cm1));
          }
          if (*side != "red") {
            row["blue_cm1"] = p.blue_cm1;
            row["blue_nm"] = to_nanometre(wavenumbers(p.blue_cm1));
          }
          rows.push_back(row);
        }
        emit(global,
             {{"command", "mollow"},
              {"omega0_cm1", l.omega0_cm1},
              {"omega_prime_cm1", l.spacing_cm1},
              {"rows", rows}},
             [&] {
               for (const auto& p : pairs) {
                 std::printf("N=%d", p.order);
                 if (*side != "blue")
                   std::printf("  red %s cm-1 (%s nm)",
                               fmt(p.red_cm1, global.precision).c_str(),
                               fmt(to_nanometre(wavenumbers(p.red_cm1)),
                                   global.precision)
                                   .c_str());
                 if (*side != "red")
                   std::printf("  blue %s cm-1 (%s nm)",
                               fmt(p.blue_cm1, global.precision).c_str(),
                               fmt(to_nanometre(wavenumbers(p.blue_cm1)),
                                   global.precision)
                                   .c_str());
                 std::printf("\n");
               }
             });
        return 0;
      };
    });
  }

  // ---- mollow-spectrum --------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "mollow-spectrum", "strong-drive three-Lorentzian spectrum");
    auto rabi = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(0.0);
    auto points = std::make_shared<int>(1201);
    auto span = std::make_shared<double>(3.0);
    cmd->add_option("--rabi", *rabi, "drive Rabi frequency in cm-1")
        ->required();
    cmd->add_option("--gamma", *gamma, "decay rate in cm-1")->required();
    cmd->add_option("--grid-points", *points, "samples across the window");
    cmd->add_option("--span", *span, "window half-width in units of Rabi");
    cmd->callback([&, rabi, gamma, points, span] {
      action = [&, rabi, gamma, points, span] {
        const auto s = asymptotic_mollow_spectrum({0.0, *rabi, 0.0}, *gamma,
                                                  *points, *span);
        const json peaks = spectrum_summary(s.omega_cm1, s.value);
        emit(global,
             {{"command", "mollow-spectrum"},
              {"reliable", s.asymptotics_reliable},
              {"peaks", peaks},
              {"omega_offset_cm1", s.omega_cm1},
              {"intensity", s.value}},
             [&] {
               if (!s.asymptotics_reliable)
                 std::cerr << "warning: Omega < 5 Gamma; asymptotic shape "
                              "unreliable, use 'simulate mollow'\n";
               for (size_t i = 0; i < s.omega_cm1.size(); ++i)
                 std::printf("%s %s\n",
                             fmt(s.omega_cm1[i], global.precision).c_str(),
                             fmt(s.value[i], global.precision).c_str());
             });
        return 0;
      };
    });
  }

  // ---- simulate ---------------------------------------------------------
  {
    auto* sim = app.add_subcommand(
        "simulate", "dissipative two-level dynamics (master equation)");
    sim->require_subcommand(1);

    auto rabi = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(1.0);
    auto detuning = std::make_shared<double>(0.0);
    auto grid = std::make_shared<int>(1201);
    auto tmax = std::make_shared<double>(0.0);
    auto tau_steps = std::make_shared<int>(8001);
    auto omega_l = std::make_shared<std::string>();
    auto dd = std::make_shared<double>(0.0);
    auto cross = std::make_shared<double>(0.0);
    auto emitters = std::make_shared<int>(1);

    auto add_common = [&](CLI::App* c) {
      c->add_option("--rabi", *rabi, "drive Rabi frequency in cm-1")
          ->required();
      c->add_option("--gamma", *gamma, "decay rate in cm-1");
      c->add_option("--detuning", *detuning, "w_L - w_0 in cm-1");
      c->add_option("--tmax", *tmax,
                    "correlation window (internal 1/cm-1 time units; "
                    "0 = auto)");
      c->add_option("--tau-steps", *tau_steps, "correlation samples");
      c->add_option("--emitters", *emitters, "1 or 2")
          ->check(CLI::IsMember({1, 2}));
      c->add_option("--dd-coupling", *dd,
                    "two-emitter exchange coupling in cm-1");
      c->add_option("--cross-decay", *cross,
                    "two-emitter cross decay in cm-1");
    };

    auto make_problem = [=]() {
      return *emitters == 2
                 ? lindblad::two_emitter_problem(*rabi, *detuning, *gamma,
                                                 *dd, *cross)
                 : lindblad::driven_tls_problem(*rabi, *detuning, *gamma);
    };

    auto* mollow_cmd =
        sim->add_subcommand("mollow", "incoherent emission spectrum");
    add_common(mollow_cmd);
    mollow_cmd->add_option("--grid", *grid, "spectral grid points");
    mollow_cmd->add_option("--omega-l", *omega_l,
                           "absolute drive position for display");
    mollow_cmd->callback([&, rabi, gamma, detuning, grid, tmax, tau_steps,
                          omega_l, make_problem] {
      action = [&, rabi, gamma, detuning, grid, tmax, tau_steps, omega_l,
                make_problem] {
        const auto p = make_problem();
        const double horizon =
            *tmax > 0.0 ? *tmax : 40.0 / std::max(*gamma, 1e-12);
        const auto tau = lindblad::linear_grid(0.0, horizon, *tau_steps);
        const auto g1 = lindblad::correlation_g1(p, tau);
        const double rabi_bar =
            generalized_rabi_cm1({0.0, *rabi, *detuning});
        const double span = 3.0 * std::max(rabi_bar, *gamma);
        const auto omega = lindblad::linear_grid(-span, span, *grid);
        const auto spec = lindblad::spectrum_from_g1(g1, omega);
        const double shift =
            omega_l->empty() ? 0.0 : cm1_of(*omega_l);

        std::vector<double> display(omega);
        for (double& w : display) w += shift;
        const auto peaks =
            analysis::detect_peaks_xy(spec.omega_cm1, spec.value, 0.02);
        json peaks_json = json::array();
        for (const auto& pk : peaks)
          peaks_json.push_back({{"position_cm1", pk.position_cm1 + shift},
                                {"height", pk.height}});
        json summary{{"command", "simulate mollow"},
                     {"generalized_rabi_cm1", rabi_bar},
                     {"decayed", g1.decayed},
                     {"peaks", peaks_json}};
        if (const auto ratio = triplet_ratio(peaks))
          summary["central_to_sideband_ratio"] = *ratio;
        summary["omega_cm1"] = display;
        summary["intensity"] = spec.value;
        emit(global, summary, [&] {
          if (!g1.decayed)
            std::cerr << "warning: correlation not decayed at tmax; "
                         "spectrum truncated\n";
          for (size_t i = 0; i < display.size(); ++i)
            std::printf("%s %s\n",
                        fmt(display[i], global.precision).c_str(),
                        fmt(spec.value[i], global.precision).c_str());
          std::cout << "# summary "
                    << json{{"peaks", summary["peaks"]},
                            {"central_to_sideband_ratio",
                             summary.value("central_to_sideband_ratio", 0.0)}}
                           .dump()
                    << "\n";
        });
        return 0;
      };
    });

    auto* g2_cmd =
        sim->add_subcommand("g2", "second-order photon correlation");
    add_common(g2_cmd);
    g2_cmd->callback([&, gamma, tmax, tau_steps, make_problem] {
      action = [&, gamma, tmax, tau_steps, make_problem] {
        const auto p = make_problem();
        const double horizon =
            *tmax > 0.0 ? *tmax : 30.0 / std::max(*gamma, 1e-12);
        const auto tau = lindblad::linear_grid(0.0, horizon, *tau_steps);
        const auto g2 = lindblad::correlation_g2(p, tau);
        std::vector<double> values(g2.value.size());
        for (size_t i = 0; i < values.size(); ++i)
          values[i] = g2.value[i].real();

        // Oscillation frequency from the first few maxima, when present.
        std::vector<double> maxima;
        for (size_t i = 1; i + 1 < values.size(); ++i)
          if (values[i] > values[i - 1] && values[i] > values[i + 1])
            maxima.push_back(tau[i]);
        json summary{{"command", "simulate g2"},
                     {"g2_zero", values.front()},
                     {"g2_infinity", values.back()},
                     {"decayed", g2.decayed}};
        if (maxima.size() >= 3)
          summary["oscillation_cm1"] =
              2.0 * M_PI / (0.5 * (maxima[2] - maxima[0]));
        summary["tau"] = g2.tau;
        summary["g2"] = values;
        emit(global, summary, [&] {
          for (size_t i = 0; i < values.size(); ++i)
            std::printf("%s %s\n", fmt(tau[i], global.precision).c_str(),
                        fmt(values[i], global.precision).c_str());
          std::cout << "# summary "
                    << json{{"g2_zero", values.front()},
                            {"g2_infinity", values.back()}}
                           .dump()
                    << "\n";
        });
        return 0;
      };
    });
  }

  // ---- analyze ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "analyze", "detect peaks and assign them to a line ladder");
    auto input = std::make_shared<std::string>();
    auto model = std::make_shared<std::string>();
    auto omega0 = std::make_shared<std::string>();
    auto tolerance = std::make_shared<double>(300.0);
    auto prominence = std::make_shared<double>(0.05);
    cmd->add_option("--input", *input, "two-column spectrum file")
        ->required();
    cmd->add_option("--model", *model, "rabi-nsqrtn or mollow")
        ->required()
        ->check(CLI::IsMember({"rabi-nsqrtn", "mollow"}));
    cmd->add_option("--omega0", *omega0, "resonance hint")->required();
    cmd->add_option("--tolerance", *tolerance, "matching window in cm-1");
    cmd->add_option("--min-prominence", *prominence,
                    "peak prominence as a fraction of the maximum");
    cmd->callback([&, input, model, omega0, tolerance, prominence] {
      action = [&, input, model, omega0, tolerance, prominence] {
        analysis::LoadReport report;
        const auto spectrum = analysis::load_spectrum_file(*input, &report);
        const auto peaks = analysis::detect_peaks(spectrum, *prominence);
        const auto family = *model == "mollow"
                                ? analysis::LadderFamily::Mollow
                                : analysis::LadderFamily::RabiNSqrtN;
        const auto a = analysis::assign_ladder(peaks, family,
                                               cm1_of(*omega0), *tolerance);
        const auto regime = assess_coupling(a.coupling_cm1, a.omega0_cm1);
        json matches = json::array();
        for (const auto& m : a.matches)
          matches.push_back({{"peak_cm1", m.peak_cm1},
                             {"order", m.order},
                             {"side", m.side},
                             {"predicted_cm1", m.predicted_cm1},
                             {"residual_cm1", m.residual_cm1}});
        json summary{{"model", *model},
                     {"omega0_cm1", a.omega0_cm1},
                     {"coupling_cm1", a.coupling_cm1},
                     {"eta", regime.eta},
                     {"regime", regime_name(regime.regime)},
                     {"matches", matches},
                     {"rms_residual_cm1", a.rms_residual_cm1},
                     {"unmatched_cm1", a.unmatched_cm1},
                     {"warnings", report.warnings}};
        emit(global, summary, [&] {
          for (const auto& w : report.warnings)
            std::cerr << "warning: " << w << "\n";
          std::printf("model        %s\n", model->c_str());
          std::printf("omega0_cm1   %s\n",
                      fmt(a.omega0_cm1, global.precision).c_str());
          std::printf("coupling_cm1 %s\n",
                      fmt(a.coupling_cm1, global.precision).c_str());
          std::printf("eta          %s (%s)\n",
                      fmt(regime.eta, global.precision).c_str(),
                      regime_name(regime.regime).c_str());
          std::printf("rms_cm1      %s\n",
                      fmt(a.rms_residual_cm1, global.precision).c_str());
          std::printf("peak_cm1      order side predicted_cm1 residual_cm1\n");
          for (const auto& m : a.matches)
            std::printf("%-13s %-5d %-4d %-13s %s\n",
                        fmt(m.peak_cm1, global.precision).c_str(), m.order,
                        m.side,
                        fmt(m.predicted_cm1, global.precision).c_str(),
                        fmt(m.residual_cm1, global.precision).c_str());
          for (double u : a.unmatched_cm1)
            std::printf("unmatched %s\n", fmt(u, global.precision).c_str());
        });
        return 0;
      };
    });
  }

  // ---- delta-a ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "delta-a", "difference spectrum and bleach-flanking Rabi bands");
    auto oxidized = std::make_shared<std::string>();
    auto neutral = std::make_shared<std::string>();
    auto dark = std::make_shared<std::string>();
    cmd->add_option("--oxidized", *oxidized, "oxidized spectrum file")
        ->required();
    cmd->add_option("--neutral", *neutral, "neutral spectrum file")
        ->required();
    cmd->add_option("--dark", *dark, "bleached dark line")->required();
    cmd->callback([&, oxidized, neutral, dark] {
      action = [&, oxidized, neutral, dark] {
        const auto ox = analysis::load_spectrum_file(*oxidized);
        const auto neu = analysis::load_spectrum_file(*neutral);
        const auto diff = analysis::delta_a(ox, neu);
        const auto r = analysis::rabi_from_bleach(
            diff, parse_spectral(*dark, Unit::Wavenumber));
        emit(global,
             {{"command", "delta-a"},
              {"p_plus_cm1", r.p_plus_cm1},
              {"p_minus_cm1", r.p_minus_cm1},
              {"rabi_cm1", r.rabi_cm1},
              {"center_cm1", r.center_cm1},
              {"center_nm", to_nanometre(wavenumbers(r.center_cm1))},
              {"asymmetry_ratio", r.asymmetry_ratio}},
             [&] {
               std::printf("P+          %s cm-1 (%s nm)\n",
                           fmt(r.p_plus_cm1, global.precision).c_str(),
                           fmt(to_nanometre(wavenumbers(r.p_plus_cm1)),
                               global.precision)
                               .c_str());
               std::printf("P-          %s cm-1 (%s nm)\n",
                           fmt(r.p_minus_cm1, global.precision).c_str(),
                           fmt(to_nanometre(wavenumbers(r.p_minus_cm1)),
                               global.precision)
                               .c_str());
               std::printf("rabi_cm1    %s\n",
                           fmt(r.rabi_cm1, global.precision).c_str());
               std::printf("center      %s cm-1 (%s nm)\n",
                           fmt(r.center_cm1, global.precision).c_str(),
                           fmt(to_nanometre(wavenumbers(r.center_cm1)),
                               global.precision)
                               .c_str());
               std::printf("asymmetry   %s\n",
                           fmt(r.asymmetry_ratio, global.precision).c_str());
             });
        return 0;
      };
    });
  }

  // ---- distance ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "distance", "mean intermolecular distance from concentration");
    auto c_mm = std::make_shared<double>(0.0);
    auto calibration = std::make_shared<double>(1.0);
    cmd->add_option("--c-mm", *c_mm, "concentration in mM")->required();
    cmd->add_option("--calibration", *calibration, "distance prefactor");
    cmd->callback([&, c_mm, calibration] {
      action = [&, c_mm, calibration] {
        const auto e = analysis::mean_distance(*c_mm, *calibration);
        emit(global,
             {{"command", "distance"},
              {"concentration_mm", e.concentration_mm},
              {"calibration", e.calibration},
              {"mean_distance_angstrom", e.mean_distance_angstrom}},
             [&] {
               std::cout << fmt(e.mean_distance_angstrom, global.precision)
                         << " angstrom\n";
             });
        return 0;
      };
    });
  }

  // ---- fit-scaling ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "fit-scaling", "least-squares coupling-vs-concentration law");
    auto input = std::make_shared<std::string>();
    auto law = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "CSV with C_mM,Omega_cm1 rows")
        ->required();
    cmd->add_option("--law", *law, "sqrtc or csqrtc")
        ->required()
        ->check(CLI::IsMember({"sqrtc", "csqrtc"}));
    cmd->callback([&, input, law] {
      action = [&, input, law] {
        const auto rows = load_xy_pairs(*input);
        const auto fit = analysis::scaling_fit(
            rows, *law == "sqrtc" ? analysis::ScalingLaw::SqrtC
                                  : analysis::ScalingLaw::CSqrtC);
        emit(global,
             {{"command", "fit-scaling"},
              {"law", *law},
              {"slope", fit.slope},
              {"intercept", fit.intercept},
              {"r_squared", fit.r_squared}},
             [&] {
               std::printf("law        %s\nslope      %s\nintercept  %s\n"
                           "r_squared  %s\n",
                           law->c_str(),
                           fmt(fit.slope, global.precision).c_str(),
                           fmt(fit.intercept, global.precision).c_str(),
                           fmt(fit.r_squared, global.precision).c_str());
             });
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.get_name() << " --help shows usage\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
