#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "picoqed/mollow.hpp"
#include "picoqed/units.hpp"

using namespace picoqed;

TEST_CASE("generalized Rabi frequency") {
  CHECK(generalized_rabi_cm1({0, 1450.0, 0.0}) == 1450.0);
  CHECK(generalized_rabi_cm1({0, 0.0, 500.0}) == 500.0);
  CHECK(generalized_rabi_cm1({0, 3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(generalized_rabi_cm1({0, -1.0, 0.0}), std::domain_error);
}

TEST_CASE("Mollow triplet line positions") {
  const TripletLines t = mollow_triplet_lines({26178.0, 1450.0, 0.0});
  CHECK(t.red_cm1 == doctest::Approx(24728.0).epsilon(1e-12));
  CHECK(t.center_cm1 == doctest::Approx(26178.0).epsilon(1e-12));
  CHECK(t.blue_cm1 == doctest::Approx(27628.0).epsilon(1e-12));
  CHECK(to_nanometre(wavenumbers(t.red_cm1)) ==
        doctest::Approx(404.4).epsilon(1e-3));

  const TripletLines degenerate = mollow_triplet_lines({26178.0, 0.0, 0.0});
  CHECK(degenerate.red_cm1 == degenerate.center_cm1);
  CHECK(degenerate.blue_cm1 == degenerate.center_cm1);

  // Drive sitting on the second sideband: its own red sideband falls
  // near 458.6 nm.
  const double w430 = to_wavenumber(nanometres(430));
  const TripletLines shifted = mollow_triplet_lines({w430, 1450.0, 0.0});
  CHECK(to_nanometre(wavenumbers(shifted.red_cm1)) ==
        doctest::Approx(458.5932917400).epsilon(1e-9));
}

TEST_CASE("sideband ladder published positions") {
  const double omega0 = to_wavenumber(nanometres(382));  // 26178.0105
  MollowLadder l{omega0, 1450.0, {1, 2, 3, 5}};
  const auto pairs = sideband_ladder(l);
  REQUIRE(pairs.size() == 4);
  CHECK(to_nanometre(wavenumbers(pairs[0].red_cm1)) ==
        doctest::Approx(404.3996993468).epsilon(1e-9));
  CHECK(to_nanometre(wavenumbers(pairs[1].red_cm1)) ==
        doctest::Approx(429.5899777333).epsilon(1e-9));
  CHECK(to_nanometre(wavenumbers(pairs[2].red_cm1)) ==
        doctest::Approx(458.1269563340).epsilon(1e-9));
  CHECK(pairs[3].blue_cm1 == doctest::Approx(33428.0104712).epsilon(1e-9));
  CHECK(to_nanometre(wavenumbers(pairs[3].blue_cm1)) ==
        doctest::Approx(299.1503191198).epsilon(1e-9));

  // Order zero stays at the resonance.
  const auto center = sideband_ladder({omega0, 1450.0, {0}});
  CHECK(center[0].red_cm1 == omega0);
  CHECK(center[0].blue_cm1 == omega0);
}

TEST_CASE("ladder spacing is uniform in energy, not in wavelength") {
  MollowLadder l{26178.0, 1450.0, {1, 2, 3}};
  const auto pairs = sideband_ladder(l);
  const double d1 = pairs[0].red_cm1 - pairs[1].red_cm1;
  const double d2 = pairs[1].red_cm1 - pairs[2].red_cm1;
  CHECK(d1 == doctest::Approx(1450.0).epsilon(1e-12));
  CHECK(d2 == doctest::Approx(1450.0).epsilon(1e-12));

  const double nm1 = to_nanometre(wavenumbers(pairs[0].red_cm1));
  const double nm2 = to_nanometre(wavenumbers(pairs[1].red_cm1));
  const double nm3 = to_nanometre(wavenumbers(pairs[2].red_cm1));
  CHECK(std::abs((nm2 - nm1) - (nm3 - nm2)) > 0.5);  // visibly non-uniform
}

TEST_CASE("quintet is the union of the two inner triplets") {
  const auto q = quintet_lines(26178.0, 1450.0);
  CHECK(q[0] == doctest::Approx(23278.0).epsilon(1e-12));
  CHECK(q[1] == doctest::Approx(24728.0).epsilon(1e-12));
  CHECK(q[2] == doctest::Approx(26178.0).epsilon(1e-12));
  CHECK(q[3] == doctest::Approx(27628.0).epsilon(1e-12));
  CHECK(q[4] == doctest::Approx(29078.0).epsilon(1e-12));

  // Symmetric about the centre; equals triplet(W') U triplet(2W').
  for (int k = 0; k < 2; ++k)
    CHECK(q[2] - q[k] == doctest::Approx(q[4 - k] - q[2]).epsilon(1e-12));
  const TripletLines inner = mollow_triplet_lines({26178.0, 1450.0, 0.0});
  const TripletLines outer = mollow_triplet_lines({26178.0, 2900.0, 0.0});
  CHECK(q[0] == outer.red_cm1);
  CHECK(q[1] == inner.red_cm1);
  CHECK(q[3] == inner.blue_cm1);
  CHECK(q[4] == outer.blue_cm1);

  const auto collapsed = quintet_lines(26178.0, 0.0);
  for (double v : collapsed) CHECK(v == 26178.0);
}

TEST_CASE("phase-offset relation between ladder families") {
  // The gap between the 417 nm polariton line and the 430 nm triplet
  // centre equals half the 1450 cm^-1 ladder spacing to within 1%.
  const double gap =
      energy_difference(nanometres(417), nanometres(430)).magnitude;
  CHECK(gap == doctest::Approx(725.0013942335).epsilon(1e-9));
  CHECK(std::abs(gap - 1450.0 / 2.0) / (1450.0 / 2.0) < 0.01);
}

TEST_CASE("asymptotic Mollow spectrum") {
  const DriveField d{0.0, 20.0, 0.0};
  const double gamma = 1.0;
  const auto s = asymptotic_mollow_spectrum(d, gamma, 4001);
  REQUIRE(s.value.size() == 4001);
  CHECK(s.asymptotics_reliable);

  // Peaks at -Rabi, 0, +Rabi.
  const auto peak_near = [&](double target) {
    double best_x = 0.0, best_y = -1.0;
    for (size_t i = 0; i < s.omega_cm1.size(); ++i) {
      if (std::abs(s.omega_cm1[i] - target) < 2.0 && s.value[i] > best_y) {
        best_y = s.value[i];
        best_x = s.omega_cm1[i];
      }
    }
    return std::pair{best_x, best_y};
  };
  const auto [xc, yc] = peak_near(0.0);
  const auto [xr, yr] = peak_near(-20.0);
  const auto [xb, yb] = peak_near(20.0);
  const double step = s.omega_cm1[1] - s.omega_cm1[0];
  CHECK(std::abs(xc) <= step);
  CHECK(std::abs(xr + 20.0) <= step);
  CHECK(std::abs(xb - 20.0) <= step);

  // Heights: (1/2)/(pi Gamma/2) vs (1/4)/(pi 3 Gamma/4) -> ratio 3.
  CHECK(yc / yr == doctest::Approx(3.0).epsilon(2e-3));
  CHECK(yc == doctest::Approx(1.0 / (std::numbers::pi * gamma)).epsilon(1e-3));

  // Symmetric about the drive.
  for (size_t i = 0; i < s.value.size(); ++i) {
    CHECK(s.value[i] ==
          doctest::Approx(s.value[s.value.size() - 1 - i]).epsilon(1e-9));
  }

  CHECK_FALSE(asymptotic_mollow_spectrum({0.0, 4.0, 0.0}, 1.0, 101)
                  .asymptotics_reliable);
  CHECK_THROWS_AS(asymptotic_mollow_spectrum(d, 0.0, 101), std::domain_error);
}

TEST_CASE("asymptotic spectrum area: quadrature matches the closed form") {
  // Exact window integral of an area-A Lorentzian over [-X, X]:
  // A/pi * (atan((X-c)/w) + atan((X+c)/w)).
  const double gamma = 1.0, rabi = 50.0;
  const auto s = asymptotic_mollow_spectrum({0.0, rabi, 0.0}, gamma, 200001);
  const double step = s.omega_cm1[1] - s.omega_cm1[0];
  double trapz = 0.0;
  for (size_t i = 0; i + 1 < s.value.size(); ++i)
    trapz += 0.5 * (s.value[i] + s.value[i + 1]) * step;

  const double window = 3.0 * rabi;
  const auto lorentz_window = [&](double center, double area, double hwhm) {
    return area / std::numbers::pi *
           (std::atan((window - center) / hwhm) +
            std::atan((window + center) / hwhm));
  };
  const double exact = lorentz_window(0.0, 0.5, gamma / 2) +
                       lorentz_window(-rabi, 0.25, 0.75 * gamma) +
                       lorentz_window(rabi, 0.25, 0.75 * gamma);
  CHECK(trapz == doctest::Approx(exact).epsilon(1e-9));

  // The same closed form shows the full-line area reaching 1 to 1e-6 once
  // the window is wide enough.
  const double wide = 1.0e6 * gamma;
  const auto wide_window = [&](double center, double area, double hwhm) {
    return area / std::numbers::pi *
           (std::atan((wide - center) / hwhm) +
            std::atan((wide + center) / hwhm));
  };
  const double total = wide_window(0.0, 0.5, gamma / 2) +
                       wide_window(-rabi, 0.25, 0.75 * gamma) +
                       wide_window(rabi, 0.25, 0.75 * gamma);
  CHECK(std::abs(total - 1.0) < 1e-6);
}
