#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "picoqed/resonator.hpp"

using namespace picoqed;

TEST_CASE("interfacial gap") {
  CHECK(interfacial_gap_nm({0.25, 0.063}) == doctest::Approx(0.124).epsilon(1e-12));
  CHECK(interfacial_gap_nm({2 * 0.1 + 1e-6, 0.1}) ==
        doctest::Approx(1e-6).epsilon(1e-6));
  CHECK_THROWS_AS(interfacial_gap_nm({0.25, 0.125}), std::domain_error);
  CHECK_THROWS_AS(interfacial_gap_nm({0.25, 0.2}), std::domain_error);
}

TEST_CASE("cylindrical mode volume") {
  CHECK(mode_volume_nm3({0.25, 0.063}) ==
        doctest::Approx(1.5461536740e-3).epsilon(1e-9));
  CHECK(mode_volume_nm3({0.50, 0.063}) ==
        doctest::Approx(4.6633989845e-3).epsilon(1e-9));
  // R -> 0 collapses the volume
  CHECK(mode_volume_nm3({0.25, 1e-9}) < 1e-15);

  // Monotone in D; quadratic in R at fixed gap.
  CHECK(mode_volume_nm3({0.30, 0.063}) > mode_volume_nm3({0.25, 0.063}));
  const double d = 0.124;
  const double v1 = mode_volume_nm3({2 * 0.05 + d, 0.05});
  const double v2 = mode_volume_nm3({2 * 0.10 + d, 0.10});
  CHECK(v2 / v1 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("quality factor") {
  CHECK(quality_factor(wavenumbers(26178), wavenumbers(3740)) ==
        doctest::Approx(6.9994652406).epsilon(1e-9));
  CHECK(quality_factor(wavenumbers(26178), wavenumbers(26178)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(quality_factor(wavenumbers(26178), wavenumbers(1308.9)) ==
        doctest::Approx(20.0).epsilon(1e-12));
  CHECK_THROWS_AS(quality_factor(wavenumbers(26178), wavenumbers(0)),
                  std::domain_error);
}

TEST_CASE("Purcell factor") {
  CHECK(purcell_factor(nanometres(380), 1.0, 7.0, 1.546e-3) ==
        doctest::Approx(1.8879950803e10).epsilon(1e-9));
  CHECK(purcell_factor(nanometres(380), 1.0, 7.0, 1.5461536740e-3) ==
        doctest::Approx(1.8878074303e10).epsilon(1e-9));
  CHECK(purcell_factor(nanometres(380), 1.0, 7.0, 1.0e-3) ==
        doctest::Approx(2.9188403941e10).epsilon(1e-9));

  // Exactly linear in Q, inverse-linear in V.
  const double base = purcell_factor(nanometres(380), 1.0, 7.0, 1.546e-3);
  CHECK(purcell_factor(nanometres(380), 1.0, 14.0, 1.546e-3) ==
        doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(purcell_factor(nanometres(380), 1.0, 7.0, 2 * 1.546e-3) ==
        doctest::Approx(0.5 * base).epsilon(1e-12));
  CHECK_THROWS_AS(purcell_factor(nanometres(380), 1.0, 0.0, 1e-3),
                  std::domain_error);
}

TEST_CASE("vacuum field amplitude") {
  const VacuumField f = vacuum_field_amplitude(nanometres(380), 1.5461536740e-3);
  CHECK(f.amplitude_v_per_m == doctest::Approx(1.3817544653e11).epsilon(1e-9));
  CHECK(f.mode_frequency_rad_per_s == doctest::Approx(4.9569778087e15).epsilon(1e-9));

  // E0 ~ 1/sqrt(V)
  const VacuumField f4 = vacuum_field_amplitude(nanometres(380), 4 * 1.5461536740e-3);
  CHECK(f.amplitude_v_per_m / f4.amplitude_v_per_m ==
        doctest::Approx(2.0).epsilon(1e-12));
  // E0 ~ sqrt(omega)
  const VacuumField fw = vacuum_field_amplitude(
      wavenumbers(4.0 * 26315.7894736842), 1.5461536740e-3);
  const VacuumField f1 = vacuum_field_amplitude(
      wavenumbers(26315.7894736842), 1.5461536740e-3);
  CHECK(fw.amplitude_v_per_m / f1.amplitude_v_per_m ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(vacuum_field_amplitude(nanometres(380), 0.0),
                  std::domain_error);
}

TEST_CASE("dipole coupling rate") {
  const VacuumField f = vacuum_field_amplitude(nanometres(380), 1.5461536740e-3);
  const double g1 = coupling_rate_from_dipole(1.0, f).magnitude;
  CHECK(g1 == doctest::Approx(23202.4284141).epsilon(1e-9));
  CHECK(g1 / 1e4 == doctest::Approx(2.3).epsilon(0.05));  // order check
  CHECK(coupling_rate_from_dipole(2.0, f).magnitude ==
        doctest::Approx(2.0 * g1).epsilon(1e-12));
  CHECK_THROWS_AS(coupling_rate_from_dipole(0.0, f), std::domain_error);

  // g ~ 1/sqrt(V) at fixed dipole and frequency.
  const VacuumField f4 = vacuum_field_amplitude(nanometres(380), 4 * 1.5461536740e-3);
  CHECK(coupling_rate_from_dipole(1.0, f).magnitude /
            coupling_rate_from_dipole(1.0, f4).magnitude ==
        doctest::Approx(2.0).epsilon(1e-12));
}
