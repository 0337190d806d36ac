#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "picoqed/jc_ladder.hpp"
#include "picoqed/units.hpp"

using namespace picoqed;

TEST_CASE("dressed splitting at resonance is 2 g sqrt(n)") {
  const JCParameters p{26196.0, 26196.0, 1372.0};
  const DressedDoublet d1 = dressed_energies(p, 1);
  CHECK(d1.splitting_cm1 == doctest::Approx(2744.0).epsilon(1e-12));
  for (int n : {1, 2, 3, 4, 7}) {
    const DressedDoublet d = dressed_energies(p, n);
    CHECK(d.splitting_cm1 ==
          doctest::Approx(2.0 * p.g_cm1 * std::sqrt(double(n))).epsilon(1e-12));
    CHECK(d.e_plus_cm1 > d.e_minus_cm1);
    CHECK(d.e_plus_cm1 - d.e_minus_cm1 ==
          doctest::Approx(d.splitting_cm1).epsilon(1e-12));
  }
  // sqrt(n) nonlinearity: quadrupling n doubles the splitting.
  CHECK(dressed_energies(p, 4).splitting_cm1 /
            dressed_energies(p, 1).splitting_cm1 ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("detuned dressed splitting") {
  JCParameters p{26196.0, 26196.0 + 2744.0, 1372.0};
  CHECK(dressed_energies(p, 1).splitting_cm1 ==
        doctest::Approx(3880.6020151518).epsilon(1e-9));
  // Splitting grows with n and with |detuning|.
  CHECK(dressed_energies(p, 2).splitting_cm1 >
        dressed_energies(p, 1).splitting_cm1);
  JCParameters wider = p;
  wider.omega_atom_cm1 += 500.0;
  CHECK(dressed_energies(wider, 1).splitting_cm1 >
        dressed_energies(p, 1).splitting_cm1);
}

TEST_CASE("zero coupling reduces to the uncoupled pair") {
  const double delta = 700.0;
  const JCParameters p{26196.0, 26196.0 + delta, 0.0};
  for (int n : {1, 2, 5}) {
    const DressedDoublet d = dressed_energies(p, n);
    CHECK(d.e_plus_cm1 ==
          doctest::Approx(n * p.omega_mode_cm1 + delta).epsilon(1e-12));
    CHECK(d.e_minus_cm1 ==
          doctest::Approx(n * p.omega_mode_cm1).epsilon(1e-12));
  }
}

TEST_CASE("invalid excitation number") {
  const JCParameters p{26196.0, 26196.0, 1372.0};
  CHECK_THROWS_AS(dressed_energies(p, 0), std::domain_error);
  CHECK_THROWS_AS(dressed_energies(p, -3), std::domain_error);
}

TEST_CASE("Rabi doublet lines reproduce the published inner pair") {
  const DoubletLines d = rabi_doublet_lines(26196.0, 1372.0);
  CHECK(d.p_plus_cm1 == doctest::Approx(26882.0).epsilon(1e-12));
  CHECK(d.p_minus_cm1 == doctest::Approx(25510.0).epsilon(1e-12));
  CHECK(to_nanometre(wavenumbers(d.p_plus_cm1)) ==
        doctest::Approx(372.0).epsilon(1e-3));
  CHECK(to_nanometre(wavenumbers(d.p_minus_cm1)) ==
        doctest::Approx(392.0).epsilon(1e-3));

  const DoubletLines wide = rabi_doublet_lines(24752.0, 9590.0);
  CHECK(wide.p_plus_cm1 == doctest::Approx(29547.0).epsilon(1e-12));
  CHECK(wide.p_minus_cm1 == doctest::Approx(19957.0).epsilon(1e-12));

  const DoubletLines zero = rabi_doublet_lines(26196.0, 0.0);
  CHECK(zero.p_plus_cm1 == zero.p_minus_cm1);
}

TEST_CASE("doublet is symmetric about the bare line in wavenumber space") {
  for (double splitting : {10.0, 1372.0, 9590.0}) {
    const DoubletLines d = rabi_doublet_lines(26196.0, splitting);
    const SpectralValue mid =
        midpoint(wavenumbers(d.p_plus_cm1), wavenumbers(d.p_minus_cm1));
    CHECK(mid.magnitude == doctest::Approx(26196.0).epsilon(1e-12));
  }
}
