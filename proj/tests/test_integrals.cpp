#include <stdexcept>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qmol/integrals.hpp"
#include "qmol/quadrature.hpp"

using namespace qmol;

namespace {

// quadrature oracle for the s-s overlap: full-space integral of the product
// of the two 1s amplitudes
double overlap_by_quadrature(double z1, double z2) {
  const auto a = OrbitalSpec::slater1s(z1);
  const auto b = OrbitalSpec::slater1s(z2);
  auto f = [&](double r) {
    return 4.0 * std::numbers::pi * r * r * radial_value(a, r) *
           radial_value(b, r);
  };
  return integrate_semi_infinite(f, 4.0 / (z1 + z2), 1e-12).value;
}

// 2-D (radial x polar) quadrature oracle for the matched-axis s-p dipole
double dipole_by_quadrature(double zeta_s, const OrbitalSpec& p_spec) {
  const auto s_spec = OrbitalSpec::slater1s(zeta_s);
  auto radial = [&](double r) {
    return r * r * r * radial_value(p_spec, r) * radial_value(s_spec, r);
  };
  const double radial_part =
      integrate_semi_infinite(radial, 4.0 / (zeta_s + p_spec.zeta()), 1e-12)
          .value;
  auto polar = [](double th) {
    const double s = std::sin(th);
    return s * s * s;
  };
  const double polar_part =
      integrate_adaptive(polar, 0.0, std::numbers::pi, 1e-13).value;
  // the azimuthal integral of cos^2 is pi
  return std::sqrt(3.0 / (4.0 * std::numbers::pi)) * std::numbers::pi *
         polar_part * radial_part;
}

}  // namespace

TEST_SUITE_BEGIN("integrals");

TEST_CASE("quadrature engine sanity") {
  auto sine = [](double x) { return std::sin(x); };
  const auto full = integrate_adaptive(sine, 0.0, std::numbers::pi, 1e-13);
  CHECK(full.converged);
  CHECK(full.value == doctest::Approx(2.0).epsilon(1e-12));

  auto damped = [](double r) { return std::exp(-r) * std::sin(r); };
  const auto semi = integrate_semi_infinite(damped, 2.0, 1e-13);
  CHECK(semi.converged);
  CHECK(semi.value == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("s-s overlap") {
  CHECK(overlap_s_s(1.7, 1.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(overlap_s_s(27.0 / 16.0, 2.0) ==
        doctest::Approx(0.9892465988509435).epsilon(1e-12));
  // 8 * 3^{3/2} / 64
  CHECK(overlap_s_s(1.0, 3.0) ==
        doctest::Approx(0.6495190528383290).epsilon(1e-12));
  CHECK(overlap_s_s(1.0, 3.0) ==
        doctest::Approx(8.0 * std::pow(3.0, 1.5) / 64.0).epsilon(1e-14));
  CHECK_THROWS_AS(overlap_s_s(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(overlap_s_s(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("s-s overlap agrees with quadrature, is symmetric and bounded") {
  CHECK(overlap_s_s(27.0 / 16.0, 2.0) ==
        doctest::Approx(overlap_by_quadrature(27.0 / 16.0, 2.0)).epsilon(1e-8));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.2, 5.0);
  for (int i = 0; i < 25; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    const double o = overlap_s_s(a, b);
    CHECK(o == doctest::Approx(overlap_s_s(b, a)).epsilon(1e-14));
    CHECK(o <= 1.0 + 1e-12);
    CHECK(o > 0.0);
    CHECK(o == doctest::Approx(overlap_by_quadrature(a, b)).epsilon(1e-8));
  }
}

TEST_CASE("s-p dipole integral") {
  const auto p = OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::px);
  const double m = dipole_s_p(27.0 / 16.0, p, Axis::x);
  CHECK(m == doctest::Approx(0.24757133180081837).epsilon(1e-12));
  CHECK(m == doctest::Approx(dipole_by_quadrature(27.0 / 16.0, p)).epsilon(1e-8));

  // assembled square against the coupling coefficient
  const double s = overlap_s_s(27.0 / 16.0, 2.0);
  CHECK(s * s * m * m ==
        doctest::Approx(helium_coupling().value).epsilon(1e-12));
}

TEST_CASE("cross-axis dipole integrals vanish") {
  const auto px = OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::px);
  const auto py = OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::py);
  const auto pz = OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::pz);
  CHECK(dipole_s_p(1.7, pz, Axis::x) == 0.0);
  CHECK(dipole_s_p(1.7, py, Axis::x) == 0.0);
  CHECK(dipole_s_p(1.7, px, Axis::y) == 0.0);
  CHECK(dipole_s_p(1.7, px, Axis::z) == 0.0);
  CHECK(dipole_s_p(1.7, py, Axis::z) == 0.0);
  CHECK(dipole_s_p(1.7, pz, Axis::z) > 0.0);
}

TEST_CASE("dipole rejects non-p orbitals") {
  CHECK_THROWS_AS(dipole_s_p(1.0, OrbitalSpec::slater1s(1.0), Axis::x),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dipole_s_p(1.0, OrbitalSpec::hydrogenic(2, 0, 1.0, AngularKind::s),
                 Axis::x),
      std::invalid_argument);
}

TEST_CASE("default screening charges") {
  const EffectiveCharges charges;
  CHECK(charges.alpha == 27.0 / 16.0);
  CHECK(charges.beta == 2.0);
  CHECK(charges.gamma == 0.5);
}

TEST_CASE("helium coupling coefficient") {
  const CouplingCoefficient c = helium_coupling();
  CHECK(c.provenance == CouplingProvenance::helium_closed_form);
  CHECK(c.value == doctest::Approx(0.059980466262090848).epsilon(1e-13));
  CHECK(std::abs(c.value - 0.060) < 5e-4);
  CHECK(c.value > 0.059);
  CHECK(c.value < 0.061);
  CHECK_THROWS_AS(helium_coupling({-1.0, 2.0, 0.5}), std::invalid_argument);
}

TEST_CASE("helium coupling rescaling") {
  // charge rescaling (a, b, g) -> (ka, kb, kg) with the length unit a -> a/k
  // leaves the physical coupling invariant: c scales as 1/k^2
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.3, 3.0);
  const double base = helium_coupling().value;
  for (int i = 0; i < 10; ++i) {
    const double k = dist(rng);
    const EffectiveCharges scaled{27.0 / 16.0 * k, 2.0 * k, 0.5 * k};
    CHECK(helium_coupling(scaled).value * k * k ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("radial dipole integral, hydrogen 1s-2p") {
  const auto bra = OrbitalSpec::hydrogenic(1, 0, 1.0, AngularKind::s);
  const auto ket = OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::pz);
  const double analytic = 128.0 * std::sqrt(6.0) / 243.0;
  CHECK(radial_dipole_integral(bra, ket) ==
        doctest::Approx(analytic).epsilon(1e-10));

  CHECK_THROWS_AS(radial_dipole_integral(ket, ket), std::invalid_argument);
  CHECK_THROWS_AS(radial_dipole_integral(bra, bra), std::invalid_argument);
}

TEST_CASE("one-electron coupling") {
  const double integral = 128.0 * std::sqrt(6.0) / 243.0;
  const CouplingCoefficient c = one_electron_coupling(integral);
  CHECK(c.provenance == CouplingProvenance::radial_integral);
  CHECK(c.value == doctest::Approx(0.55492895730664363).epsilon(1e-13));
  CHECK(std::abs(c.value - 0.555) < 1e-3);

  CHECK(one_electron_coupling(0.0).value == 0.0);
  CHECK(one_electron_coupling(std::sqrt(3.0)).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(one_electron_coupling(-0.1), std::invalid_argument);
}

TEST_CASE("atomic radius coupling") {
  const CouplingCoefficient c = atomic_radius_coupling();
  CHECK(c.value == 1.0);
  CHECK(c.provenance == CouplingProvenance::atomic_radius_estimate);
}

TEST_SUITE_END();
