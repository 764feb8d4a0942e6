#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "qmol/orbitals.hpp"
#include "qmol/species.hpp"

using namespace qmol;

namespace {

struct ReferenceRow {
  const char* atom;
  int n;
  double r_at;
  double r_xy, e_xy, r_z, e_z;
};

constexpr ReferenceRow kReferenceTable[] = {
    {"Li", 2, 1.520, 3.70, -0.54, 5.75, -0.29},
    {"Na", 3, 1.858, 4.53, -0.29, 7.02, -0.16},
    {"K", 4, 2.272, 5.54, -0.16, 8.59, -0.09},
    {"Rb", 5, 2.475, 6.03, -0.12, 9.36, -0.07},
    {"Cs", 6, 2.655, 6.47, -0.10, 10.04, -0.05},
};

}  // namespace

TEST_SUITE_BEGIN("species");

TEST_CASE("catalog lookups") {
  const Catalog catalog;
  const auto& li = catalog.get("Li");
  CHECK(li.n == 2);
  CHECK(li.atomic_radius_angstrom == doctest::Approx(1.520));
  const auto& cs = catalog.get("Cs");
  CHECK(cs.n == 6);
  CHECK(cs.atomic_radius_angstrom == doctest::Approx(2.655));

  CHECK_THROWS_WITH_AS(catalog.get("Xe"),
                       doctest::Contains("unknown species 'Xe'"),
                       std::invalid_argument);
}

TEST_CASE("record surfaces") {
  const Catalog catalog;
  const auto& he = catalog.get("He");
  CHECK(he.ground_surface_radius_bohr == doctest::Approx(16.0 / 27.0).epsilon(1e-15));
  CHECK(he.lobe_amplitude_bohr == doctest::Approx(4.0).epsilon(1e-15));
  const auto& h = catalog.get("H");
  CHECK(h.ground_surface_radius_bohr == 1.0);
  CHECK(h.lobe_amplitude_bohr == 4.0);
  const auto& li = catalog.get("Li");
  CHECK(li.ground_surface_radius_bohr == doctest::Approx(1.520 / 0.529).epsilon(1e-14));
  CHECK(li.lobe_amplitude_bohr == li.ground_surface_radius_bohr);

  // catalog surfaces agree with the orbital density maxima
  CHECK(he.ground_surface_radius_bohr ==
        doctest::Approx(radial_density_max(OrbitalSpec::slater1s(27.0 / 16.0)))
            .epsilon(1e-8));
  CHECK(he.lobe_amplitude_bohr ==
        doctest::Approx(radial_density_max(
                            OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::pz)))
            .epsilon(1e-8));
}

TEST_CASE("coupling per model") {
  const Catalog catalog;
  const auto he = catalog.get("He").coupling();
  CHECK(he.provenance == CouplingProvenance::helium_closed_form);
  CHECK(he.value == doctest::Approx(0.059980466).epsilon(1e-8));

  const auto h = catalog.get("H").coupling();
  CHECK(h.provenance == CouplingProvenance::radial_integral);
  CHECK(h.value == doctest::Approx(0.554928957).epsilon(1e-8));

  const auto li = catalog.get("Li").coupling();
  CHECK(li.provenance == CouplingProvenance::atomic_radius_estimate);
  CHECK(li.value == 1.0);
}

TEST_CASE("helium full report") {
  const Catalog catalog;
  const auto report = full_report(catalog.get("He"));

  CHECK(std::abs(report.pi_u.geometry.r0_bohr - 1.203) < 0.005);
  CHECK(std::abs(report.pi_u.binding_energy_ev - (-1.875)) < 0.005);
  REQUIRE(report.pi_u.transition_dipole_ea.has_value());
  CHECK(*report.pi_u.transition_dipole_ea == 0.0);
  CHECK(report.pi_u.metastable);
  CHECK_FALSE(report.pi_u.lifetime_s.has_value());
  REQUIRE(report.pi_u.suppression.has_value());
  CHECK(report.pi_u.suppression->metastable_lifetime_s ==
        doctest::Approx(9.7344862e-6).epsilon(1e-6));

  CHECK(std::abs(report.sigma_g.geometry.r0_bohr - (16.0 / 27.0 + 4.0)) < 1e-6);
  CHECK(std::abs(report.sigma_g.binding_energy_ev - (-0.067)) < 0.002);
  REQUIRE(report.sigma_g.transition_dipole_ea.has_value());
  CHECK(*report.sigma_g.transition_dipole_ea ==
        doctest::Approx(-0.489818196).epsilon(1e-8));
  REQUIRE(report.sigma_g.lifetime_s.has_value());
  CHECK(*report.sigma_g.lifetime_s ==
        doctest::Approx(4.10439455e-10).epsilon(1e-6));
  CHECK_FALSE(report.sigma_g.metastable);

  REQUIRE(report.excitation_energy_ev.has_value());
  CHECK(*report.excitation_energy_ev == doctest::Approx(21.218));
  CHECK(report.assumptions.empty());
}

TEST_CASE("hydrogen full report") {
  const Catalog catalog;
  const auto report = full_report(catalog.get("H"));
  CHECK(report.pi_u.geometry.r0_bohr == doctest::Approx(1.7584632).epsilon(1e-6));
  CHECK(std::abs(report.pi_u.binding_energy_ev - (-2.77)) < 0.01);
  CHECK(report.sigma_g.geometry.r0_bohr == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(std::abs(report.sigma_g.binding_energy_ev - (-0.24)) < 0.01);

  // the exchange symmetry forbids the transverse-state dipole decay here too
  REQUIRE(report.pi_u.transition_dipole_ea.has_value());
  CHECK(*report.pi_u.transition_dipole_ea == 0.0);
  CHECK(report.pi_u.metastable);
  // no transition-dipole model for the z state of this species
  CHECK_FALSE(report.sigma_g.transition_dipole_ea.has_value());
  CHECK_FALSE(report.sigma_g.lifetime_s.has_value());
  CHECK_FALSE(report.excitation_energy_ev.has_value());
}

TEST_CASE("potassium report matches its table row") {
  const Catalog catalog;
  const auto report = full_report(catalog.get("K"));
  CHECK(round_half_away_2(report.pi_u.geometry.r0_bohr) == 5.54);
  CHECK(round_half_away_2(report.pi_u.binding_energy_ev) == -0.16);
  CHECK(round_half_away_2(report.sigma_g.geometry.r0_bohr) == 8.59);
  CHECK(round_half_away_2(report.sigma_g.binding_energy_ev) == -0.09);
}

TEST_CASE("rounding convention") {
  CHECK(round_half_away_2(5.745) == 5.75);
  CHECK(round_half_away_2(5.7449) == 5.74);
  CHECK(round_half_away_2(-0.155) == -0.16);
  CHECK(round_half_away_2(-0.1549) == -0.15);
  CHECK(round_half_away_2(0.0) == 0.0);
}

TEST_CASE("table reproduction") {
  const auto rows = reproduce_table();
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& want = kReferenceTable[i];
    CHECK(row.atom == want.atom);
    CHECK(row.n == want.n);
    CHECK(row.r_at_angstrom == doctest::Approx(want.r_at));
    CHECK(row.r_xy_rounded == want.r_xy);
    CHECK(row.e_xy_rounded == want.e_xy);
    CHECK(row.r_z_rounded == want.r_z);
    CHECK(row.e_z_rounded == want.e_z);
    // end-to-end values sit close to the printed ones already before rounding
    CHECK(std::abs(row.r_xy_bohr - want.r_xy) < 0.01);
    CHECK(std::abs(row.e_xy_ev - want.e_xy) < 0.01);
    CHECK(std::abs(row.r_z_bohr - want.r_z) < 0.01);
    CHECK(std::abs(row.e_z_ev - want.e_z) < 0.01);
  }
  // axial closed form at full precision: R_z = 2 r_at
  CHECK(rows[0].r_z_bohr == doctest::Approx(2.0 * 1.520 / 0.529).epsilon(1e-8));
  CHECK(rows[0].r_z_bohr == doctest::Approx(5.746692).epsilon(1e-6));
}

TEST_CASE("universal transverse ratio across the alkalis") {
  const Catalog catalog;
  const auto rows = reproduce_table(catalog);
  const double first = rows[0].r_xy_bohr /
                       catalog.get(rows[0].atom).ground_surface_radius_bohr;
  CHECK(first == doctest::Approx(1.2892875).epsilon(1e-5));
  for (const auto& row : rows) {
    const double ratio =
        row.r_xy_bohr / catalog.get(row.atom).ground_surface_radius_bohr;
    CHECK(ratio == doctest::Approx(first).epsilon(1e-8));
  }
}

TEST_CASE("cubic-law identity on every species") {
  const Catalog catalog;
  for (const auto& record : catalog.records()) {
    const auto report = full_report(record);
    const double lhs =
        report.sigma_g.binding_energy_ev / report.pi_u.binding_energy_ev;
    const double ratio =
        report.pi_u.geometry.r0_bohr / report.sigma_g.geometry.r0_bohr;
    CHECK(lhs == doctest::Approx(2.0 * ratio * ratio * ratio).epsilon(1e-10));
  }
}

TEST_CASE("binding energies are negative everywhere") {
  const Catalog catalog;
  for (const auto& record : catalog.records()) {
    const auto report = full_report(record);
    CHECK(report.pi_u.binding_energy_ev < 0.0);
    CHECK(report.sigma_g.binding_energy_ev < 0.0);
  }
}

TEST_CASE("user catalog merge") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "qmol_test_catalog.txt";
  {
    std::ofstream out(path);
    out << "# extra species\n";
    out << "Fr alkali_radius 7 2.700\n";
    out << "Li alkali_radius 2 1.600   # override\n";
    out << "He2 helium_two_electron 2 1.6875 2.0 0.5\n";
    out << "D hydrogen_analytic 1\n";
  }
  Catalog catalog;
  catalog.merge_file(path.string());

  const auto& fr = catalog.get("Fr");
  CHECK(fr.n == 7);
  CHECK(fr.ground_surface_radius_bohr == doctest::Approx(2.700 / 0.529));
  CHECK(catalog.get("Li").atomic_radius_angstrom == doctest::Approx(1.600));
  CHECK(catalog.get("He2").coupling().value ==
        doctest::Approx(0.059980466).epsilon(1e-8));
  CHECK(catalog.get("D").coupling().value ==
        doctest::Approx(0.554928957).epsilon(1e-8));
  fs::remove(path);

  const fs::path bad = fs::temp_directory_path() / "qmol_bad_catalog.txt";
  {
    std::ofstream out(bad);
    out << "Yb some_model 6 1.0\n";
  }
  Catalog fresh;
  CHECK_THROWS_AS(fresh.merge_file(bad.string()), std::invalid_argument);
  fs::remove(bad);
  CHECK_THROWS_AS(fresh.merge_file("/nonexistent/qmol.cat"),
                  std::invalid_argument);
}

TEST_SUITE_END();
