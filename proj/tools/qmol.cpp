#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmol/commands.hpp"

namespace {

std::optional<double> given(const CLI::Option* opt, double value) {
  if (opt->count() > 0) return value;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qmol - molecular states of resonantly excited diatomic quasimolecules"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::string catalog_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--catalog", catalog_path,
                 "user catalog file merged over the built-in species");

  std::string species;
  std::string term_str;
  double at_r = 0.0;
  double coupling_a = 0.0;
  double photon = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  int steps = 0;

  CLI::App* levels = app.add_subcommand(
      "levels", "secular eigenvalues per symmetry block");
  levels->add_option("species", species, "catalog species name")->required();
  CLI::Option* at_r_opt = levels->add_option(
      "--at-R", at_r, "evaluate the coupling at this distance (a)");
  CLI::Option* coupling_opt = levels->add_option(
      "--coupling-A", coupling_a, "override the coupling energy A (eV)");

  CLI::App* curve =
      app.add_subcommand("curve", "potential-energy curve samples");
  curve->add_option("species", species, "catalog species name")->required();
  curve->add_option("term", term_str, "pi_u or sigma_g")->required();
  curve->add_option("R_min", r_min, "grid start (a)")->required();
  curve->add_option("R_max", r_max, "grid end (a)")->required();
  curve->add_option("steps", steps, "number of samples")->required();

  app.add_subcommand("table", "alkali summary table plus He and H rows");

  CLI::App* lifetime =
      app.add_subcommand("lifetime", "radiative lifetime report");
  lifetime->add_option("species", species, "catalog species name")->required();
  CLI::Option* photon_opt = lifetime->add_option(
      "--photon-energy", photon, "decay photon energy (eV)");

  CLI::App* geometry =
      app.add_subcommand("geometry", "contact geometry of both terms");
  geometry->add_option("species", species, "catalog species name")->required();

  CLI::App* report =
      app.add_subcommand("report", "full per-species quasimolecule report");
  report->add_option("species", species, "catalog species name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    qmol::Catalog catalog;
    if (!catalog_path.empty()) catalog.merge_file(catalog_path);

    qmol::OutputDocument doc;
    if (levels->parsed()) {
      doc = qmol::cmd_levels(catalog, species, given(at_r_opt, at_r),
                             given(coupling_opt, coupling_a));
    } else if (curve->parsed()) {
      doc = qmol::cmd_curve(catalog, species, qmol::term_from_name(term_str),
                            r_min, r_max, steps);
    } else if (lifetime->parsed()) {
      doc = qmol::cmd_lifetime(catalog, species, given(photon_opt, photon));
    } else if (geometry->parsed()) {
      doc = qmol::cmd_geometry(catalog, species);
    } else if (report->parsed()) {
      doc = qmol::cmd_report(catalog, species);
    } else {
      doc = qmol::cmd_table(catalog);
    }

    std::cout << (format == "csv" ? doc.to_csv() : doc.to_json_string());
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
