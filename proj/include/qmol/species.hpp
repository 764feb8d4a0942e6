#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmol/observables.hpp"

namespace qmol {

enum class SpeciesModel { helium_two_electron, hydrogen_analytic, alkali_radius };

std::string model_name(SpeciesModel model);
SpeciesModel model_from_name(const std::string& name);

/// Curated inputs for one species: which coupling model applies, the
/// screening charges (two-electron model only), the tabulated atomic radius
/// (radius model only) and the two contact surfaces in Bohr.
struct SpeciesRecord {
  std::string name;
  SpeciesModel model = SpeciesModel::alkali_radius;
  int n = 1;  // principal quantum number, carried as metadata
  std::optional<double> atomic_radius_angstrom;
  std::optional<EffectiveCharges> charges;
  double ground_surface_radius_bohr = 0.0;
  double lobe_amplitude_bohr = 0.0;

  CaseKind secular_case() const;
  CouplingCoefficient coupling() const;
  std::vector<std::string> assumptions() const;
};

/// Immutable species table, optionally extended from a user file.  The file
/// holds one record per line, `#` comments, whitespace-separated fields:
///   name helium_two_electron n alpha beta gamma
///   name hydrogen_analytic   n
///   name alkali_radius       n r_at_angstrom
class Catalog {
 public:
  Catalog();  // built-in He, H, Li, Na, K, Rb, Cs

  /// Merge records from a user catalog file; same-name records override.
  void merge_file(const std::string& path);

  const SpeciesRecord& get(const std::string& name) const;
  const std::vector<SpeciesRecord>& records() const { return records_; }

 private:
  std::vector<SpeciesRecord> records_;
};

/// Solved state (coupling -> geometry -> observables) for one term.
MolecularState make_state(const SpeciesRecord& species, Term term);

struct StateReport {
  Term term = Term::pi_u;
  int well_multiplier = 1;
  ContactGeometry geometry;
  double binding_energy_ev = 0.0;
  std::optional<double> transition_dipole_ea;
  std::optional<double> lifetime_s;  // dipole-allowed decay only
  bool metastable = false;
  std::optional<MultipoleSuppression> suppression;
};

struct QuasimoleculeReport {
  std::string species;
  SpeciesModel model = SpeciesModel::alkali_radius;
  int n = 1;
  CouplingCoefficient coupling;
  std::optional<double> excitation_energy_ev;  // two-electron model only
  StateReport pi_u;
  StateReport sigma_g;
  MoleculeSize size;
  std::vector<std::string> assumptions;
};

QuasimoleculeReport full_report(const SpeciesRecord& species);

/// One row of the alkali summary: solved distances (Bohr) and well depths
/// (eV) at full precision plus the round-half-away-to-2-decimals values.
struct TableRow {
  std::string atom;
  int n = 0;
  double r_at_angstrom = 0.0;
  double r_xy_bohr = 0.0;
  double e_xy_ev = 0.0;
  double r_z_bohr = 0.0;
  double e_z_ev = 0.0;
  double r_xy_rounded = 0.0;
  double e_xy_rounded = 0.0;
  double r_z_rounded = 0.0;
  double e_z_rounded = 0.0;
};

double round_half_away_2(double x);

/// Rows for every radius-model species of the catalog, in catalog order.
std::vector<TableRow> reproduce_table(const Catalog& catalog);
std::vector<TableRow> reproduce_table();  // built-in catalog

}  // namespace qmol
