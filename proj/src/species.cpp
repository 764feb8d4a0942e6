#include "qmol/species.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qmol/constants.hpp"

namespace qmol {

namespace {

SpeciesRecord alkali(const std::string& name, int n, double r_at_angstrom) {
  SpeciesRecord r;
  r.name = name;
  r.model = SpeciesModel::alkali_radius;
  r.n = n;
  r.atomic_radius_angstrom = r_at_angstrom;
  // both contact surfaces are placed at the tabulated atomic radius
  const double radius = r_at_angstrom / constants::tabulated_bohr_angstrom;
  r.ground_surface_radius_bohr = radius;
  r.lobe_amplitude_bohr = radius;
  return r;
}

SpeciesRecord helium_record() {
  SpeciesRecord r;
  r.name = "He";
  r.model = SpeciesModel::helium_two_electron;
  r.n = 2;
  r.charges = EffectiveCharges{};
  // density maxima of the 1s(alpha) sphere and the 2p(gamma) lobe
  r.ground_surface_radius_bohr = 1.0 / r.charges->alpha;
  r.lobe_amplitude_bohr = 2.0 / r.charges->gamma;
  return r;
}

SpeciesRecord hydrogen_record(const std::string& name, int n) {
  SpeciesRecord r;
  r.name = name;
  r.model = SpeciesModel::hydrogen_analytic;
  r.n = n;
  r.ground_surface_radius_bohr = 1.0;  // 1s density maximum
  r.lobe_amplitude_bohr = 4.0;         // 2p density maximum
  return r;
}

SpeciesRecord helium_from_charges(const std::string& name, int n,
                                  const EffectiveCharges& charges) {
  SpeciesRecord r = helium_record();
  r.name = name;
  r.n = n;
  r.charges = charges;
  r.ground_surface_radius_bohr = 1.0 / charges.alpha;
  r.lobe_amplitude_bohr = 2.0 / charges.gamma;
  return r;
}

}  // namespace

std::string model_name(SpeciesModel model) {
  switch (model) {
    case SpeciesModel::helium_two_electron:
      return "helium_two_electron";
    case SpeciesModel::hydrogen_analytic:
      return "hydrogen_analytic";
    case SpeciesModel::alkali_radius:
      return "alkali_radius";
  }
  return "?";
}

SpeciesModel model_from_name(const std::string& name) {
  if (name == "helium_two_electron") return SpeciesModel::helium_two_electron;
  if (name == "hydrogen_analytic") return SpeciesModel::hydrogen_analytic;
  if (name == "alkali_radius") return SpeciesModel::alkali_radius;
  throw std::invalid_argument("unknown species model '" + name + "'");
}

CaseKind SpeciesRecord::secular_case() const {
  return model == SpeciesModel::helium_two_electron ? CaseKind::helium_12
                                                    : CaseKind::one_electron_6;
}

CouplingCoefficient SpeciesRecord::coupling() const {
  switch (model) {
    case SpeciesModel::helium_two_electron:
      return helium_coupling(charges.value_or(EffectiveCharges{}));
    case SpeciesModel::hydrogen_analytic:
      return one_electron_coupling(radial_dipole_integral(
          OrbitalSpec::hydrogenic(1, 0, 1.0, AngularKind::s),
          OrbitalSpec::hydrogenic(2, 1, 0.5, AngularKind::pz)));
    case SpeciesModel::alkali_radius:
      return atomic_radius_coupling();
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> SpeciesRecord::assumptions() const {
  std::vector<std::string> out;
  if (model == SpeciesModel::alkali_radius) {
    out.push_back(
        "contact surfaces: sphere radius and lobe amplitude both set to the "
        "tabulated atomic radius");
    out.push_back(
        "tabulated radii converted to Bohr with a = 0.529 Angstrom");
    out.push_back("coupling coefficient taken as the coarse estimate c = 1");
  }
  return out;
}

Catalog::Catalog() {
  records_ = {
      helium_record(),
      hydrogen_record("H", 1),
      alkali("Li", 2, 1.520),
      alkali("Na", 3, 1.858),
      alkali("K", 4, 2.272),
      alkali("Rb", 5, 2.475),
      alkali("Cs", 6, 2.655),
  };
}

void Catalog::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("catalog file '" + path + "' not readable");

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, model_str;
    if (!(fields >> name)) continue;  // blank line
    int n = 0;
    if (!(fields >> model_str >> n) || n < 1)
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": expected 'name model n ...'");
    const SpeciesModel model = model_from_name(model_str);
    SpeciesRecord rec;
    if (model == SpeciesModel::alkali_radius) {
      double r_at = 0.0;
      if (!(fields >> r_at) || !(r_at > 0.0))
        throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                    ": alkali_radius needs a positive radius");
      rec = alkali(name, n, r_at);
    } else if (model == SpeciesModel::helium_two_electron) {
      EffectiveCharges c;
      if (!(fields >> c.alpha >> c.beta >> c.gamma) ||
          !(c.alpha > 0.0 && c.beta > 0.0 && c.gamma > 0.0))
        throw std::invalid_argument(
            "catalog line " + std::to_string(lineno) +
            ": helium_two_electron needs three positive charges");
      rec = helium_from_charges(name, n, c);
    } else {
      rec = hydrogen_record(name, n);
    }
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": trailing field '" + extra + "'");
    bool replaced = false;
    for (auto& existing : records_) {
      if (existing.name == rec.name) {
        existing = rec;
        replaced = true;
        break;
      }
    }
    if (!replaced) records_.push_back(rec);
  }
}

const SpeciesRecord& Catalog::get(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return r;
  std::string known;
  for (const auto& r : records_) {
    if (!known.empty()) known += ", ";
    known += r.name;
  }
  throw std::invalid_argument("unknown species '" + name +
                              "' (catalog: " + known + ")");
}

MolecularState make_state(const SpeciesRecord& species, Term term) {
  MolecularState state;
  state.term = term;
  state.well_multiplier = well_multiplier(species.secular_case(), term);
  state.coupling = species.coupling();
  state.geometry = contact_distance(
      species.ground_surface_radius_bohr, species.lobe_amplitude_bohr,
      term == Term::pi_u ? LobeKind::perpendicular : LobeKind::axial);
  return state;
}

QuasimoleculeReport full_report(const SpeciesRecord& species) {
  QuasimoleculeReport report;
  report.species = species.name;
  report.model = species.model;
  report.n = species.n;
  report.coupling = species.coupling();
  report.assumptions = species.assumptions();

  const bool helium = species.model == SpeciesModel::helium_two_electron;
  if (helium) report.excitation_energy_ev = excitation_energy_helium_ev();

  for (Term term : {Term::pi_u, Term::sigma_g}) {
    StateReport sr;
    sr.term = term;
    MolecularState state;
    try {
      state = make_state(species, term);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(species.name + ": " + e.what());
    }
    sr.well_multiplier = state.well_multiplier;
    sr.geometry = state.geometry;
    sr.binding_energy_ev = binding_energy_ev(state);

    if (helium) {
      const EffectiveCharges charges =
          species.charges.value_or(EffectiveCharges{});
      const Axis axis = term == Term::pi_u ? Axis::x : Axis::z;
      const auto spectrum =
          solve_block(build_block(CaseKind::helium_12, axis, 1.0), axis);
      const auto vec = bound_state_vector(spectrum);
      sr.transition_dipole_ea = transition_dipole_helium(*vec, charges);
      if (*sr.transition_dipole_ea == 0.0) {
        sr.metastable = true;
        sr.suppression =
            multipole_suppression(constants::multipole_probe_photon_ev,
                                  constants::multipole_probe_size_angstrom);
      } else {
        sr.lifetime_s = radiative_rate(excitation_energy_helium_ev(),
                                       *sr.transition_dipole_ea)
                            .lifetime_s;
      }
    } else {
      // the exchange symmetry argument forbids the dipole decay of the x,y
      // states for every species; no dipole model exists for the z state
      if (term == Term::pi_u) {
        sr.transition_dipole_ea = 0.0;
        sr.metastable = true;
      }
    }

    (term == Term::pi_u ? report.pi_u : report.sigma_g) = sr;
  }

  report.size = molecule_size(report.sigma_g.geometry.r0_bohr,
                              species.atomic_radius_angstrom);
  return report;
}

double round_half_away_2(double x) {
  return std::copysign(std::floor(std::abs(x) * 100.0 + 0.5) / 100.0, x);
}

std::vector<TableRow> reproduce_table(const Catalog& catalog) {
  std::vector<TableRow> rows;
  for (const auto& species : catalog.records()) {
    if (species.model != SpeciesModel::alkali_radius) continue;
    TableRow row;
    row.atom = species.name;
    row.n = species.n;
    row.r_at_angstrom = *species.atomic_radius_angstrom;

    const MolecularState xy = make_state(species, Term::pi_u);
    const MolecularState z = make_state(species, Term::sigma_g);
    row.r_xy_bohr = xy.geometry.r0_bohr;
    row.e_xy_ev = binding_energy_ev(xy);
    row.r_z_bohr = z.geometry.r0_bohr;
    row.e_z_ev = binding_energy_ev(z);
    row.r_xy_rounded = round_half_away_2(row.r_xy_bohr);
    row.e_xy_rounded = round_half_away_2(row.e_xy_ev);
    row.r_z_rounded = round_half_away_2(row.r_z_bohr);
    row.e_z_rounded = round_half_away_2(row.e_z_ev);
    rows.push_back(row);
  }
  return rows;
}

std::vector<TableRow> reproduce_table() { return reproduce_table(Catalog{}); }

}  // namespace qmol
