#include "qmol/commands.hpp"

#include <cmath>
#include <stdexcept>

#include "qmol/constants.hpp"

namespace qmol {

namespace {

std::string provenance_name(CouplingProvenance p) {
  switch (p) {
    case CouplingProvenance::helium_closed_form:
      return "helium_closed_form";
    case CouplingProvenance::radial_integral:
      return "radial_integral";
    case CouplingProvenance::atomic_radius_estimate:
      return "atomic_radius_estimate";
  }
  return "?";
}

double coupling_energy_ev(double coefficient, double r_bohr) {
  return coefficient * constants::hartree_ev / (r_bohr * r_bohr * r_bohr);
}

nlohmann::json optional_json(std::optional<double> v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

Term term_from_name(const std::string& name) {
  if (name == "pi_u") return Term::pi_u;
  if (name == "sigma_g") return Term::sigma_g;
  throw std::invalid_argument("unknown term '" + name +
                              "' (expected pi_u or sigma_g)");
}

OutputDocument cmd_levels(const Catalog& catalog, const std::string& species,
                          std::optional<double> at_r_bohr,
                          std::optional<double> coupling_a_ev) {
  const SpeciesRecord& record = catalog.get(species);
  if (at_r_bohr && !(*at_r_bohr > 0.0))
    throw std::invalid_argument("levels: --at-R must be positive");
  if (coupling_a_ev && !(*coupling_a_ev > 0.0))
    throw std::invalid_argument("levels: --coupling-A must be positive");

  const CaseKind kind = record.secular_case();
  const CouplingCoefficient c = record.coupling();

  OutputDocument doc;
  doc.command = "levels";
  doc.inputs = {{"species", species},
                {"at_R_a", optional_json(at_r_bohr)},
                {"coupling_A_eV", optional_json(coupling_a_ev)},
                {"coupling_c", quantize(c.value)},
                {"case", kind == CaseKind::helium_12 ? "helium_12"
                                                     : "one_electron_6"}};
  doc.assumptions = record.assumptions();

  TableBuilder table({"block", "block_count", "level_A_units", "degeneracy",
                      "R_a", "A_eV", "level_eV", "term"});
  for (Axis axis : {Axis::x, Axis::z}) {
    const SecularSpectrum spectrum = solve_block(build_block(kind, axis, 1.0), axis);
    const bool z_block = axis == Axis::z;

    std::optional<double> r_used;
    double a_ev;
    if (coupling_a_ev) {
      a_ev = *coupling_a_ev;
    } else {
      const Term term = z_block ? Term::sigma_g : Term::pi_u;
      r_used = at_r_bohr ? *at_r_bohr : make_state(record, term).geometry.r0_bohr;
      a_ev = coupling_energy_ev(c.value, *r_used);
    }

    int index = 0;
    for (const EigenLevel& level : spectrum.grouped()) {
      table.begin_row()
          .add(std::string(z_block ? "z" : "xy"))
          .add(z_block ? 1 : 2)
          .add(level.value)
          .add(level.multiplicity);
      if (r_used)
        table.add(*r_used);
      else
        table.add_null();
      table.add(a_ev).add(level.value * a_ev);
      const auto it = spectrum.term_labels.find(index);
      if (it != spectrum.term_labels.end())
        table.add(it->second);
      else
        table.add_null();
      index += level.multiplicity;
    }
  }
  doc.results = table.json();
  return doc;
}

OutputDocument cmd_curve(const Catalog& catalog, const std::string& species,
                         Term term, double r_min_bohr, double r_max_bohr,
                         int steps) {
  if (!(r_min_bohr > 0.0) || !(r_max_bohr > r_min_bohr) || steps < 2)
    throw std::invalid_argument(
        "curve: need 0 < R_min < R_max and at least 2 steps");
  const SpeciesRecord& record = catalog.get(species);
  const MolecularState state = make_state(record, term);

  OutputDocument doc;
  doc.command = "curve";
  doc.inputs = {{"species", species},
                {"term", term_name(term)},
                {"R_min_a", quantize(r_min_bohr)},
                {"R_max_a", quantize(r_max_bohr)},
                {"steps", steps},
                {"R0_a", quantize(state.geometry.r0_bohr)},
                {"coupling_c", quantize(state.coupling.value)},
                {"well_multiplier", state.well_multiplier}};
  doc.assumptions = record.assumptions();

  TableBuilder table({"R_a", "R_angstrom", "U_eV", "hard_wall"});
  for (int i = 0; i < steps; ++i) {
    const double r =
        r_min_bohr + (r_max_bohr - r_min_bohr) * i / (steps - 1);
    const double u = potential_at(state, r);
    table.begin_row().add(r).add(length_bohr_to_angstrom(r));
    if (std::isinf(u))
      table.add_null();
    else
      table.add(u);
    table.add(std::isinf(u) ? 1 : 0);
  }
  doc.results = table.json();
  return doc;
}

OutputDocument cmd_table(const Catalog& catalog) {
  OutputDocument doc;
  doc.command = "table";
  doc.inputs = nlohmann::json::object();

  TableBuilder table({"atom", "n", "r_at_angstrom", "R_xy_a", "E_xy_eV",
                      "R_z_a", "E_z_eV", "R_xy_full_a", "E_xy_full_eV",
                      "R_z_full_a", "E_z_full_eV"});
  for (const auto& species : catalog.records()) {
    const MolecularState xy = make_state(species, Term::pi_u);
    const MolecularState z = make_state(species, Term::sigma_g);
    const double r_xy = xy.geometry.r0_bohr;
    const double e_xy = binding_energy_ev(xy);
    const double r_z = z.geometry.r0_bohr;
    const double e_z = binding_energy_ev(z);

    table.begin_row().add(species.name).add(species.n);
    if (species.atomic_radius_angstrom)
      table.add(*species.atomic_radius_angstrom);
    else
      table.add_null();
    table.add(round_half_away_2(r_xy))
        .add(round_half_away_2(e_xy))
        .add(round_half_away_2(r_z))
        .add(round_half_away_2(e_z))
        .add(r_xy)
        .add(e_xy)
        .add(r_z)
        .add(e_z);

    for (const auto& a : species.assumptions()) {
      bool seen = false;
      for (const auto& existing : doc.assumptions) seen |= existing == a;
      if (!seen) doc.assumptions.push_back(a);
    }
  }
  doc.results = table.json();
  return doc;
}

OutputDocument cmd_lifetime(const Catalog& catalog, const std::string& species,
                            std::optional<double> photon_energy_ev) {
  const SpeciesRecord& record = catalog.get(species);
  if (record.model != SpeciesModel::helium_two_electron)
    throw std::invalid_argument(
        "lifetime: species '" + species +
        "' has no transition-dipole model (two-electron species only)");
  if (photon_energy_ev && !(*photon_energy_ev > 0.0))
    throw std::invalid_argument("lifetime: --photon-energy must be positive");

  const EffectiveCharges charges = record.charges.value_or(EffectiveCharges{});
  const double photon =
      photon_energy_ev ? *photon_energy_ev : excitation_energy_helium_ev();

  OutputDocument doc;
  doc.command = "lifetime";
  doc.inputs = {{"species", species},
                {"photon_energy_eV", quantize(photon)},
                {"photon_energy_overridden", photon_energy_ev.has_value()}};
  doc.assumptions = record.assumptions();
  if (!photon_energy_ev)
    doc.assumptions.push_back(
        "decay photon energy set to the stored experimental excitation "
        "energy, unshifted by the well depth");

  TableBuilder table({"term", "transition_dipole_ea", "photon_energy_eV",
                      "rate_per_s", "lifetime_s", "reference_lifetime_s",
                      "lifetime_ratio", "k_a0", "suppression",
                      "metastable_estimate_s", "metastable_floor_s",
                      "classification"});

  for (Axis axis : {Axis::x, Axis::z}) {
    const SecularSpectrum spectrum =
        solve_block(build_block(CaseKind::helium_12, axis, 1.0), axis);
    const auto vec = bound_state_vector(spectrum);
    const double dipole = transition_dipole_helium(*vec, charges);
    const bool z_block = axis == Axis::z;

    table.begin_row()
        .add(term_name(z_block ? Term::sigma_g : Term::pi_u))
        .add(dipole)
        .add(photon);
    if (dipole == 0.0) {
      const MultipoleSuppression sup =
          multipole_suppression(constants::multipole_probe_photon_ev,
                                constants::multipole_probe_size_angstrom);
      table.add(0.0)
          .add_null()   // lifetime
          .add_null()   // reference
          .add_null()   // ratio
          .add(sup.k_a0)
          .add(sup.suppression)
          .add(sup.metastable_lifetime_s)
          .add(constants::metastable_floor_s)
          .add(std::string("dipole-forbidden; metastable"));
    } else {
      const RadiativeDecay decay = radiative_rate(photon, dipole);
      table.add(decay.rate_per_s)
          .add(decay.lifetime_s)
          .add(constants::sigma_reference_lifetime_s)
          .add(decay.lifetime_s / constants::sigma_reference_lifetime_s)
          .add_null()
          .add_null()
          .add_null()
          .add_null()
          .add(std::string("dipole-allowed"));
    }
  }
  doc.results = table.json();
  return doc;
}

OutputDocument cmd_geometry(const Catalog& catalog,
                            const std::string& species) {
  const SpeciesRecord& record = catalog.get(species);

  OutputDocument doc;
  doc.command = "geometry";
  doc.inputs = {{"species", species}};
  doc.assumptions = record.assumptions();

  TableBuilder table({"term", "lobe_kind", "sphere_radius_a",
                      "lobe_amplitude_a", "R0_a", "R0_angstrom", "theta_deg"});
  for (Term term : {Term::pi_u, Term::sigma_g}) {
    const ContactGeometry g = make_state(record, term).geometry;
    table.begin_row()
        .add(term_name(term))
        .add(std::string(g.kind == LobeKind::perpendicular ? "perpendicular"
                                                           : "axial"))
        .add(g.sphere_radius_bohr)
        .add(g.lobe_amplitude_bohr)
        .add(g.r0_bohr)
        .add(length_bohr_to_angstrom(g.r0_bohr))
        .add(g.theta_contact_deg);
  }
  doc.results = table.json();
  return doc;
}

OutputDocument cmd_report(const Catalog& catalog, const std::string& species) {
  const QuasimoleculeReport report = full_report(catalog.get(species));

  OutputDocument doc;
  doc.command = "report";
  doc.inputs = {{"species", species}};
  doc.assumptions = report.assumptions;

  TableBuilder table({"species", "model", "n", "coupling_c",
                      "coupling_provenance", "term", "term_label",
                      "well_multiplier", "R0_a", "theta_deg",
                      "binding_energy_eV", "transition_dipole_ea",
                      "lifetime_s", "metastable", "excitation_energy_eV",
                      "R_M_angstrom", "cross_section_ratio"});
  for (const StateReport* sr : {&report.pi_u, &report.sigma_g}) {
    table.begin_row()
        .add(report.species)
        .add(model_name(report.model))
        .add(report.n)
        .add(report.coupling.value)
        .add(provenance_name(report.coupling.provenance))
        .add(term_name(sr->term))
        .add(term_label(sr->term))
        .add(sr->well_multiplier)
        .add(sr->geometry.r0_bohr)
        .add(sr->geometry.theta_contact_deg)
        .add(sr->binding_energy_ev);
    if (sr->transition_dipole_ea)
      table.add(*sr->transition_dipole_ea);
    else
      table.add_null();
    if (sr->lifetime_s)
      table.add(*sr->lifetime_s);
    else
      table.add_null();
    table.add(sr->metastable ? 1 : 0);
    if (report.excitation_energy_ev)
      table.add(*report.excitation_energy_ev);
    else
      table.add_null();
    table.add(report.size.r_m_angstrom);
    if (report.size.cross_section_ratio)
      table.add(*report.size.cross_section_ratio);
    else
      table.add_null();
  }
  doc.results = table.json();
  return doc;
}

}  // namespace qmol
