#pragma once

#include <optional>
#include <string>

#include "qmol/output.hpp"
#include "qmol/species.hpp"

namespace qmol {

/// Per-block secular eigenvalues in units of A and in eV at the block's
/// contact distance (or at an explicit R or coupling override).
OutputDocument cmd_levels(const Catalog& catalog, const std::string& species,
                          std::optional<double> at_r_bohr = {},
                          std::optional<double> coupling_a_ev = {});

/// Potential-energy samples (R in a, R in Angstrom, U in eV) on a uniform
/// grid; points inside the hard wall are flagged and carry no U value.
OutputDocument cmd_curve(const Catalog& catalog, const std::string& species,
                         Term term, double r_min_bohr, double r_max_bohr,
                         int steps);

/// The alkali summary rows plus the two-electron and hydrogen rows, with
/// rounded and full-precision columns.
OutputDocument cmd_table(const Catalog& catalog);

/// Radiative-decay report: allowed z-state lifetime with the reference
/// value, and the multipole-suppression estimate for the metastable states.
OutputDocument cmd_lifetime(const Catalog& catalog, const std::string& species,
                            std::optional<double> photon_energy_ev = {});

/// Contact-geometry summary for both terms.
OutputDocument cmd_geometry(const Catalog& catalog, const std::string& species);

/// Full per-species report as one row per term.
OutputDocument cmd_report(const Catalog& catalog, const std::string& species);

Term term_from_name(const std::string& name);

}  // namespace qmol
