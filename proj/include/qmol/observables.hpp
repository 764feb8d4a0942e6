#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmol/geometry.hpp"
#include "qmol/integrals.hpp"
#include "qmol/secular.hpp"

namespace qmol {

enum class Term { pi_u, sigma_g };

std::string term_name(Term term);     // "pi_u" / "sigma_g"
std::string term_label(Term term);    // "1Pi_u" / "1Sigma_g"

/// Depth factor of the bound level in units of A: the x/y and z wells sit
/// at -2A/-4A for the two-electron case and -A/-2A for one valent electron.
int well_multiplier(CaseKind kind, Term term);

/// A bound molecular state: term, well multiplier, coupling coefficient and
/// solved contact geometry.
struct MolecularState {
  Term term = Term::pi_u;
  int well_multiplier = 1;
  CouplingCoefficient coupling;
  ContactGeometry geometry;
};

struct CurvePoint {
  double r_bohr = 0.0;
  double u_ev = 0.0;  // +infinity inside the hard wall
  bool hard_wall = false;
};

/// U(R) = -multiplier * c * (e^2/a) / (R/a)^3 for R >= R0; the hard wall
/// below R0 is reported as +infinity.  Rejects non-positive R.
double potential_at(const MolecularState& state, double r_bohr);

std::vector<CurvePoint> potential_curve(const MolecularState& state,
                                        std::span<const double> r_bohr);

/// Well depth: the potential evaluated at the contact distance.
double binding_energy_ev(const MolecularState& state);

/// z (or matched-axis) component of the total dipole matrix element between
/// the bound state over the two-electron exchange basis and two ground-state
/// atoms, in units of e*a.  Each basis ket contributes the same product of
/// one-electron integrals, so the (+,+,-,-) vector cancels term by term to
/// exactly zero.  Rejects unnormalized vectors.
double transition_dipole_helium(std::span<const double> state_vector,
                                const EffectiveCharges& charges = {});

struct RadiativeDecay {
  double rate_per_s = 0.0;
  double lifetime_s = 0.0;  // +infinity when dipole-forbidden
  bool dipole_forbidden = false;
};

/// Dipole radiation rate w = 4 w^3 d^2 / (3 c^3) evaluated in atomic units
/// and converted to 1/s; a vanishing dipole yields rate 0 and the
/// dipole-forbidden flag.
RadiativeDecay radiative_rate(double photon_energy_ev, double dipole_ea);

struct MultipoleSuppression {
  double k_a0 = 0.0;          // photon wave number times system size
  double suppression = 0.0;   // (k a0)^2
  double metastable_lifetime_s = 0.0;
};

/// Order-of-magnitude cost of raising the multipole order by one, and the
/// resulting metastable lifetime estimate relative to a typical 1 ns
/// dipole lifetime.
MultipoleSuppression multipole_suppression(double photon_energy_ev,
                                           double system_size_angstrom);

/// Experimental 1s2p excitation energy, the difference of the stored
/// helium levels (21.218 eV).
double excitation_energy_helium_ev();

struct MoleculeSize {
  double r_m_angstrom = 0.0;
  std::optional<double> cross_section_ratio;  // (R_M / 2 r_at)^2
};

/// Characteristic molecule size R_M = 2 R^(z) and, when the atomic radius
/// is known, the cross-section enhancement over the gas-kinetic value.
MoleculeSize molecule_size(
    double r_z_bohr, std::optional<double> atomic_radius_angstrom = {});

}  // namespace qmol
