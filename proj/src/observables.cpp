#include "qmol/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qmol/constants.hpp"

namespace qmol {

std::string term_name(Term term) {
  return term == Term::pi_u ? "pi_u" : "sigma_g";
}

std::string term_label(Term term) {
  return term == Term::pi_u ? "1Pi_u" : "1Sigma_g";
}

int well_multiplier(CaseKind kind, Term term) {
  if (kind == CaseKind::helium_12) return term == Term::pi_u ? 2 : 4;
  return term == Term::pi_u ? 1 : 2;
}

double potential_at(const MolecularState& state, double r_bohr) {
  if (!(r_bohr > 0.0))
    throw std::invalid_argument("potential_at: R must be positive");
  if (r_bohr < state.geometry.r0_bohr)
    return std::numeric_limits<double>::infinity();
  return -state.well_multiplier * state.coupling.value *
         constants::hartree_ev / (r_bohr * r_bohr * r_bohr);
}

std::vector<CurvePoint> potential_curve(const MolecularState& state,
                                        std::span<const double> r_bohr) {
  std::vector<CurvePoint> out;
  out.reserve(r_bohr.size());
  for (double r : r_bohr) {
    const double u = potential_at(state, r);
    out.push_back({r, u, r < state.geometry.r0_bohr});
  }
  return out;
}

double binding_energy_ev(const MolecularState& state) {
  return potential_at(state, state.geometry.r0_bohr);
}

double transition_dipole_helium(std::span<const double> state_vector,
                                const EffectiveCharges& charges) {
  if (state_vector.size() != 4)
    throw std::invalid_argument(
        "transition_dipole_helium: expected a 4-component exchange-basis "
        "vector");
  double norm2 = 0.0;
  for (double c : state_vector) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 1e-8)
    throw std::invalid_argument(
        "transition_dipole_helium: state vector must be normalized");

  // Every basis ket contributes <0|0~> * <p|d|0~> with the electron charge
  // sign; the coefficients decide the cancellation pattern.
  const double overlap = overlap_s_s(charges.alpha, charges.beta);
  const double dipole_len = dipole_s_p(
      charges.alpha,
      OrbitalSpec::hydrogenic(2, 1, charges.gamma, AngularKind::pz), Axis::z);
  const double per_ket = -overlap * dipole_len;

  double total = 0.0;
  for (double c : state_vector) total += c * per_ket;
  return total;
}

RadiativeDecay radiative_rate(double photon_energy_ev, double dipole_ea) {
  if (!(photon_energy_ev > 0.0))
    throw std::invalid_argument("radiative_rate: photon energy must be positive");
  if (dipole_ea == 0.0)
    return {0.0, std::numeric_limits<double>::infinity(), true};

  const double omega = photon_energy_ev / constants::hartree_ev;
  const double c = constants::fine_structure_inv;
  const double w_au =
      4.0 / 3.0 * omega * omega * omega * dipole_ea * dipole_ea / (c * c * c);
  const double rate = w_au / constants::atomic_time_s;
  return {rate, 1.0 / rate, false};
}

MultipoleSuppression multipole_suppression(double photon_energy_ev,
                                           double system_size_angstrom) {
  if (!(photon_energy_ev > 0.0) || !(system_size_angstrom > 0.0))
    throw std::invalid_argument("multipole_suppression: inputs must be positive");
  const double k_a0 = photon_energy_ev * system_size_angstrom /
                      constants::hbar_c_ev_angstrom;
  const double suppression = k_a0 * k_a0;
  return {k_a0, suppression,
          constants::typical_dipole_lifetime_s / suppression};
}

double excitation_energy_helium_ev() {
  return constants::helium_excited_level_ev - constants::helium_ground_level_ev;
}

MoleculeSize molecule_size(double r_z_bohr,
                           std::optional<double> atomic_radius_angstrom) {
  if (!(r_z_bohr > 0.0))
    throw std::invalid_argument("molecule_size: R_z must be positive");
  MoleculeSize size;
  size.r_m_angstrom = length_bohr_to_angstrom(2.0 * r_z_bohr);
  if (atomic_radius_angstrom) {
    const double ratio = size.r_m_angstrom / (2.0 * *atomic_radius_angstrom);
    size.cross_section_ratio = ratio * ratio;
  }
  return size;
}

}  // namespace qmol
