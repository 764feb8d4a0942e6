#pragma once

// Physical constant table and unit conversions.
//
// All internal computation runs in Hartree atomic units with Gaussian
// electrostatics (e = hbar = m_e = 1, e^2/a is the energy unit, the Bohr
// radius a is the length unit).  Reported outputs are eV, Angstrom, Bohr
// radii and seconds.  The table is fixed so that outputs are
// bit-reproducible.

namespace qmol::constants {

inline constexpr double bohr_radius_angstrom = 0.529177;  // a, Angstrom
inline constexpr double hartree_ev = 27.2114;             // e^2/a, eV
inline constexpr double fine_structure_inv = 137.036;     // c in a.u.
inline constexpr double atomic_time_s = 2.41888e-17;      // hbar/E_h, s
inline constexpr double hbar_c_ev_angstrom = 1973.27;     // hbar*c, eV*Angstrom

// Tabulated atomic radii are published against the three-digit Bohr radius;
// the distance columns of the source tables round-trip only with this value.
// Used exclusively by the atomic-radius pipeline (species catalog).
inline constexpr double tabulated_bohr_angstrom = 0.529;

// Experimental helium levels (eV relative to the double-ionization limit);
// inputs for the 1s2p excitation energy, not computed results.
inline constexpr double helium_ground_level_ev = -79.005;   // 1s^2
inline constexpr double helium_excited_level_ev = -57.787;  // 1s2p

// Reference values for the radiative-decay report.
inline constexpr double sigma_reference_lifetime_s = 0.18e-9;
inline constexpr double typical_dipole_lifetime_s = 1e-9;
inline constexpr double metastable_floor_s = 1e-5;

// Round inputs for the multipole-suppression order-of-magnitude estimate.
inline constexpr double multipole_probe_photon_ev = 20.0;
inline constexpr double multipole_probe_size_angstrom = 1.0;

}  // namespace qmol::constants

namespace qmol {

inline double energy_au_to_ev(double e_hartree) {
  return e_hartree * constants::hartree_ev;
}

inline double energy_ev_to_au(double e_ev) {
  return e_ev / constants::hartree_ev;
}

inline double length_bohr_to_angstrom(double r_bohr) {
  return r_bohr * constants::bohr_radius_angstrom;
}

inline double length_angstrom_to_bohr(double r_angstrom) {
  return r_angstrom / constants::bohr_radius_angstrom;
}

}  // namespace qmol
