#pragma once

#include "qmol/orbitals.hpp"

namespace qmol {

enum class CouplingProvenance {
  helium_closed_form,
  radial_integral,
  atomic_radius_estimate,
};

/// Dimensionless coefficient c in the resonance coupling A = c e^2 a^2 / R^3.
struct CouplingCoefficient {
  double value = 0.0;
  CouplingProvenance provenance = CouplingProvenance::helium_closed_form;
};

/// Overlap of two normalized 1s orbitals with charges zeta1, zeta2:
/// 8 (zeta1 zeta2)^{3/2} / (zeta1 + zeta2)^3.
double overlap_s_s(double zeta1, double zeta2);

/// Length (in Bohr, charge factored out) of the dipole integral between a
/// Slater 1s orbital with charge zeta_s and a p orbital, for the given
/// component of the position operator.  Cross-axis combinations vanish by
/// angular orthogonality; matched-axis values are returned as magnitudes.
double dipole_s_p(double zeta_s, const OrbitalSpec& p_spec, Axis operator_axis);

/// Two-electron-model coupling coefficient
/// 2^16 a^6 b^3 g^5 / ((a+b)^6 (a+g)^10) for charges (a, b, g).
CouplingCoefficient helium_coupling(const EffectiveCharges& charges = {});

/// int_0^inf r^3 R_{n0}(r) R_{n'1}(r) dr in Bohr, evaluated by adaptive
/// Gauss-Kronrod quadrature.  Throws with the achieved error estimate when
/// the quadrature does not converge.
double radial_dipole_integral(const OrbitalSpec& bra, const OrbitalSpec& ket);

/// One-valent-electron coupling coefficient (integral/a)^2 / 3.
CouplingCoefficient one_electron_coupling(double radial_integral_bohr);

/// Coarse estimate A ~ e^2 a^2 / R^3, i.e. coefficient 1.
CouplingCoefficient atomic_radius_coupling();

}  // namespace qmol
