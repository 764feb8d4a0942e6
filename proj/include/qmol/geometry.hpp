#pragma once

namespace qmol {

/// Shape of the excited atom's probability-density surface: the r(theta) =
/// L sin^2(theta) lobe bound in the x/y states (perpendicular) or the
/// L cos^2(theta) lobe bound in the z state (axial).
enum class LobeKind { perpendicular, axial };

struct ContactGeometry {
  double r0_bohr = 0.0;           // equilibrium internuclear distance
  double theta_contact_deg = 0.0; // polar angle of the touching point
  LobeKind kind = LobeKind::perpendicular;
  double sphere_radius_bohr = 0.0;
  double lobe_amplitude_bohr = 0.0;
};

/// Lobe radius L sin^2(theta) (perpendicular) or L cos^2(theta) (axial).
double lobe_radius(LobeKind kind, double amplitude, double theta_rad);

/// Equilibrium distance at which the ground-state sphere (radius s around
/// nucleus A) and the excited-state lobe (amplitude L around nucleus B,
/// oriented toward A) touch.  Solved in the meridian plane by golden-section
/// minimization over theta nested in a root search over R restricted to
/// [s, s + 2L]; the root search locks onto the outermost tangency, where the
/// surfaces separate for larger R.
ContactGeometry contact_distance(double sphere_radius, double lobe_amplitude,
                                 LobeKind kind);

}  // namespace qmol
