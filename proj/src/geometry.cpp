#include "qmol/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmol {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Distance from nucleus A to the lobe point at polar angle theta, with the
// excited nucleus B at distance r_axis on the internuclear axis and the
// lobe oriented toward A.
double lobe_point_distance(LobeKind kind, double r_axis, double amplitude,
                           double theta) {
  const double r = lobe_radius(kind, amplitude, theta);
  const double along = r_axis - r * std::cos(theta);
  const double lateral = r * std::sin(theta);
  return std::hypot(along, lateral);
}

struct ThetaMin {
  double theta;
  double distance;
};

// Golden-section minimization of the lobe-point distance over [0, pi/2].
ThetaMin min_over_theta(LobeKind kind, double r_axis, double amplitude) {
  auto d = [&](double th) {
    return lobe_point_distance(kind, r_axis, amplitude, th);
  };
  double lo = 0.0;
  double hi = kHalfPi;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 90; ++i) {
    const double m1 = hi - inv_phi * (hi - lo);
    const double m2 = lo + inv_phi * (hi - lo);
    if (d(m1) < d(m2))
      hi = m2;
    else
      lo = m1;
  }
  double theta = 0.5 * (lo + hi);
  // snap to the interval ends when the minimum sits on the boundary
  if (theta < 1e-7) theta = 0.0;
  if (kHalfPi - theta < 1e-7) theta = kHalfPi;
  return {theta, d(theta)};
}

}  // namespace

double lobe_radius(LobeKind kind, double amplitude, double theta_rad) {
  if (!(amplitude > 0.0))
    throw std::invalid_argument("lobe_radius: amplitude must be positive");
  const double t = kind == LobeKind::perpendicular ? std::sin(theta_rad)
                                                   : std::cos(theta_rad);
  return amplitude * t * t;
}

ContactGeometry contact_distance(double sphere_radius, double lobe_amplitude,
                                 LobeKind kind) {
  const double s = sphere_radius;
  const double big_l = lobe_amplitude;
  if (!(s > 0.0) || !(big_l > 0.0))
    throw std::invalid_argument("contact_distance: radii must be positive");

  auto gap = [&](double r_axis) {
    return min_over_theta(kind, r_axis, big_l).distance - s;
  };

  // At R = s + 2L every lobe point is farther than s from A; walk down to
  // the first R where the surfaces meet.  The walk skips the spurious inner
  // tangencies (lobe tip poking through the far side of the sphere) that a
  // plain bisection of [s, s + 2L] can land on.
  const double hi_end = s + 2.0 * big_l;
  const int scan_steps = 2000;
  const double step = (hi_end - s) / scan_steps;
  double hi = hi_end;
  double lo = hi_end;
  bool bracketed = false;
  for (int i = 1; i <= scan_steps; ++i) {
    lo = hi_end - i * step;
    if (lo < s) lo = s;
    if (gap(lo) <= 0.0) {
      bracketed = true;
      break;
    }
    hi = lo;
  }
  if (!bracketed)
    throw std::runtime_error(
        "contact_distance: no contact found in [s, s + 2L]");

  for (int i = 0; i < 64; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double r0 = 0.5 * (lo + hi);
  const ThetaMin contact = min_over_theta(kind, r0, big_l);

  ContactGeometry g;
  g.r0_bohr = r0;
  g.theta_contact_deg = contact.theta * 180.0 / std::numbers::pi;
  g.kind = kind;
  g.sphere_radius_bohr = s;
  g.lobe_amplitude_bohr = big_l;
  return g;
}

}  // namespace qmol
