#include "qmol/integrals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmol/quadrature.hpp"

namespace qmol {

namespace {

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

AngularKind axis_angular(Axis axis) {
  switch (axis) {
    case Axis::x:
      return AngularKind::px;
    case Axis::y:
      return AngularKind::py;
    case Axis::z:
      return AngularKind::pz;
  }
  return AngularKind::px;
}

}  // namespace

double overlap_s_s(double zeta1, double zeta2) {
  if (!(zeta1 > 0.0) || !(zeta2 > 0.0))
    throw std::invalid_argument("overlap_s_s: charges must be positive");
  return 8.0 * std::pow(zeta1 * zeta2, 1.5) / std::pow(zeta1 + zeta2, 3);
}

double dipole_s_p(double zeta_s, const OrbitalSpec& p_spec,
                  Axis operator_axis) {
  if (!(zeta_s > 0.0))
    throw std::invalid_argument("dipole_s_p: zeta_s must be positive");
  if (p_spec.l() != 1)
    throw std::invalid_argument("dipole_s_p: p_spec must have l = 1");
  if (p_spec.angular() != axis_angular(operator_axis)) return 0.0;

  // Angular reduction of the matched-axis integral leaves
  // (2/sqrt3) zeta_s^{3/2} int r^3 R_p(r) e^{-zeta_s r} dr,
  // with the radial moment evaluated through Gamma-function moments of the
  // polynomial expansion of R_p.
  const RadialPolynomial poly = radial_polynomial(p_spec);
  const double s = zeta_s + poly.zeta;
  double moment = 0.0;
  for (std::size_t k = 0; k < poly.coeff.size(); ++k)
    moment += poly.coeff[k] * factorial(static_cast<int>(k) + 3) /
              std::pow(s, static_cast<double>(k) + 4);
  return std::abs(2.0 / std::sqrt(3.0) * std::pow(zeta_s, 1.5) * moment);
}

CouplingCoefficient helium_coupling(const EffectiveCharges& charges) {
  const double a = charges.alpha;
  const double b = charges.beta;
  const double g = charges.gamma;
  if (!(a > 0.0) || !(b > 0.0) || !(g > 0.0))
    throw std::invalid_argument("helium_coupling: charges must be positive");
  const double value = 65536.0 * std::pow(a, 6) * std::pow(b, 3) *
                       std::pow(g, 5) /
                       (std::pow(a + b, 6) * std::pow(a + g, 10));
  return {value, CouplingProvenance::helium_closed_form};
}

double radial_dipole_integral(const OrbitalSpec& bra, const OrbitalSpec& ket) {
  if (bra.l() != 0)
    throw std::invalid_argument("radial_dipole_integral: bra must have l = 0");
  if (ket.l() != 1)
    throw std::invalid_argument("radial_dipole_integral: ket must have l = 1");

  const RadialPolynomial rb = radial_polynomial(bra);
  const RadialPolynomial rk = radial_polynomial(ket);
  auto integrand = [&rb, &rk](double r) { return r * r * r * rb(r) * rk(r); };

  const double scale = 4.0 / (rb.zeta + rk.zeta);
  const QuadratureResult q =
      integrate_semi_infinite(integrand, scale, 1e-12);
  if (!q.converged)
    throw std::runtime_error(
        "radial_dipole_integral: quadrature did not converge, achieved error "
        "estimate " +
        std::to_string(q.error));
  return q.value;
}

CouplingCoefficient one_electron_coupling(double radial_integral_bohr) {
  if (radial_integral_bohr < 0.0)
    throw std::invalid_argument(
        "one_electron_coupling: radial integral must be non-negative");
  return {radial_integral_bohr * radial_integral_bohr / 3.0,
          CouplingProvenance::radial_integral};
}

CouplingCoefficient atomic_radius_coupling() {
  return {1.0, CouplingProvenance::atomic_radius_estimate};
}

}  // namespace qmol
