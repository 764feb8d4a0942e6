#include "qmol/orbitals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmol {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

}  // namespace

OrbitalSpec OrbitalSpec::slater1s(double zeta) {
  if (!(zeta > 0.0))
    throw std::invalid_argument("slater1s: zeta must be positive");
  return OrbitalSpec(Kind::slater_1s, 1, 0, zeta, AngularKind::s);
}

OrbitalSpec OrbitalSpec::hydrogenic(int n, int l, double zeta,
                                    AngularKind angular) {
  if (n < 1) throw std::invalid_argument("hydrogenic: n must be >= 1");
  if (l < 0 || l >= n)
    throw std::invalid_argument("hydrogenic: l must satisfy 0 <= l < n");
  if (l > 1)
    throw std::invalid_argument("hydrogenic: only s and p orbitals supported");
  if (!(zeta > 0.0))
    throw std::invalid_argument("hydrogenic: zeta must be positive");
  const bool s_ok = l == 0 && angular == AngularKind::s;
  const bool p_ok = l == 1 && angular != AngularKind::s;
  if (!s_ok && !p_ok)
    throw std::invalid_argument(
        "hydrogenic: angular factor inconsistent with l");
  return OrbitalSpec(Kind::hydrogenic, n, l, zeta, angular);
}

double RadialPolynomial::operator()(double r) const {
  double poly = 0.0;
  for (std::size_t k = coeff.size(); k-- > 0;) poly = poly * r + coeff[k];
  return poly * std::exp(-zeta * r);
}

RadialPolynomial radial_polynomial(const OrbitalSpec& spec) {
  RadialPolynomial p;
  p.zeta = spec.zeta();
  if (spec.kind() == OrbitalSpec::Kind::slater_1s) {
    p.coeff = {2.0 * std::pow(spec.zeta(), 1.5)};
    return p;
  }
  const int n = spec.n();
  const int l = spec.l();
  const double z = spec.zeta();
  // R_nl = N (2 z r)^l L^{2l+1}_{n-l-1}(2 z r) e^{-z r} with the associated
  // Laguerre polynomial expanded term by term.
  const double norm = std::sqrt(std::pow(2.0 * z, 3) * factorial(n - l - 1) /
                                (2.0 * n * factorial(n + l)));
  p.coeff.assign(n, 0.0);
  for (int j = 0; j <= n - l - 1; ++j) {
    const double laguerre =
        (j % 2 == 0 ? 1.0 : -1.0) * binomial(n + l, n - l - 1 - j) /
        factorial(j);
    p.coeff[l + j] = norm * std::pow(2.0 * z, l + j) * laguerre;
  }
  return p;
}

double radial_value(const OrbitalSpec& spec, double r_bohr) {
  if (r_bohr < 0.0)
    throw std::invalid_argument("radial_value: r must be non-negative");
  if (spec.kind() == OrbitalSpec::Kind::slater_1s) {
    const double z = spec.zeta();
    return std::pow(z, 1.5) / std::sqrt(std::numbers::pi) *
           std::exp(-z * r_bohr);
  }
  return radial_polynomial(spec)(r_bohr);
}

double p_angular_value(Axis axis, double theta, double phi) {
  const double norm = std::sqrt(3.0 / (4.0 * std::numbers::pi));
  switch (axis) {
    case Axis::x:
      return norm * std::sin(theta) * std::cos(phi);
    case Axis::y:
      return norm * std::sin(theta) * std::sin(phi);
    case Axis::z:
      return norm * std::cos(theta);
  }
  return 0.0;
}

double radial_density_max(const OrbitalSpec& spec) {
  const RadialPolynomial radial = radial_polynomial(spec);
  auto density = [&radial](double r) {
    const double v = radial(r);
    return r * r * v * v;
  };

  // Bracket the global maximum on [0, 50/zeta] with a uniform scan; local
  // maxima of r^2 R^2 are separated by O(1/zeta), far above the grid step.
  const double upper = 50.0 / spec.zeta();
  const int n = 4096;
  int best = 0;
  double best_val = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double v = density(upper * i / n);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == n)
    throw std::runtime_error(
        "radial_density_max: no interior density maximum found");

  double lo = upper * (best - 1) / n;
  double hi = upper * (best + 1) / n;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (hi - lo > 1e-9) {
    const double m1 = hi - inv_phi * (hi - lo);
    const double m2 = lo + inv_phi * (hi - lo);
    if (density(m1) > density(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qmol
