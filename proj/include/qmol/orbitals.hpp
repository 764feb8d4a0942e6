#pragma once

#include <vector>

namespace qmol {

enum class Axis { x, y, z };

enum class AngularKind { s, px, py, pz };

/// Screening charges of the two-electron model: alpha for the ground-state
/// pair (variational value 27/16), beta for the inner electron of the
/// excited atom, gamma for the 2p electron in the unit-charge residue.
struct EffectiveCharges {
  double alpha = 27.0 / 16.0;
  double beta = 2.0;
  double gamma = 0.5;
};

/// A one-electron orbital: either a Slater 1s with screening charge zeta,
/// or a hydrogen-like (n, l) state whose radial exponent is zeta (= Z/n).
/// Lengths are in Bohr throughout.
class OrbitalSpec {
 public:
  enum class Kind { slater_1s, hydrogenic };

  static OrbitalSpec slater1s(double zeta);
  static OrbitalSpec hydrogenic(int n, int l, double zeta, AngularKind angular);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int l() const { return l_; }
  double zeta() const { return zeta_; }
  AngularKind angular() const { return angular_; }

 private:
  OrbitalSpec(Kind kind, int n, int l, double zeta, AngularKind angular)
      : kind_(kind), n_(n), l_(l), zeta_(zeta), angular_(angular) {}

  Kind kind_;
  int n_;
  int l_;
  double zeta_;
  AngularKind angular_;
};

/// Radial function in the form e^{-zeta r} * sum_k coeff[k] r^k.
struct RadialPolynomial {
  std::vector<double> coeff;
  double zeta = 1.0;

  double operator()(double r) const;
};

/// Expansion of the radial part R_{nl}(r) of spec (for slater_1s this is
/// R_10 = 2 zeta^{3/2} e^{-zeta r}, i.e. the amplitude with the 1/sqrt(4 pi)
/// angular factor removed).
RadialPolynomial radial_polynomial(const OrbitalSpec& spec);

/// Value of the orbital at radius r: R_{nl}(r) for hydrogenic kinds, the
/// full 1s amplitude zeta^{3/2}/sqrt(pi) e^{-zeta r} for slater_1s.
/// Rejects r < 0.
double radial_value(const OrbitalSpec& spec, double r_bohr);

/// Real p angular factor sqrt(3/4pi) * {sin t cos p, sin t sin p, cos t}
/// for axes x, y, z; the s factor is 1/sqrt(4 pi).
double p_angular_value(Axis axis, double theta, double phi);

/// Location of the maximum of the radial probability density r^2 R^2(r),
/// bracketed by a scan and refined by golden-section search to 1e-8 Bohr.
double radial_density_max(const OrbitalSpec& spec);

}  // namespace qmol
