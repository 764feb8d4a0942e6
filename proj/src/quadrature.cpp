#include "qmol/quadrature.hpp"

#include <cmath>
#include <cstddef>

namespace qmol {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kAbscissae[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Weights of the embedded 7-point Gauss rule (odd Kronrod abscissae).
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double gauss = 0.0;
  double kronrod = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kAbscissae[i];
    double fsum = f(center + dx);
    if (i != 7) fsum += f(center - dx);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadratureResult& out) {
  const PanelResult p = gk15(f, a, b);
  if (p.error <= tol || depth >= max_depth) {
    out.value += p.kronrod;
    out.error += p.error;
    if (p.error > tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  QuadratureResult out;
  out.converged = true;
  adapt(f, a, b, abs_tol, 0, max_depth, out);
  return out;
}

QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, double scale, double abs_tol) {
  auto mapped = [&f, scale](double t) {
    const double u = 1.0 - t;
    if (u <= 0.0) return 0.0;
    const double r = -scale * std::log(u);
    return f(r) * scale / u;
  };
  return integrate_adaptive(mapped, 0.0, 1.0, abs_tol);
}

}  // namespace qmol
