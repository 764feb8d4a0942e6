#include "qmol/secular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmol {

namespace {

char axis_char(Axis axis) {
  switch (axis) {
    case Axis::x:
      return 'x';
    case Axis::y:
      return 'y';
    case Axis::z:
      return 'z';
  }
  return '?';
}

double matrix_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

void require_symmetric(const Matrix& m) {
  const double scale = matrix_norm(m);
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * std::max(scale, 1.0))
        throw std::invalid_argument("eigensolve: matrix is not symmetric");
}

}  // namespace

std::string BasisLabel::ket() const {
  const char a = axis_char(axis);
  std::string inner;
  if (kind == CaseKind::helium_12) {
    const std::string excited =
        slot == Slot::first ? std::string{a, '0'} : std::string{'0', a};
    // electron order is (atom A pair, atom B pair)
    inner = site == Site::atom_B ? "0~0~" + excited : excited + "0~0~";
  } else {
    inner = site == Site::atom_B ? std::string{'0', a} : std::string{a, '0'};
  }
  return "|" + inner + ">";
}

std::vector<BasisLabel> block_labels(CaseKind kind, Axis axis) {
  std::vector<BasisLabel> out;
  if (kind == CaseKind::helium_12) {
    for (Site site : {Site::atom_B, Site::atom_A})
      for (Slot slot : {Slot::second, Slot::first})
        out.push_back({kind, axis, site, slot});
  } else {
    for (Site site : {Site::atom_B, Site::atom_A})
      out.push_back({kind, axis, site, std::nullopt});
  }
  return out;
}

std::vector<BasisLabel> basis_labels(CaseKind kind) {
  std::vector<BasisLabel> out;
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    auto block = block_labels(kind, axis);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Matrix build_block(CaseKind kind, Axis axis, double coupling_a) {
  if (!(coupling_a > 0.0))
    throw std::invalid_argument("build_block: coupling must be positive");
  // The z-z component of the dipole-dipole operator carries the factor -2
  // relative to the transverse components.
  const double element = axis == Axis::z ? -2.0 * coupling_a : coupling_a;
  const auto labels = block_labels(kind, axis);
  const int n = static_cast<int>(labels.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (labels[i].site != labels[j].site) m(i, j) = element;
  return m;
}

Matrix build_full(CaseKind kind, double coupling_a) {
  if (!(coupling_a > 0.0))
    throw std::invalid_argument("build_full: coupling must be positive");
  const auto labels = basis_labels(kind);
  const int n = static_cast<int>(labels.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Matrix elements vanish between different axes (angular
      // orthogonality of the one-electron dipole integrals) and between
      // states with the excitation on the same atom.
      if (labels[i].axis != labels[j].axis) continue;
      if (labels[i].site == labels[j].site) continue;
      m(i, j) = labels[i].axis == Axis::z ? -2.0 * coupling_a : coupling_a;
    }
  }
  return m;
}

std::vector<EigenLevel> SecularSpectrum::grouped(double tol) const {
  std::vector<EigenLevel> levels;
  const double scale = eigenvalues.empty()
                           ? 1.0
                           : std::max(std::abs(eigenvalues.front()),
                                      std::abs(eigenvalues.back()));
  for (double v : eigenvalues) {
    if (!levels.empty() &&
        std::abs(v - levels.back().value) <= tol * std::max(scale, 1.0))
      ++levels.back().multiplicity;
    else
      levels.push_back({v, 1});
  }
  return levels;
}

EigenDecomposition jacobi_eigensolve(const Matrix& input) {
  require_symmetric(input);
  const int n = input.size();
  Matrix a = input;
  Matrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double norm = matrix_norm(a);
  auto off_norm = [&a, n]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-12 * std::max(norm, 1e-300);
       ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (int idx : order) {
    out.eigenvalues.push_back(a(idx, idx));
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) col[k] = v(k, idx);
    // fix the overall sign: first significant component positive
    for (double c : col) {
      if (std::abs(c) > 1e-10) {
        if (c < 0.0)
          for (double& x : col) x = -x;
        break;
      }
    }
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

SecularSpectrum solve_block(const Matrix& m, Axis axis) {
  EigenDecomposition eig = jacobi_eigensolve(m);
  SecularSpectrum spectrum;
  spectrum.block_axis = axis == Axis::z ? BlockAxis::z : BlockAxis::xy;
  spectrum.eigenvalues = std::move(eig.eigenvalues);
  spectrum.eigenvectors = std::move(eig.eigenvectors);

  const double scale =
      std::max(std::abs(spectrum.eigenvalues.front()),
               std::abs(spectrum.eigenvalues.back()));
  for (double& v : spectrum.eigenvalues)
    if (std::abs(v) <= 1e-12 * std::max(scale, 1e-300)) v = 0.0;

  for (int i = 0; i < static_cast<int>(spectrum.eigenvalues.size()); ++i) {
    if (spectrum.eigenvalues[i] < -1e-9 * std::max(scale, 1e-300))
      spectrum.term_labels[i] =
          spectrum.block_axis == BlockAxis::z ? "1Sigma_g" : "1Pi_u";
  }

  // Bound states take their symmetry-adapted form, components of equal
  // magnitude over the exchange basis; exact values make the term-by-term
  // cancellations downstream exact as well.
  for (const auto& [index, label] : spectrum.term_labels) {
    auto& vec = spectrum.eigenvectors[index];
    const double mag = 1.0 / std::sqrt(static_cast<double>(vec.size()));
    bool uniform = true;
    for (double c : vec) uniform &= std::abs(std::abs(c) - mag) < 1e-8;
    if (uniform)
      for (double& c : vec) c = std::copysign(mag, c);
  }
  return spectrum;
}

std::optional<std::vector<double>> bound_state_vector(
    const SecularSpectrum& spectrum) {
  if (spectrum.eigenvalues.empty()) return std::nullopt;
  if (spectrum.term_labels.find(0) == spectrum.term_labels.end())
    return std::nullopt;
  return spectrum.eigenvectors.front();
}

}  // namespace qmol
