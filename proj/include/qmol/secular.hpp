#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmol/orbitals.hpp"

namespace qmol {

/// Which excitation-exchange basis the secular problem runs over:
/// 12 product states for the two-electron pair, 6 for one valent electron.
enum class CaseKind { helium_12, one_electron_6 };

enum class Site { atom_A, atom_B };

/// For the two-electron case, which electron of the excited atom carries
/// the p orbital.
enum class Slot { first, second };

enum class BlockAxis { xy, z };

struct BasisLabel {
  CaseKind kind;
  Axis axis;
  Site site;
  std::optional<Slot> slot;  // two-electron case only

  /// Ket notation, e.g. "|0~0~0x>" or "|x0>".
  std::string ket() const;
};

/// All basis labels in canonical order: axis-major (x, y, z); within an
/// axis the excited atom B comes first, and for the two-electron case the
/// p orbital sits on the second electron before the first.
std::vector<BasisLabel> basis_labels(CaseKind kind);

/// The labels of one axis block, in the same canonical order.
std::vector<BasisLabel> block_labels(CaseKind kind, Axis axis);

/// Minimal dense square matrix, row-major.
class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  int n_;
  std::vector<double> a_;
};

/// Per-axis first-order perturbation block over the excitation-exchange
/// basis: zero diagonal and within-site entries, cross-site entries equal
/// to the coupling (x, y) or to minus twice the coupling (z).
/// coupling_a is the positive coupling energy A.
Matrix build_block(CaseKind kind, Axis axis, double coupling_a);

/// The full matrix over all basis labels (12x12 or 6x6), assembled as a
/// whole so that the block structure can be verified rather than assumed.
Matrix build_full(CaseKind kind, double coupling_a);

struct EigenLevel {
  double value;
  int multiplicity;
};

struct SecularSpectrum {
  BlockAxis block_axis = BlockAxis::xy;
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // [i] pairs eigenvalues[i]
  std::map<int, std::string> term_labels;         // bound-state index -> term

  /// Eigenvalues clustered into (value, multiplicity) levels.
  std::vector<EigenLevel> grouped(double tol = 1e-9) const;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // orthonormal
};

/// Cyclic Jacobi eigensolver for small symmetric matrices; sweeps until the
/// off-diagonal norm falls below 1e-12 of the matrix norm.  Eigenvalues are
/// sorted ascending and each eigenvector's first significant component is
/// made positive.  Rejects non-symmetric input.
EigenDecomposition jacobi_eigensolve(const Matrix& m);

/// Solve one axis block and attach term labels to bound (negative) levels:
/// 1Pi_u for x/y blocks, 1Sigma_g for z blocks.
SecularSpectrum solve_block(const Matrix& m, Axis axis);

/// The eigenvector of the lowest (bound) level, or absence when the
/// spectrum has no negative eigenvalue.
std::optional<std::vector<double>> bound_state_vector(
    const SecularSpectrum& spectrum);

}  // namespace qmol
