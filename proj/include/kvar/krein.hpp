// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef KVAR_KREIN_HPP
#define KVAR_KREIN_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kvar/errors.hpp"

namespace kvar {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Absolute-plus-relative tolerance scaled by (1 + magnitude), applied to
/// every structural invariant.
inline constexpr double kInvariantTol = 1e-9;

/// Component-norm radicands may dip this far below zero before the owning
/// symmetry is declared broken.
inline constexpr double kRadicandClamp = -1e-12;

/// Dimension cap keeping the eigenvalue oracles cheap.
inline constexpr int kMaxDim = 64;

/// Contraction margin for angular operators: spectral norm < 1 - margin.
inline constexpr double kContractionMargin = 1e-6;

/// Finite-dimensional space with the canonical diagonal indefinite form
/// [x, y] = sum_i sigma_i x_i conj(y_i), sigma_i in {+1, -1}.
/// The form is linear in the first slot and conjugate-linear in the second.
class KreinSpace {
 public:
  explicit KreinSpace(std::vector<int> signature);

  int dim() const { return static_cast<int>(signature_.size()); }
  int positive_dim() const { return p_; }
  int negative_dim() const { return q_; }
  const std::vector<int>& signature() const { return signature_; }

  /// Indices of the +1 / -1 entries of the signature.
  const std::vector<int>& positive_indices() const { return pos_idx_; }
  const std::vector<int>& negative_indices() const { return neg_idx_; }

  /// [x, y] on raw coordinate vectors (sizes already validated by caller).
  Complex form(const Vec& x, const Vec& y) const;

  /// The diagonal Gram matrix diag(sigma).
  Eigen::VectorXd gram_diagonal() const;

  friend bool operator==(const KreinSpace&, const KreinSpace&) = default;

 private:
  std::vector<int> signature_;
  std::vector<int> pos_idx_, neg_idx_;
  int p_ = 0, q_ = 0;
};

/// A coordinate vector bound to its owning space.
class KVector {
 public:
  KVector(KreinSpace space, Vec coords);

  const KreinSpace& space() const { return space_; }
  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  KVector operator+(const KVector& rhs) const;
  KVector operator-(const KVector& rhs) const;
  KVector operator*(Complex alpha) const;
  friend KVector operator*(Complex alpha, const KVector& x) { return x * alpha; }

 private:
  KreinSpace space_;
  Vec coords_;
};

/// Validates the two are in the same space; throws SpaceMismatchError.
void require_same_space(const KreinSpace& a, const KreinSpace& b);

/// Clamped squared component norms of a raw coordinate vector.
struct ComponentNormsSq {
  double plus;   // [x+, x+], clamped at zero
  double minus;  // -[x-, x-], clamped at zero
};

/// Involution J with [Jx, y] = [x, Jy] and positive definite [Jx, y];
/// selects a fundamental decomposition F = F+ [+] F- via (I +- J) / 2.
class FundamentalSymmetry {
 public:
  /// Validates all invariants: J^2 = I, self-adjointness of the associated
  /// form, and its positive definiteness. Throws InvalidSymmetryError.
  FundamentalSymmetry(KreinSpace space, Mat j);

  /// J0 = diag(sigma).
  static FundamentalSymmetry canonical(const KreinSpace& space);

  /// Skips invariant validation. Fault-injection hook for the axiom
  /// reporter; never used by library code paths.
  static FundamentalSymmetry unchecked(KreinSpace space, Mat j);

  const KreinSpace& space() const { return space_; }
  const Mat& matrix() const { return j_; }
  const Mat& positive_projector() const { return p_plus_; }
  const Mat& negative_projector() const { return p_minus_; }

  /// Hermitian positive definite matrix of (x, y) -> [Jx, y].
  Mat associated_form() const;

  /// Components of a raw coordinate vector under this decomposition.
  Vec plus(const Vec& x) const { return p_plus_ * x; }
  Vec minus(const Vec& x) const { return p_minus_ * x; }

  /// Squared component norms; radicands below the clamp raise
  /// InvalidSymmetryError.
  ComponentNormsSq component_norms_sq(const Vec& x) const;

  /// sqrt([Jx, x]) on raw coordinates.
  double j_norm(const Vec& x) const;

 private:
  FundamentalSymmetry() = default;
  void finish_construction();

  KreinSpace space_{std::vector<int>{1, -1}};
  Mat j_, p_plus_, p_minus_;
};

/// Contraction K mapping the canonical positive coordinates (p of them)
/// to the canonical negative coordinates (q of them); parametrizes an
/// alternative fundamental decomposition by graph subspaces.
class AngularOperator {
 public:
  /// Validates spectral norm < 1 - kContractionMargin.
  explicit AngularOperator(Mat k);

  const Mat& matrix() const { return k_; }
  double spectral_norm() const { return norm_; }
  int rows() const { return static_cast<int>(k_.rows()); }  // q
  int cols() const { return static_cast<int>(k_.cols()); }  // p

 private:
  Mat k_;
  double norm_ = 0.0;
};

/// Norm-equivalence constants: alpha ||x||_J1 <= ||x||_J2 <= beta ||x||_J1.
struct EquivalenceConstants {
  double alpha;
  double beta;
};

/// Canonical space for a +-1 signature. Throws DimensionError,
/// SignatureError, or DefiniteFormError.
KreinSpace make_space(const std::vector<int>& signature);

/// [x, y]; linear in x, conjugate-linear in y.
Complex inner(const KVector& x, const KVector& y);

/// Fundamental decomposition x = x+ + x- with x+ = (x + Jx)/2.
std::pair<KVector, KVector> project(const FundamentalSymmetry& j, const KVector& x);

/// (||x+||_+, ||x-||_-) for the decomposition selected by j.
std::pair<double, double> component_norms(const FundamentalSymmetry& j, const KVector& x);

/// sqrt([Jx, x]) = sqrt(||x+||_+^2 + ||x-||_-^2).
double j_norm(const FundamentalSymmetry& j, const KVector& x);

/// Fundamental symmetry whose positive subspace is the graph {(u, Ku)}
/// and negative subspace the graph {(K* v, v)}.
FundamentalSymmetry symmetry_from_angular(const KreinSpace& space, const AngularOperator& k);

/// Extremal generalized eigenvalues of the pair of associated forms,
/// as norm-equivalence constants between the two J-norms.
EquivalenceConstants equivalence_constants(const FundamentalSymmetry& j1,
                                           const FundamentalSymmetry& j2);

}  // namespace kvar

#endif  // KVAR_KREIN_HPP
