// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "kvar/krein.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kvar {

namespace {

double rel_defect(double raw, double scale) { return raw / (1.0 + scale); }

}  // namespace

KreinSpace::KreinSpace(std::vector<int> signature) : signature_(std::move(signature)) {
  if (signature_.size() < 2) {
    throw DimensionError("dimension: signature needs at least two entries");
  }
  if (static_cast<int>(signature_.size()) > kMaxDim) {
    throw DimensionError("dimension: capped at 64");
  }
  for (int i = 0; i < static_cast<int>(signature_.size()); ++i) {
    if (signature_[i] == 1) {
      pos_idx_.push_back(i);
    } else if (signature_[i] == -1) {
      neg_idx_.push_back(i);
    } else {
      throw SignatureError("signature entries must be +1 or -1");
    }
  }
  p_ = static_cast<int>(pos_idx_.size());
  q_ = static_cast<int>(neg_idx_.size());
  if (p_ == 0 || q_ == 0) {
    throw DefiniteFormError("definite form: signature must contain both +1 and -1");
  }
}

Complex KreinSpace::form(const Vec& x, const Vec& y) const {
  Complex acc = 0.0;
  for (int i = 0; i < dim(); ++i) {
    acc += static_cast<double>(signature_[i]) * x[i] * std::conj(y[i]);
  }
  return acc;
}

Eigen::VectorXd KreinSpace::gram_diagonal() const {
  Eigen::VectorXd g(dim());
  for (int i = 0; i < dim(); ++i) g[i] = signature_[i];
  return g;
}

KVector::KVector(KreinSpace space, Vec coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim()) {
    throw DimensionError("coordinate count must equal space dimension");
  }
}

KVector KVector::operator+(const KVector& rhs) const {
  require_same_space(space_, rhs.space_);
  return KVector(space_, coords_ + rhs.coords_);
}

KVector KVector::operator-(const KVector& rhs) const {
  require_same_space(space_, rhs.space_);
  return KVector(space_, coords_ - rhs.coords_);
}

KVector KVector::operator*(Complex alpha) const {
  return KVector(space_, Vec(alpha * coords_));
}

void require_same_space(const KreinSpace& a, const KreinSpace& b) {
  if (!(a == b)) throw SpaceMismatchError("space mismatch");
}

KreinSpace make_space(const std::vector<int>& signature) { return KreinSpace(signature); }

Complex inner(const KVector& x, const KVector& y) {
  require_same_space(x.space(), y.space());
  return x.space().form(x.coords(), y.coords());
}

FundamentalSymmetry::FundamentalSymmetry(KreinSpace space, Mat j) {
  space_ = std::move(space);
  j_ = std::move(j);
  const int n = space_.dim();
  if (j_.rows() != n || j_.cols() != n) {
    throw SpaceMismatchError("space mismatch: symmetry matrix has wrong shape");
  }

  const double mag = j_.cwiseAbs().maxCoeff();
  const double invol = (j_ * j_ - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (rel_defect(invol, mag * mag) > kInvariantTol) {
    throw InvalidSymmetryError("invalid symmetry: J*J != I");
  }

  // [Jx, y] = [x, Jy] is equivalent to Hermiticity of M = G*J.
  const Mat m = space_.gram_diagonal().asDiagonal().toDenseMatrix().cast<Complex>() * j_;
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (rel_defect(herm, mag) > kInvariantTol) {
    throw InvalidSymmetryError("invalid symmetry: associated form not Hermitian");
  }

  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw InvalidSymmetryError("invalid symmetry: associated form not positive definite");
  }

  finish_construction();
}

void FundamentalSymmetry::finish_construction() {
  const int n = space_.dim();
  p_plus_ = 0.5 * (Mat::Identity(n, n) + j_);
  p_minus_ = 0.5 * (Mat::Identity(n, n) - j_);
}

FundamentalSymmetry FundamentalSymmetry::canonical(const KreinSpace& space) {
  FundamentalSymmetry s;
  s.space_ = space;
  s.j_ = space.gram_diagonal().asDiagonal().toDenseMatrix().cast<Complex>();
  s.finish_construction();
  return s;
}

FundamentalSymmetry FundamentalSymmetry::unchecked(KreinSpace space, Mat j) {
  FundamentalSymmetry s;
  s.space_ = std::move(space);
  s.j_ = std::move(j);
  s.finish_construction();
  return s;
}

Mat FundamentalSymmetry::associated_form() const {
  return space_.gram_diagonal().asDiagonal().toDenseMatrix().cast<Complex>() * j_;
}

ComponentNormsSq FundamentalSymmetry::component_norms_sq(const Vec& x) const {
  const Vec xp = p_plus_ * x;
  const Vec xm = p_minus_ * x;
  double plus = space_.form(xp, xp).real();
  double minus = -space_.form(xm, xm).real();
  const double scale = x.squaredNorm();
  if (plus < kRadicandClamp * (1.0 + scale) || minus < kRadicandClamp * (1.0 + scale)) {
    throw InvalidSymmetryError("invalid symmetry: negative component-norm radicand");
  }
  return {std::max(plus, 0.0), std::max(minus, 0.0)};
}

double FundamentalSymmetry::j_norm(const Vec& x) const {
  const auto ns = component_norms_sq(x);
  return std::sqrt(ns.plus + ns.minus);
}

std::pair<KVector, KVector> project(const FundamentalSymmetry& j, const KVector& x) {
  require_same_space(j.space(), x.space());
  return {KVector(x.space(), j.plus(x.coords())), KVector(x.space(), j.minus(x.coords()))};
}

std::pair<double, double> component_norms(const FundamentalSymmetry& j, const KVector& x) {
  require_same_space(j.space(), x.space());
  const auto ns = j.component_norms_sq(x.coords());
  return {std::sqrt(ns.plus), std::sqrt(ns.minus)};
}

double j_norm(const FundamentalSymmetry& j, const KVector& x) {
  require_same_space(j.space(), x.space());
  return j.j_norm(x.coords());
}

AngularOperator::AngularOperator(Mat k) : k_(std::move(k)) {
  if (k_.size() == 0) {
    norm_ = 0.0;
    return;
  }
  Eigen::JacobiSVD<Mat> svd(k_);
  norm_ = svd.singularValues()[0];
  if (norm_ >= 1.0 - kContractionMargin) {
    throw NotContractiveError("not uniformly contractive: ||K|| >= 1 - 1e-6");
  }
}

FundamentalSymmetry symmetry_from_angular(const KreinSpace& space, const AngularOperator& k) {
  const int p = space.positive_dim();
  const int q = space.negative_dim();
  const int n = space.dim();
  if (k.rows() != q || k.cols() != p) {
    throw SpaceMismatchError("space mismatch: angular operator must be q x p");
  }

  const auto& pos = space.positive_indices();
  const auto& neg = space.negative_indices();
  const Mat& km = k.matrix();
  const Mat kh = km.adjoint();

  // Basis change: first p columns span the graph {(u, Ku)}, the last q
  // columns the graph {(K* v, v)}, scattered to the signature's positions.
  Mat t = Mat::Zero(n, n);
  for (int i = 0; i < p; ++i) {
    t(pos[i], i) = 1.0;
    for (int j = 0; j < q; ++j) t(neg[j], i) = km(j, i);
  }
  for (int j = 0; j < q; ++j) {
    t(neg[j], p + j) = 1.0;
    for (int i = 0; i < p; ++i) t(pos[i], p + j) = kh(i, j);
  }

  Eigen::VectorXd d(n);
  d.head(p).setOnes();
  d.tail(q).setConstant(-1.0);
  const Mat j_mat = t * d.asDiagonal() * t.inverse();
  return FundamentalSymmetry(space, j_mat);
}

EquivalenceConstants equivalence_constants(const FundamentalSymmetry& j1,
                                           const FundamentalSymmetry& j2) {
  require_same_space(j1.space(), j2.space());
  if ((j1.matrix().array() == j2.matrix().array()).all()) return {1.0, 1.0};

  const Mat m1 = 0.5 * (j1.associated_form() + j1.associated_form().adjoint());
  const Mat m2 = 0.5 * (j2.associated_form() + j2.associated_form().adjoint());
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(m2, m1, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw InvalidSymmetryError("invalid symmetry: generalized eigenproblem failed");
  }
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) {
    throw InvalidSymmetryError("invalid symmetry: nonpositive generalized eigenvalue");
  }
  return {std::sqrt(lo), std::sqrt(hi)};
}

}  // namespace kvar
