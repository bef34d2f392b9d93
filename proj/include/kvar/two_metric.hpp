// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef KVAR_TWO_METRIC_HPP
#define KVAR_TWO_METRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kvar/krein.hpp"

namespace kvar {

/// A Krein space together with a chosen fundamental symmetry; carries the
/// standardized two-inner product
///   psi(x, y, z) = [x+, y+] ||z+||_+^2 + [x-, y-] ||z-||_-^2
/// and its J-counterparts.
class StandardizedTwoKrein {
 public:
  StandardizedTwoKrein(KreinSpace space, FundamentalSymmetry symmetry);
  explicit StandardizedTwoKrein(FundamentalSymmetry symmetry);

  const KreinSpace& space() const { return space_; }
  const FundamentalSymmetry& symmetry() const { return symmetry_; }

  // Raw-coordinate evaluations used by the variation engine.
  Complex psi_raw(const Vec& x, const Vec& y, const Vec& z) const;
  Complex psi_j_raw(const Vec& x, const Vec& y, const Vec& z) const;
  double two_norm_j_raw(const Vec& x, const Vec& y) const;

 private:
  KreinSpace space_;
  FundamentalSymmetry symmetry_;
};

/// Standardized indefinite two-inner product of the space.
Complex psi(const StandardizedTwoKrein& s, const KVector& x, const KVector& y, const KVector& z);

/// psi(Jx, y, z); positive semidefinite in (x, x).
Complex psi_j(const StandardizedTwoKrein& s, const KVector& x, const KVector& y, const KVector& z);

/// N_J(x, y) = sqrt(psi_J(x, x, y)); a possibly degenerate two-norm.
double two_norm_j(const StandardizedTwoKrein& s, const KVector& x, const KVector& y);

/// (N+, N-) = (||x+|| ||y+||, ||x-|| ||y-||).
std::pair<double, double> component_two_norms(const StandardizedTwoKrein& s, const KVector& x,
                                              const KVector& y);

/// Nonzero x1 in F+ and x2 in F- with psi(x1,x1,z) > 0 > psi(x2,x2,z).
/// Requires z to have nonvanishing components in both subspaces.
std::pair<KVector, KVector> witness_indefinite(const StandardizedTwoKrein& s, const KVector& z);

/// Sampled vectors behind a worst-case defect; enough to re-evaluate any law.
struct AxiomWitness {
  Vec x, x2, y, z, t;
  Complex alpha;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  double worst_defect = 0.0;  // normalized by (1 + magnitude)
  double tolerance = 0.0;
  std::optional<AxiomWitness> witness;  // worst sample seen
  std::string note;                     // e.g. exception text
};

struct AxiomReport {
  std::vector<AxiomResult> laws;
  int sample_count = 0;
  std::uint64_t seed = 0;

  bool all_passed() const;
  const AxiomResult* find(const std::string& name) const;
};

/// Evaluates every two-inner-product and two-norm law on sampled vectors
/// and records per-law worst defects. Failures are reported, never thrown.
AxiomReport axiom_report(const StandardizedTwoKrein& s, int sample_count, std::uint64_t seed);

/// Re-evaluates one law's defect on a stored witness.
double recompute_defect(const StandardizedTwoKrein& s, const std::string& law,
                        const AxiomWitness& w);

}  // namespace kvar

#endif  // KVAR_TWO_METRIC_HPP
