// Copyright 2026 The EntangleKit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Pure states, density operators and convex mixtures of pure states.

#include <cstddef>
#include <vector>

#include "entanglekit/linalg.hpp"

namespace entanglekit {

/// Unit vector. Non-normalized input is rejected, never renormalized.
class PureState {
 public:
  explicit PureState(Vec v, const Tolerance& tol = Tolerance{});

  const Vec& vec() const { return vec_; }
  std::size_t dim() const { return vec_.dim(); }

 private:
  Vec vec_;
};

/// Positive operator of unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(Mat m, const Tolerance& tol = Tolerance{});

  const Mat& mat() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  Mat mat_;
};

struct EnsembleTerm {
  double weight = 0.0;
  PureState state;
};

/// Pure states tagged with probabilities that sum to one.
class MixedEnsemble {
 public:
  explicit MixedEnsemble(std::vector<EnsembleTerm> terms, const Tolerance& tol = Tolerance{});

  const std::vector<EnsembleTerm>& terms() const { return terms_; }
  std::size_t dim() const { return terms_.front().state.dim(); }

 private:
  std::vector<EnsembleTerm> terms_;
};

/// P_x u = <x, u> x, i.e. the matrix x x^H.
DensityOperator projector(const PureState& x);

/// Tr(A rho) for Hermitian A.
double expectation(const Mat& a, const DensityOperator& rho, const Tolerance& tol = Tolerance{});

/// sum_i p_i P_{x_i}
DensityOperator mix(const MixedEnsemble& ensemble, const Tolerance& tol = Tolerance{});

/// Square, positive and of unit trace.
bool is_density(const Mat& m, const Tolerance& tol = Tolerance{});

/// Tr(rho^2).
double purity(const DensityOperator& rho);

/// rank(rho) == 1, cross-checked against Tr(rho^2) == 1. Throws
/// ConsistencyError if the two tests disagree.
bool is_pure_density(const DensityOperator& rho, const Tolerance& tol = Tolerance{});

enum class SuperpositionNorm { Normalized, Unnormalized };

struct MixtureComparison {
  /// p1 <x1, A x1> + (1 - p1) <x2, A x2>
  double mixture_value = 0.0;
  /// <z, A z> for z = p1 x1 + (1 - p1) x2, divided by <z, z> when Normalized.
  double naive_value = 0.0;
};

/// Expectation of A in the two-state mixture versus in the vector obtained by
/// superposing the same states with the mixture weights.
MixtureComparison mixture_vs_superposition(const Mat& a, const PureState& x1,
                                           const PureState& x2, double p1,
                                           SuperpositionNorm norm = SuperpositionNorm::Normalized,
                                           const Tolerance& tol = Tolerance{});

/// Tr(XP - PX). Zero for every pair of finite matrices, whereas Tr(i hbar I)
/// is not, so the canonical commutation relation has no finite-dimensional
/// representation.
Complex ccr_trace_obstruction(const Mat& x, const Mat& p);

}  // namespace entanglekit
