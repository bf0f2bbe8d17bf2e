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

// Product and separable states of two quantum systems, the range criterion,
// and the classifier that turns Schmidt data into verdicts with re-checkable
// certificates.

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "entanglekit/bipartite.hpp"
#include "entanglekit/classical.hpp"
#include "entanglekit/linalg.hpp"
#include "entanglekit/quantum.hpp"

namespace entanglekit {

struct ProductTerm {
  double weight = 0.0;
  PureState x;
  PureState y;
};

/// sum_i p_i (P_{x_i} (x) P_{y_i}), kept in decomposed form.
class SeparableDecomposition {
 public:
  SeparableDecomposition(BipartiteDims dims, std::vector<ProductTerm> terms,
                         const Tolerance& tol = Tolerance{});

  const BipartiteDims& dims() const { return dims_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }

 private:
  BipartiteDims dims_;
  std::vector<ProductTerm> terms_;
};

/// P_{x (x) y}. Also builds P_x (x) P_y and throws ConsistencyError if the
/// two differ by more than the tolerance.
DensityOperator product_pure(const PureState& x, const PureState& y,
                             const Tolerance& tol = Tolerance{});

DensityOperator separable_density(const SeparableDecomposition& dec,
                                  const Tolerance& tol = Tolerance{});

/// Orthonormal eigenvectors of rho whose eigenvalues clear the rank threshold.
std::vector<Vec> range_basis(const DensityOperator& rho, const Tolerance& tol = Tolerance{});

struct RangeCheck {
  std::size_t range_rank = 0;
  /// Dimension of span{x_i (x) y_i} over terms with nonzero weight.
  std::size_t span_rank = 0;
  /// Largest distance of a unit product vector x_i (x) y_i from range(rho).
  double max_term_residual = 0.0;
  /// Largest distance of a range basis vector from span{x_i (x) y_i}.
  double max_basis_residual = 0.0;
  bool holds = false;
};

/// Compares range(rho_s) with the span of the product vectors that build it;
/// containment is tested in both directions by projection residuals.
RangeCheck range_criterion_report(const SeparableDecomposition& dec,
                                  const Tolerance& tol = Tolerance{});

/// range(rho_s) == span{x_i (x) y_i}. Holds for every valid decomposition; a
/// false result points at a numerical or implementation problem.
bool check_range_criterion(const SeparableDecomposition& dec, const Tolerance& tol = Tolerance{});

enum class Verdict {
  ClassicalPure,
  ClassicalSeparable,
  QuantumProductPure,
  QuantumEntangledPure,
  QuantumSeparableByConstruction,
  Undetermined,
};

std::string_view to_string(Verdict v);

struct ProductCertificate {
  PureState x;
  PureState y;
  SchmidtDecomposition schmidt;
};

struct EntangledCertificate {
  SchmidtDecomposition schmidt;
};

struct SeparableCertificate {
  SeparableDecomposition decomposition;
  RangeCheck range;
};

/// Attached to mixed states without a decomposition. Finding rank-one range
/// vectors is a screening aid only; it is not a separability verdict.
struct RangeReport {
  BipartiteDims dims{1, 1};
  std::vector<Vec> basis;
  std::vector<std::size_t> schmidt_ranks;
  bool elementary_spanning_set_found = false;
};

struct Classification {
  Verdict verdict = Verdict::Undetermined;
  std::variant<ProductCertificate, EntangledCertificate, SeparableCertificate, RangeReport,
               ClassicalSeparableCert>
      certificate;
};

/// Pure bipartite state: product when its Schmidt rank is one, entangled
/// otherwise. Throws InvariantError if t is not normalized.
Classification classify(const BipartiteVector& t, const Tolerance& tol = Tolerance{});

/// Rank-one densities go through the pure-state path via their range vector;
/// other densities are Undetermined with a RangeReport.
Classification classify(const DensityOperator& rho, const BipartiteDims& dims,
                        const Tolerance& tol = Tolerance{});

Classification classify(const SeparableDecomposition& dec, const Tolerance& tol = Tolerance{});

/// Classical composites are always separable; a single support point is a
/// pure (product) state.
Classification classify(const CompositeClassicalState& h);

/// Re-derives the verdict from the certificate alone.
bool certificate_supports_verdict(const Classification& c, const Tolerance& tol = Tolerance{});

}  // namespace entanglekit
