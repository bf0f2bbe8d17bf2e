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

// Classical states on finite phase spaces: probability densities, their
// decomposition into pure states, composite (cartesian product) states,
// marginals and the product/separable structure of composites.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entanglekit/linalg.hpp"
#include "entanglekit/side.hpp"

namespace entanglekit {

/// Absolute tolerance on the total probability of a classical state.
inline constexpr double kClassicalSumEps = 1e-9;

/// Ordered set of distinct, non-empty list of configuration labels.
class PhaseSpace {
 public:
  explicit PhaseSpace(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(const std::string& label) const;
  /// Throws InvariantError for unknown labels.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const PhaseSpace&, const PhaseSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Probability density with finite support. Zero entries are dropped, so the
/// stored support is exactly the set of labels with positive probability.
class ClassicalState {
 public:
  ClassicalState(PhaseSpace space, const std::map<std::string, double>& probs);

  const PhaseSpace& space() const { return space_; }
  /// (label, probability) pairs in phase-space order.
  const std::vector<std::pair<std::string, double>>& support() const { return support_; }
  double prob(const std::string& label) const;
  bool is_pure() const { return support_.size() == 1; }

  friend bool operator==(const ClassicalState&, const ClassicalState&) = default;

 private:
  PhaseSpace space_;
  std::vector<std::pair<std::string, double>> support_;
};

struct CompositeEntry {
  std::string x;
  std::string y;
  double p = 0.0;

  friend bool operator==(const CompositeEntry&, const CompositeEntry&) = default;
};

/// Density on X x Y.
class CompositeClassicalState {
 public:
  CompositeClassicalState(PhaseSpace space_x, PhaseSpace space_y,
                          std::span<const CompositeEntry> entries);

  const PhaseSpace& space_x() const { return space_x_; }
  const PhaseSpace& space_y() const { return space_y_; }
  /// Positive entries, ordered by (x index, y index).
  const std::vector<CompositeEntry>& support() const { return support_; }
  double prob(const std::string& x, const std::string& y) const;
  /// Joint probabilities as a |X| x |Y| matrix.
  Mat probability_matrix() const;

  friend bool operator==(const CompositeClassicalState&, const CompositeClassicalState&) = default;

 private:
  PhaseSpace space_x_;
  PhaseSpace space_y_;
  std::vector<CompositeEntry> support_;
};

struct WeightedClassicalState {
  double weight = 0.0;
  ClassicalState state;
};

struct ClassicalSeparableCert {
  struct Term {
    double weight = 0.0;
    ClassicalState fx;
    ClassicalState gy;
  };
  std::vector<Term> terms;
};

ClassicalState classical_pure(const PhaseSpace& space, const std::string& x0);

CompositeClassicalState composite_pure(const PhaseSpace& space_x, const PhaseSpace& space_y,
                                       const std::string& x0, const std::string& y0);

/// One pure term per support point, weighted by its probability.
std::vector<WeightedClassicalState> decompose_pure(const ClassicalState& f);

/// sum_k w_k f_k over states sharing one phase space.
ClassicalState convex_sum(std::span<const WeightedClassicalState> terms);

/// (f (x) g)(x, y) = f(x) g(y).
CompositeClassicalState classical_tensor(const ClassicalState& f, const ClassicalState& g);

/// Sum out the coordinate that is not kept.
ClassicalState marginal(const CompositeClassicalState& h, Side keep);

/// Every composite density splits into composite pure states, and each of
/// those is the product of two subsystem pure states. Never fails.
ClassicalSeparableCert classify_classical(const CompositeClassicalState& h);

/// sum_k w_k (fx_k (x) gy_k).
CompositeClassicalState recombine(const ClassicalSeparableCert& cert);

/// (f, g) with f (x) g == h when the joint probability matrix has rank one.
std::optional<std::pair<ClassicalState, ClassicalState>> is_product_composite(
    const CompositeClassicalState& h, const Tolerance& tol = Tolerance{});

/// Largest pointwise difference over the union of both supports.
double max_abs_diff(const CompositeClassicalState& a, const CompositeClassicalState& b);

}  // namespace entanglekit
