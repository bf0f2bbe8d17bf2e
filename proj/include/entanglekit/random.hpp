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

#include <cstdint>
#include <random>
#include <vector>

#include "entanglekit/linalg.hpp"

namespace entanglekit {

/// Seeded generator for randomized verification. Built on std::mt19937_64,
/// whose output sequence is fixed by the standard; the real-valued draws are
/// derived here rather than through std::*_distribution so a seed yields
/// the same instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);
  double gaussian();
  Complex complex_gaussian();

  Vec gaussian_vec(std::size_t dim);
  Vec unit_vec(std::size_t dim);
  Vec real_vec(std::size_t dim);
  Mat gaussian_mat(std::size_t rows, std::size_t cols);
  Mat hermitian(std::size_t dim);
  /// Orthonormal basis of C^dim (Gram-Schmidt on Gaussian vectors).
  std::vector<Vec> orthonormal_basis(std::size_t dim);
  /// Probability vector with entries bounded away from zero by `floor`
  /// before normalization.
  std::vector<double> weights(std::size_t count, double floor = 0.05);

 private:
  std::mt19937_64 engine_;
};

/// Child seed for stream `stream` of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace entanglekit
