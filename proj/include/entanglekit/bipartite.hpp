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

// Two-factor tensor products on coordinate spaces. Index convention: the
// first factor is the slow index, so basis vector e_i (x) f_j sits at
// position i * d2 + j. Reshaping, partial traces and Kronecker products all
// use this one convention.

#include <cstddef>
#include <vector>

#include "entanglekit/linalg.hpp"
#include "entanglekit/quantum.hpp"
#include "entanglekit/side.hpp"

namespace entanglekit {

class BipartiteDims {
 public:
  BipartiteDims(std::size_t d1, std::size_t d2);

  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t total() const { return d1_ * d2_; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;

 private:
  std::size_t d1_;
  std::size_t d2_;
};

/// Vector of C^{d1} (x) C^{d2}, stored flat. Not necessarily normalized.
class BipartiteVector {
 public:
  BipartiteVector(Vec v, BipartiteDims dims);

  const Vec& vec() const { return vec_; }
  const BipartiteDims& dims() const { return dims_; }

 private:
  Vec vec_;
  BipartiteDims dims_;
};

/// t = sum_k coeffs[k] * left[k] (x) right[k], truncated to the terms whose
/// coefficient clears the rank threshold.
struct SchmidtDecomposition {
  BipartiteDims dims{1, 1};
  std::vector<double> coeffs;
  std::vector<Vec> left;
  std::vector<Vec> right;
  std::size_t rank = 0;
};

BipartiteVector kron_vec(const Vec& x, const Vec& y);

/// Kronecker product; (A (x) B)(x (x) y) = (Ax) (x) (By).
Mat kron_op(const Mat& a, const Mat& b);

/// Tensor-space inner product; on elementary tensors it factors as
/// <u1, v1> <u2, v2>.
Complex inner_bipartite(const BipartiteVector& s, const BipartiteVector& t);

/// d1 x d2 matrix M with M(i, j) = t[i * d2 + j].
Mat coefficient_matrix(const BipartiteVector& t);

/// Inverse of coefficient_matrix.
BipartiteVector from_coefficient_matrix(const Mat& m);

/// Schmidt decomposition via SVD of the coefficient matrix. Rank one exactly
/// when t is an elementary tensor. Phase convention: the first non-negligible
/// entry of every left vector is real and nonnegative.
SchmidtDecomposition schmidt(const BipartiteVector& t, const Tolerance& tol = Tolerance{});

/// sum_k coeffs[k] * left[k] (x) right[k]
BipartiteVector reconstruct(const SchmidtDecomposition& s);

/// True when t = x (x) y for some x, y.
bool is_elementary(const BipartiteVector& t, const Tolerance& tol = Tolerance{});

/// Contract rho over the factor that is not kept.
DensityOperator partial_trace(const DensityOperator& rho, const BipartiteDims& dims, Side keep,
                              const Tolerance& tol = Tolerance{});

}  // namespace entanglekit
