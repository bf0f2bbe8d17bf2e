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

#include "entanglekit/bipartite.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "entanglekit/errors.hpp"
#include "entanglekit/random.hpp"
#include "oracles.hpp"

namespace entanglekit {
namespace {

using testing::contraction_oracle;
using testing::direct_inner;
using testing::exact_rank;
using testing::IntMatrix;
using testing::max_diff;
using testing::orthonormality_defect;

const double kS = 1.0 / std::sqrt(2.0);

BipartiteVector bell() {
  return BipartiteVector(Vec{kS, 0.0, 0.0, kS}, BipartiteDims(2, 2));
}

BipartiteVector add(const BipartiteVector& a, const BipartiteVector& b) {
  return BipartiteVector(a.vec() + b.vec(), a.dims());
}

std::vector<std::int64_t> int_vec(Rng& rng, std::size_t n) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = static_cast<std::int64_t>(rng.index(0, 8)) - 4;
  return v;
}

Vec as_vec(const std::vector<std::int64_t>& v) {
  std::vector<Complex> e;
  for (std::int64_t x : v) e.emplace_back(static_cast<double>(x), 0.0);
  return Vec(e);
}

TEST(BipartiteDims, Validation) {
  EXPECT_THROW(BipartiteDims(0, 2), DimensionError);
  EXPECT_THROW(BipartiteVector(Vec::zeros(5), BipartiteDims(2, 2)), DimensionError);
}

TEST(KronVec, Examples) {
  const BipartiteVector t = kron_vec(Vec::basis(2, 0), Vec::basis(2, 1));
  EXPECT_EQ(t.vec(), Vec::basis(4, 1));
  EXPECT_EQ(t.dims(), BipartiteDims(2, 2));
  const Vec x{1.0, 2.0, 3.0}, y{Complex(0.0, 1.0), 5.0};
  const BipartiteVector u = kron_vec(x, y);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(u.vec()[i * 2 + j], x[i] * y[j]);
}

TEST(KronVec, BilinearityIdentities) {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d1 = rng.index(1, 4), d2 = rng.index(1, 4);
    const Vec x1 = rng.gaussian_vec(d1), x2 = rng.gaussian_vec(d1);
    const Vec y1 = rng.gaussian_vec(d2), y2 = rng.gaussian_vec(d2);
    const Complex a = rng.complex_gaussian();
    EXPECT_LE(max_abs_diff(kron_vec(x1 + x2, y1).vec(), add(kron_vec(x1, y1), kron_vec(x2, y1)).vec()), 1e-12);
    EXPECT_LE(max_abs_diff(kron_vec(x1, y1 + y2).vec(), add(kron_vec(x1, y1), kron_vec(x1, y2)).vec()), 1e-12);
    EXPECT_LE(max_abs_diff(kron_vec(a * x1, y1).vec(), a * kron_vec(x1, y1).vec()), 1e-12);
    EXPECT_LE(max_abs_diff(kron_vec(x1, a * y1).vec(), a * kron_vec(x1, y1).vec()), 1e-12);
    EXPECT_EQ(kron_vec(Vec::zeros(d1), y1).vec().max_abs(), 0.0);
    EXPECT_EQ(kron_vec(x1, Vec::zeros(d2)).vec().max_abs(), 0.0);
  }
}

TEST(KronOp, Examples) {
  EXPECT_EQ(kron_op(Mat::identity(2), Mat::identity(3)), Mat::identity(6));
  EXPECT_THROW(kron_op(Mat(2, 3, std::vector<Complex>(6)), Mat::identity(2)), DimensionError);
}

TEST(KronOp, ActsFactorwise) {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d1 = rng.index(1, 4), d2 = rng.index(1, 4);
    const Mat a = rng.gaussian_mat(d1, d1), b = rng.gaussian_mat(d2, d2);
    const Vec x = rng.gaussian_vec(d1), y = rng.gaussian_vec(d2);
    const Mat ab = kron_op(a, b);
    EXPECT_LE(max_abs_diff(ab * kron_vec(x, y).vec(), kron_vec(a * x, b * y).vec()), 1e-10);
    EXPECT_LE(std::abs(trace(ab) - trace(a) * trace(b)), 1e-10);

    const Vec ux = rng.unit_vec(d1), uy = rng.unit_vec(d2);
    const Mat px = projector(PureState(ux)).mat(), py = projector(PureState(uy)).mat();
    EXPECT_LE(max_abs_diff(kron_op(px, py) * kron_vec(x, y).vec(), kron_vec(px * x, py * y).vec()), 1e-10);
  }
}

TEST(InnerBipartite, Examples) {
  const BipartiteVector e11 = kron_vec(Vec::basis(2, 0), Vec::basis(2, 0));
  const BipartiteVector e21 = kron_vec(Vec::basis(2, 1), Vec::basis(2, 0));
  EXPECT_EQ(inner_bipartite(e11, e11), Complex(1.0));
  EXPECT_EQ(inner_bipartite(e11, e21), Complex(0.0));
  EXPECT_THROW(inner_bipartite(e11, kron_vec(Vec::basis(4, 0), Vec::basis(1, 0))), DimensionError);
}

TEST(InnerBipartite, FactorsOnElementaryTensors) {
  Rng rng(63);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d1 = rng.index(1, 4), d2 = rng.index(1, 4);
    const Vec u1 = rng.gaussian_vec(d1), v1 = rng.gaussian_vec(d1);
    const Vec u2 = rng.gaussian_vec(d2), v2 = rng.gaussian_vec(d2);
    const Complex lhs = inner_bipartite(kron_vec(u1, u2), kron_vec(v1, v2));
    EXPECT_LE(std::abs(lhs - direct_inner(u1, v1) * direct_inner(u2, v2)), 1e-10);
  }
}

TEST(CoefficientMatrix, Examples) {
  const Mat m = coefficient_matrix(bell());
  EXPECT_EQ(m, kS * Mat::identity(2));
  EXPECT_EQ(coefficient_matrix(BipartiteVector(Vec::zeros(6), BipartiteDims(2, 3))), Mat::zeros(2, 3));

  Rng rng(64);
  const Vec x = rng.gaussian_vec(3), y = rng.gaussian_vec(2);
  const Mat c = coefficient_matrix(kron_vec(x, y));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(c(i, j), x[i] * y[j]);
  const BipartiteVector t(rng.gaussian_vec(6), BipartiteDims(3, 2));
  EXPECT_EQ(from_coefficient_matrix(coefficient_matrix(t)).vec(), t.vec());
}

TEST(Schmidt, Examples) {
  const SchmidtDecomposition b = schmidt(bell());
  ASSERT_EQ(b.rank, 2u);
  EXPECT_NEAR(b.coeffs[0], kS, 1e-15);
  EXPECT_NEAR(b.coeffs[1], kS, 1e-15);
  EXPECT_LE(max_abs_diff(reconstruct(b).vec(), bell().vec()), 1e-15);

  const SchmidtDecomposition p = schmidt(kron_vec(Vec{0.6, 0.8}, Vec{0.8, Complex(0.0, 0.6)}));
  ASSERT_EQ(p.rank, 1u);
  EXPECT_NEAR(p.coeffs[0], 1.0, 1e-15);
  EXPECT_THROW(schmidt(BipartiteVector(Vec::zeros(4), BipartiteDims(2, 2))), ZeroVectorError);
}

TEST(Schmidt, ReconstructionAndNormOnRandomTensors) {
  Rng rng(65);
  for (int i = 0; i < 200; ++i) {
    const BipartiteDims dims(rng.index(1, 5), rng.index(1, 5));
    const BipartiteVector t(rng.gaussian_vec(dims.total()), dims);
    const SchmidtDecomposition s = schmidt(t);
    double sum = 0.0;
    for (std::size_t k = 0; k < s.rank; ++k) sum += s.coeffs[k] * s.coeffs[k];
    const double n = t.vec().norm();
    EXPECT_NEAR(sum, n * n, 1e-9 * std::max(1.0, n * n));
    EXPECT_LE(max_abs_diff(reconstruct(s).vec(), t.vec()), 1e-9 * std::max(1.0, n));
    EXPECT_LE(orthonormality_defect(s.left), 1e-10);
    EXPECT_LE(orthonormality_defect(s.right), 1e-10);
    for (std::size_t k = 1; k < s.rank; ++k) EXPECT_GE(s.coeffs[k - 1], s.coeffs[k]);
    // Phase convention: the first non-negligible entry of each left vector.
    for (const Vec& l : s.left) {
      std::size_t j = 0;
      while (std::abs(l[j]) <= 1e-12) ++j;
      EXPECT_EQ(l[j].imag(), 0.0);
      EXPECT_GT(l[j].real(), 0.0);
    }
  }
}

TEST(Schmidt, IndependentPairsHaveRankTwo) {
  Rng rng(66);
  int checked = 0;
  while (checked < 200) {
    const std::size_t d1 = rng.index(2, 4), d2 = rng.index(2, 4);
    const auto u1 = int_vec(rng, d1), u2 = int_vec(rng, d1);
    const auto v1 = int_vec(rng, d2), v2 = int_vec(rng, d2);
    if (exact_rank({u1, u2}) != 2 || exact_rank({v1, v2}) != 2) continue;
    IntMatrix coeffs(d1, std::vector<std::int64_t>(d2));
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) coeffs[i][j] = u1[i] * v1[j] + u2[i] * v2[j];
    const BipartiteVector t = add(kron_vec(as_vec(u1), as_vec(v1)), kron_vec(as_vec(u2), as_vec(v2)));
    const std::size_t r = schmidt(t).rank;
    EXPECT_EQ(r, exact_rank(coeffs));
    EXPECT_GE(r, 2u);
    EXPECT_FALSE(is_elementary(t));
    ++checked;
  }
}

TEST(Schmidt, DependentPairsReduceToElementary) {
  Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d1 = rng.index(2, 4), d2 = rng.index(2, 4);
    const Vec x = rng.gaussian_vec(d1);
    const Complex a = rng.complex_gaussian(), b = rng.complex_gaussian();
    const Vec y1 = rng.gaussian_vec(d2), y2 = rng.gaussian_vec(d2);
    const BipartiteVector t = add(kron_vec(a * x, y1), kron_vec(b * x, y2));
    EXPECT_EQ(schmidt(t).rank, 1u);
    EXPECT_TRUE(is_elementary(t));
    // The reduction x (x) (a y1 + b y2).
    EXPECT_LE(max_abs_diff(t.vec(), kron_vec(x, a * y1 + b * y2).vec()), 1e-10);
  }
}

TEST(IsElementary, Examples) {
  EXPECT_FALSE(is_elementary(bell()));
  Rng rng(68);
  for (int i = 0; i < 50; ++i)
    EXPECT_TRUE(is_elementary(kron_vec(rng.gaussian_vec(rng.index(1, 5)), rng.gaussian_vec(rng.index(1, 5)))));
  EXPECT_THROW(is_elementary(BipartiteVector(Vec::zeros(4), BipartiteDims(2, 2))), ZeroVectorError);
}

TEST(PartialTrace, Examples) {
  const DensityOperator pb = projector(PureState(bell().vec()));
  const BipartiteDims d22(2, 2);
  for (Side s : {Side::First, Side::Second}) {
    const DensityOperator r = partial_trace(pb, d22, s);
    EXPECT_LE(max_abs_diff(r.mat(), 0.5 * Mat::identity(2)), 1e-15);
    EXPECT_EQ(rank(r.mat()), 2u);
  }
  const DensityOperator mm(0.25 * Mat::identity(4));
  EXPECT_EQ(partial_trace(mm, d22, Side::Second).mat(), 0.5 * Mat::identity(2));
  EXPECT_THROW(partial_trace(mm, BipartiteDims(2, 3), Side::First), DimensionError);
}

TEST(PartialTrace, ProductOfProjectors) {
  Rng rng(69);
  for (int i = 0; i < 100; ++i) {
    const BipartiteDims dims(rng.index(1, 4), rng.index(1, 4));
    const DensityOperator px = projector(PureState(rng.unit_vec(dims.d1())));
    const DensityOperator py = projector(PureState(rng.unit_vec(dims.d2())));
    const DensityOperator rho(kron_op(px.mat(), py.mat()));
    EXPECT_LE(max_abs_diff(partial_trace(rho, dims, Side::First).mat(), px.mat()), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(rho, dims, Side::Second).mat(), py.mat()), 1e-12);
  }
}

TEST(PartialTrace, MatchesContractionOracleAndPreservesTrace) {
  Rng rng(70);
  for (int i = 0; i < 100; ++i) {
    const BipartiteDims dims(rng.index(1, 4), rng.index(1, 4));
    const std::size_t k = rng.index(1, 4);
    const std::vector<double> w = rng.weights(k);
    std::vector<EnsembleTerm> terms;
    for (std::size_t t = 0; t < k; ++t) terms.push_back({w[t], PureState(rng.unit_vec(dims.total()))});
    const DensityOperator rho = mix(MixedEnsemble(terms));
    for (Side s : {Side::First, Side::Second}) {
      const DensityOperator r = partial_trace(rho, dims, s);
      EXPECT_LE(max_diff(r.mat().entries(), contraction_oracle(rho.mat(), dims.d1(), dims.d2(), s == Side::First)),
                1e-12);
      EXPECT_LE(std::abs(trace(r.mat()) - Complex(1.0)), 1e-9);
    }
  }
}

TEST(PartialTrace, PurityFollowsSchmidtRank) {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const BipartiteDims dims(rng.index(2, 4), rng.index(2, 4));
    const bool elementary = i % 2 == 0;
    Vec v = elementary ? kron_vec(rng.unit_vec(dims.d1()), rng.unit_vec(dims.d2())).vec()
                       : rng.unit_vec(dims.total());
    const std::size_t r = schmidt(BipartiteVector(v, dims)).rank;
    const DensityOperator p = projector(PureState(v));
    for (Side s : {Side::First, Side::Second}) {
      const DensityOperator red = partial_trace(p, dims, s);
      EXPECT_EQ(rank(red.mat()), r);
      EXPECT_EQ(is_pure_density(red), r == 1);
    }
    if (elementary) EXPECT_EQ(r, 1u);
  }
}

}  // namespace
}  // namespace entanglekit
