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

#include "entanglekit/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "entanglekit/errors.hpp"
#include "entanglekit/random.hpp"
#include "oracles.hpp"

namespace entanglekit {
namespace {

using testing::direct_inner;
using testing::orthonormality_defect;

const Complex kI{0.0, 1.0};

TEST(Inner, OrthogonalBasisVectors) {
  EXPECT_EQ(inner(Vec{1.0, 0.0}, Vec{0.0, 1.0}), Complex(0.0));
}

TEST(Inner, ConjugateLinearInFirstArgument) {
  const Vec e1{1.0, 0.0};
  EXPECT_EQ(inner(kI * e1, e1), Complex(0.0, -1.0));
  EXPECT_EQ(inner(e1, kI * e1), Complex(0.0, 1.0));
}

TEST(Inner, MatchesDirectSumAndIsConjugateSymmetric) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = rng.index(1, 8);
    const Vec u = rng.gaussian_vec(d), v = rng.gaussian_vec(d);
    EXPECT_LE(std::abs(inner(u, v) - direct_inner(u, v)), 1e-12);
    EXPECT_LE(std::abs(inner(u, v) - std::conj(inner(v, u))), 1e-12);
    const Complex uu = inner(u, u);
    EXPECT_EQ(uu.imag(), 0.0);
    EXPECT_GE(uu.real(), 0.0);
  }
}

TEST(Inner, DimensionMismatchThrows) {
  EXPECT_THROW(inner(Vec{1.0}, Vec{1.0, 0.0}), DimensionError);
}

TEST(Values, NonFiniteEntriesRejected) {
  EXPECT_THROW(Vec({Complex(std::nan(""), 0.0)}), InvariantError);
  EXPECT_THROW(Mat(1, 1, {Complex(0.0, INFINITY)}), InvariantError);
  EXPECT_THROW(Mat(2, 2, {1.0, 2.0, 3.0}), DimensionError);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(Mat::identity(3)), Mat::identity(3));
  EXPECT_EQ(adjoint(Mat{{0.0, 1.0}, {0.0, 0.0}}), (Mat{{0.0, 0.0}, {1.0, 0.0}}));
  EXPECT_EQ(adjoint(Mat{{Complex(2.0, 3.0)}}), (Mat{{Complex(2.0, -3.0)}}));
}

TEST(Adjoint, InvolutionIsExact) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const Mat m = rng.gaussian_mat(rng.index(1, 5), rng.index(1, 5));
    EXPECT_EQ(adjoint(adjoint(m)), m);
    const Mat a = adjoint(m);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_EQ(a(c, r), std::conj(m(r, c)));
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(Mat::identity(2)), Complex(2.0));
  EXPECT_THROW(trace(Mat::zeros(2, 3)), DimensionError);
}

TEST(Trace, LinearAndBasisIndependent) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = rng.index(1, 6);
    const Mat a = rng.gaussian_mat(d, d), b = rng.gaussian_mat(d, d);
    const Complex alpha = rng.complex_gaussian();
    EXPECT_LE(std::abs(trace(a + b) - (trace(a) + trace(b))), 1e-12);
    EXPECT_LE(std::abs(trace(alpha * a) - alpha * trace(a)), 1e-12);
    EXPECT_LE(std::abs(testing::basis_trace(a, rng.orthonormal_basis(d)) - trace(a)), 1e-9);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Mat::zeros(3, 3)), 0u);
  EXPECT_EQ(rank(Mat{{1.0, 1.0}, {1.0, 1.0}}), 1u);
  EXPECT_EQ(rank(Mat::identity(4)), 4u);
  const Vec x{0.6, Complex(0.0, 0.8)};
  EXPECT_EQ(rank(outer(x, x)), 1u);
}

TEST(Rank, AgreesWithExactIntegerElimination) {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = rng.index(1, 6), cols = rng.index(1, 6);
    const auto m = testing::random_low_rank_int(rng, rows, cols, rng.index(1, 6));
    EXPECT_EQ(rank(testing::to_mat(m)), testing::exact_rank(m));
  }
}

TEST(Hermitian, IdentityIsHermitian) { EXPECT_TRUE(is_hermitian(Mat::identity(3))); }

TEST(Hermitian, RealQuadraticFormDoesNotImplySelfAdjoint) {
  const Mat a{{1.0, 2.0}, {0.0, 1.0}};
  EXPECT_FALSE(is_hermitian(a));
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const Vec x = rng.real_vec(2);
    EXPECT_EQ(inner(x, a * x).imag(), 0.0);
  }
  // Witness x = (1, i): <x, Ax> = 2 + 2i.
  const Vec w{1.0, kI};
  EXPECT_LE(std::abs(inner(w, a * w) - Complex(2.0, 2.0)), 1e-15);
}

TEST(Hermitian, QuadraticFormCharacterizesSelfAdjointness) {
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = rng.index(2, 6);
    const Mat h = rng.hermitian(d);
    for (int k = 0; k < 20; ++k) {
      const Vec x = rng.gaussian_vec(d);
      EXPECT_LE(std::abs(inner(x, h * x).imag()), 1e-9);
    }
    const Mat g = rng.gaussian_mat(d, d);
    ASSERT_FALSE(is_hermitian(g));
    bool found = false;
    for (int k = 0; k < 100 && !found; ++k) {
      const Vec x = rng.gaussian_vec(d);
      found = std::abs(inner(x, g * x).imag()) > 1e-9;
    }
    EXPECT_TRUE(found);
  }
}

TEST(Hermitian, NonSquareThrows) {
  EXPECT_THROW(is_hermitian(Mat::zeros(2, 3)), DimensionError);
}

TEST(Hermitian, ToleranceIsRelativeToMagnitude) {
  const Mat big{{1e6, 1e6 + 1e-4}, {1e6, 1e6}};
  EXPECT_TRUE(is_hermitian(big));
  EXPECT_FALSE(is_hermitian(Mat{{1.0, 1e-4}, {0.0, 1.0}}));
}

TEST(Eigen, DiagonalKeepsBasis) {
  const std::vector<double> d{3.0, 1.0};
  const HermitianEigen e = eig_hermitian(Mat::diagonal(d));
  EXPECT_EQ(e.values, (std::vector<double>{3.0, 1.0}));
  EXPECT_EQ(e.vectors[0], Vec::basis(2, 0));
  EXPECT_EQ(e.vectors[1], Vec::basis(2, 1));
}

TEST(Eigen, TiesKeepInputOrder) {
  const HermitianEigen e = eig_hermitian(Mat::identity(3));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(e.vectors[k], Vec::basis(3, k));
}

TEST(Eigen, ProjectorSpectrum) {
  Rng rng(17);
  const Vec x = rng.unit_vec(4);
  const HermitianEigen e = eig_hermitian(outer(x, x));
  EXPECT_NEAR(e.values[0], 1.0, 1e-12);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(e.values[k], 0.0, 1e-12);
}

TEST(Eigen, ReconstructsRandomHermitian) {
  Rng rng(18);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = rng.index(1, 10);
    const Mat m = rng.hermitian(d);
    const HermitianEigen e = eig_hermitian(m);
    const double scale = std::max(1.0, m.max_abs());
    EXPECT_LE(orthonormality_defect(e.vectors), 1e-9);
    Mat sum = Mat::zeros(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      sum = sum + Complex(e.values[k]) * outer(e.vectors[k], e.vectors[k]);
      EXPECT_LE(max_abs_diff(m * e.vectors[k], Complex(e.values[k]) * e.vectors[k]), 1e-9 * scale);
      if (k > 0) EXPECT_GE(e.values[k - 1], e.values[k]);
    }
    EXPECT_LE(max_abs_diff(sum, m), 1e-9 * scale);
  }
}

TEST(Eigen, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(Mat{{1.0, 2.0}, {0.0, 1.0}}), InvariantError);
}

TEST(Svd, ReconstructsRectangularMatrices) {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = rng.index(1, 6), cols = rng.index(1, 6);
    const Mat m = rng.gaussian_mat(rows, cols);
    const SingularValueDecomposition d = svd(m);
    ASSERT_EQ(d.values.size(), std::min(rows, cols));
    Mat sum = Mat::zeros(rows, cols);
    for (std::size_t k = 0; k < d.values.size(); ++k) {
      sum = sum + Complex(d.values[k]) * outer(d.left[k], d.right[k]);
      if (k > 0) EXPECT_GE(d.values[k - 1], d.values[k]);
    }
    EXPECT_LE(max_abs_diff(sum, m), 1e-12 * std::max(1.0, m.max_abs()));
    EXPECT_LE(orthonormality_defect(d.left), 1e-12);
    EXPECT_LE(orthonormality_defect(d.right), 1e-12);
  }
}

TEST(Positive, Examples) {
  Rng rng(20);
  const Vec x = rng.unit_vec(3);
  EXPECT_TRUE(is_positive(outer(x, x)));
  EXPECT_FALSE(is_positive(Complex(-1.0) * Mat::identity(2)));
  const Mat b = rng.gaussian_mat(4, 4);
  EXPECT_TRUE(is_positive(adjoint(b) * b));
  EXPECT_FALSE(is_positive(Mat::zeros(2, 3)));
  EXPECT_FALSE(is_positive(Mat{{1.0, 2.0}, {0.0, 1.0}}));
}

TEST(FactorPositive, Examples) {
  const std::vector<double> d{4.0, 1.0};
  const Mat b = factor_positive(Mat::diagonal(d));
  EXPECT_LE(max_abs_diff(adjoint(b) * b, Mat::diagonal(d)), 1e-15);
  const std::vector<double> root{2.0, 1.0};
  EXPECT_LE(max_abs_diff(b, Mat::diagonal(root)), 1e-15);
  const Mat i = factor_positive(Mat::identity(3));
  EXPECT_LE(max_abs_diff(adjoint(i) * i, Mat::identity(3)), 1e-15);
}

TEST(FactorPositive, ClampsOnlyWithinTolerance) {
  const std::vector<double> tiny{1.0, -1e-12};
  EXPECT_NO_THROW(factor_positive(Mat::diagonal(tiny)));
  const std::vector<double> negative{1.0, -1e-3};
  EXPECT_THROW(factor_positive(Mat::diagonal(negative)), InvariantError);
}

TEST(FactorPositive, EquivalentToPositivity) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = rng.index(1, 8);
    Mat h = rng.hermitian(d);
    if (i % 2 == 0) h = adjoint(h) * h;
    bool factored = false;
    try {
      const Mat b = factor_positive(h);
      factored = max_abs_diff(adjoint(b) * b, h) <= 1e-8 * std::max(1.0, h.max_abs());
    } catch (const InvariantError&) {
    }
    EXPECT_EQ(is_positive(h), factored);
  }
}

TEST(Tolerance, RejectsNonPositiveEps) {
  EXPECT_THROW(Tolerance(0.0), InvariantError);
  EXPECT_THROW(Tolerance(-1.0), InvariantError);
  EXPECT_DOUBLE_EQ(Tolerance(1e-6).scaled(10.0), 1e-5);
  EXPECT_DOUBLE_EQ(Tolerance(1e-6).scaled(0.1), 1e-6);
}

}  // namespace
}  // namespace entanglekit
