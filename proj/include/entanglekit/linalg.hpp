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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entanglekit {

using Complex = std::complex<double>;

/// Relative tolerance. Thresholds scale as eps * max(1, magnitude).
class Tolerance {
 public:
  static constexpr double kDefaultEps = 1e-9;

  explicit Tolerance(double eps = kDefaultEps);

  double eps() const { return eps_; }
  /// eps * max(1, magnitude)
  double scaled(double magnitude) const;

 private:
  double eps_;
};

/// Immutable dense complex vector.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Complex> entries);
  Vec(std::initializer_list<Complex> entries);

  static Vec zeros(std::size_t dim);
  /// k-th standard basis vector.
  static Vec basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  double norm() const;
  double max_abs() const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(Complex s, const Vec& v);
  friend bool operator==(const Vec& a, const Vec& b) = default;

 private:
  std::vector<Complex> entries_;
};

/// Immutable dense complex matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Mat(std::initializer_list<std::initializer_list<Complex>> rows);

  static Mat zeros(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat diagonal(std::span<const double> values);
  /// Matrix whose k-th column is columns[k].
  static Mat from_columns(std::span<const Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Complex> entries() const { return entries_; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  double max_abs() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(Complex s, const Mat& m);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& m, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// <u, v>, conjugate-linear in the first argument.
Complex inner(const Vec& u, const Vec& v);

/// |u><v| as a matrix: u * adjoint(v).
Mat outer(const Vec& u, const Vec& v);

Mat adjoint(const Mat& m);
Complex trace(const Mat& m);

/// max |a - b| entrywise; shapes must agree.
double max_abs_diff(const Mat& a, const Mat& b);
double max_abs_diff(const Vec& a, const Vec& b);

struct SingularValueDecomposition {
  /// Descending, length min(rows, cols).
  std::vector<double> values;
  /// left[k] is the k-th left singular vector (zero when values[k] == 0).
  std::vector<Vec> left;
  /// right[k] is the k-th right singular vector: m = sum_k values[k] |left_k><right_k|.
  std::vector<Vec> right;
};

/// One-sided (Hestenes) Jacobi SVD.
SingularValueDecomposition svd(const Mat& m);

/// Number of singular values above tol.scaled(sigma_max).
std::size_t rank(const Mat& m, const Tolerance& tol = Tolerance{});

bool is_hermitian(const Mat& m, const Tolerance& tol = Tolerance{});

struct HermitianEigen {
  /// Descending; ties keep input order.
  std::vector<double> values;
  /// Orthonormal eigenvectors, vectors[k] pairs with values[k].
  std::vector<Vec> vectors;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
HermitianEigen eig_hermitian(const Mat& m, const Tolerance& tol = Tolerance{});

/// Hermitian with smallest eigenvalue >= -tol.scaled(largest eigenvalue).
/// Non-square input is not positive.
bool is_positive(const Mat& m, const Tolerance& tol = Tolerance{});

/// Returns B with adjoint(B) * B == t: B = diag(sqrt(lambda)) * adjoint(V)
/// in the eigenbasis V of t. Eigenvalues within tolerance below zero are
/// clamped; anything more negative is an InvariantError.
Mat factor_positive(const Mat& t, const Tolerance& tol = Tolerance{});

}  // namespace entanglekit
