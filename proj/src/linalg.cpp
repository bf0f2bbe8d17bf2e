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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entanglekit/errors.hpp"
#include "entanglekit/kernels.hpp"

namespace entanglekit {

namespace {

constexpr int kMaxSweeps = 100;
// Off-diagonal mass below which a Jacobi sweep is considered converged,
// relative to the Frobenius norm of the input.
constexpr double kJacobiRelative = 1e-15;

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvariantError("non-finite complex entry");
  }
}

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch");
}

void require_square(const Mat& m, const char* what) {
  if (!m.is_square())
    throw DimensionError(std::string(what) + ": matrix is not square");
}

// Rotate the phase of v so its first non-negligible component is real and
// nonnegative.
std::vector<Complex> canonical_phase(std::vector<Complex> v) {
  double scale = 0.0;
  for (const Complex& z : v) scale = std::max(scale, std::abs(z));
  for (Complex& z : v) {
    if (std::abs(z) > 1e-12 * scale) {
      const double mag = std::abs(z);
      const Complex phase = std::conj(z) / mag;
      for (Complex& w : v) w *= phase;
      z = mag;
      break;
    }
  }
  return v;
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  return order;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tolerance

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw InvariantError("tolerance must be a positive finite number");
}

double Tolerance::scaled(double magnitude) const {
  return eps_ * std::max(1.0, magnitude);
}

// ---------------------------------------------------------------------------
// Vec

Vec::Vec(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_finite(entries_);
}

Vec::Vec(std::initializer_list<Complex> entries) : Vec(std::vector<Complex>(entries)) {}

Vec Vec::zeros(std::size_t dim) { return Vec(std::vector<Complex>(dim)); }

Vec Vec::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> e(dim);
  e[k] = 1.0;
  return Vec(std::move(e));
}

double Vec::norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double Vec::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "vector sum");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Vec(std::move(out));
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "vector difference");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Vec(std::move(out));
}

Vec operator*(Complex s, const Vec& v) {
  std::vector<Complex> out(v.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * v[i];
  return Vec(std::move(out));
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ * cols_ != entries_.size())
    throw DimensionError("matrix entry count does not match rows * cols");
  require_finite(entries_);
}

Mat::Mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_);
}

Mat Mat::zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, cols, std::vector<Complex>(rows * cols));
}

Mat Mat::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return Mat(n, n, std::move(e));
}

Mat Mat::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
  return Mat(n, n, std::move(e));
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  if (columns.empty()) throw DimensionError("from_columns: no columns");
  const std::size_t rows = columns.front().dim();
  const std::size_t cols = columns.size();
  std::vector<Complex> e(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (columns[c].dim() != rows)
      throw DimensionError("from_columns: columns differ in length");
    for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
  }
  return Mat(rows, cols, std::move(e));
}

Vec Mat::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return Vec(std::move(out));
}

Vec Mat::row(std::size_t r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return Vec(std::vector<Complex>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "matrix sum");
  std::vector<Complex> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] + b.entries()[i];
  return Mat(a.rows(), a.cols(), std::move(out));
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "matrix difference");
  std::vector<Complex> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] - b.entries()[i];
  return Mat(a.rows(), a.cols(), std::move(out));
}

Mat operator*(Complex s, const Mat& m) {
  std::vector<Complex> out(m.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * m.entries()[i];
  return Mat(m.rows(), m.cols(), std::move(out));
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  std::vector<Complex> out(a.rows() * b.cols());
  kernels::parallel::gemm(a.entries(), b.entries(), out, a.rows(), a.cols(), b.cols());
  return Mat(a.rows(), b.cols(), std::move(out));
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.dim()) throw DimensionError("matrix-vector product: dimension mismatch");
  std::vector<Complex> out(m.rows());
  kernels::parallel::gemm(m.entries(), v.entries(), out, m.rows(), m.cols(), 1);
  return Vec(std::move(out));
}

// ---------------------------------------------------------------------------
// Free functions

Complex inner(const Vec& u, const Vec& v) {
  require_same_dim(u, v, "inner");
  Complex acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

Mat outer(const Vec& u, const Vec& v) {
  std::vector<Complex> e(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) e[i * v.dim() + j] = u[i] * std::conj(v[j]);
  return Mat(u.dim(), v.dim(), std::move(e));
}

Mat adjoint(const Mat& m) {
  std::vector<Complex> e(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e[c * m.rows() + r] = std::conj(m(r, c));
  return Mat(m.cols(), m.rows(), std::move(e));
}

Complex trace(const Mat& m) {
  require_square(m, "trace");
  Complex acc{};
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double max_abs_diff(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SingularValueDecomposition svd(const Mat& m) {
  if (m.rows() < m.cols()) {
    // m = (m^H)^H, so the factors swap roles.
    SingularValueDecomposition t = svd(adjoint(m));
    std::swap(t.left, t.right);
    return t;
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Complex>> w(cols, std::vector<Complex>(rows));
  std::vector<std::vector<Complex>> v(cols, std::vector<Complex>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) w[c][r] = m(r, c);
    v[c][c] = 1.0;
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < rows; ++r) {
          alpha += std::norm(w[p][r]);
          beta += std::norm(w[q][r]);
          gamma += std::conj(w[p][r]) * w[q][r];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kJacobiRelative * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / g;  // e^{-i arg gamma}
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        auto rotate = [&](std::vector<Complex>& xp, std::vector<Complex>& xq) {
          for (std::size_t r = 0; r < xp.size(); ++r) {
            const Complex a = xp[r];
            const Complex b = phase * xq[r];
            xp[r] = c * a - s * b;
            xq[r] = s * a + c * b;
          }
        };
        rotate(w[p], w[q]);
        rotate(v[p], v[q]);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double s = 0.0;
    for (const Complex& z : w[c]) s += std::norm(z);
    sigma[c] = std::sqrt(s);
  }
  SingularValueDecomposition out;
  for (std::size_t k : descending_order(sigma)) {
    out.values.push_back(sigma[k]);
    std::vector<Complex> u(rows);
    if (sigma[k] > 0.0)
      for (std::size_t r = 0; r < rows; ++r) u[r] = w[k][r] / sigma[k];
    out.left.emplace_back(std::move(u));
    out.right.emplace_back(std::move(v[k]));
  }
  return out;
}

std::size_t rank(const Mat& m, const Tolerance& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::vector<double> values = svd(m).values;
  const double threshold = tol.scaled(values.front());
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double s) { return s > threshold; }));
}

bool is_hermitian(const Mat& m, const Tolerance& tol) {
  require_square(m, "is_hermitian");
  const double threshold = tol.scaled(m.max_abs());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > threshold) return false;
  return true;
}

HermitianEigen eig_hermitian(const Mat& m, const Tolerance& tol) {
  require_square(m, "eig_hermitian");
  if (!is_hermitian(m, tol)) throw InvariantError("eig_hermitian: matrix is not Hermitian");
  const std::size_t n = m.rows();

  std::vector<Complex> a(n * n);
  std::vector<Complex> v(n * n);
  double frob2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
      frob2 += std::norm(a[i * n + j]);
    }
  }
  const double stop = kJacobiRelative * kJacobiRelative * frob2;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off2 += std::norm(a[i * n + j]);
    if (off2 <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = std::conj(apq) / g;  // e^{-i arg a_pq}
        const double tau = (a[q * n + q].real() - a[p * n + p].real()) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // U acts on (p, q): [[c, s], [-s * phase, c * phase]].
        const Complex upp = c, upq = s, uqp = -s * phase, uqq = c * phase;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex x = a[r * n + p], y = a[r * n + q];
          a[r * n + p] = x * upp + y * uqp;
          a[r * n + q] = x * upq + y * uqq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const Complex x = a[p * n + col], y = a[q * n + col];
          a[p * n + col] = std::conj(upp) * x + std::conj(uqp) * y;
          a[q * n + col] = std::conj(upq) * x + std::conj(uqq) * y;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
        for (std::size_t r = 0; r < n; ++r) {
          const Complex x = v[r * n + p], y = v[r * n + q];
          v[r * n + p] = x * upp + y * uqp;
          v[r * n + q] = x * upq + y * uqq;
        }
      }
    }
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i].real();
  HermitianEigen out;
  for (std::size_t k : descending_order(diag)) {
    out.values.push_back(diag[k]);
    std::vector<Complex> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + k];
    out.vectors.emplace_back(canonical_phase(std::move(col)));
  }
  return out;
}

bool is_positive(const Mat& m, const Tolerance& tol) {
  if (!m.is_square() || m.rows() == 0) return false;
  if (!is_hermitian(m, tol)) return false;
  const HermitianEigen e = eig_hermitian(m, tol);
  return e.values.back() >= -tol.scaled(e.values.front());
}

Mat factor_positive(const Mat& t, const Tolerance& tol) {
  require_square(t, "factor_positive");
  if (!is_hermitian(t, tol)) throw InvariantError("factor_positive: operator is not Hermitian");
  const HermitianEigen e = eig_hermitian(t, tol);
  const double floor = -tol.scaled(e.values.front());
  const std::size_t n = t.rows();
  std::vector<Complex> b(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = e.values[k];
    if (lambda < floor)
      throw InvariantError("factor_positive: operator has a negative eigenvalue " +
                           std::to_string(lambda));
    const double root = std::sqrt(std::max(lambda, 0.0));
    // Row k of diag(sqrt(lambda)) * V^H.
    for (std::size_t c = 0; c < n; ++c) b[k * n + c] = root * std::conj(e.vectors[k][c]);
  }
  return Mat(n, n, std::move(b));
}

}  // namespace entanglekit
