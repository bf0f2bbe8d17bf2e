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

#include "entanglekit/random.hpp"

#include <cmath>
#include <numbers>

#include "entanglekit/errors.hpp"

namespace entanglekit {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

double Rng::gaussian() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  return {re, gaussian()};
}

Vec Rng::gaussian_vec(std::size_t dim) {
  std::vector<Complex> e(dim);
  for (Complex& z : e) z = complex_gaussian();
  return Vec(std::move(e));
}

Vec Rng::unit_vec(std::size_t dim) {
  for (;;) {
    const Vec v = gaussian_vec(dim);
    const double n = v.norm();
    if (n > 1e-3) return Complex(1.0 / n) * v;
  }
}

Vec Rng::real_vec(std::size_t dim) {
  std::vector<Complex> e(dim);
  for (Complex& z : e) z = gaussian();
  return Vec(std::move(e));
}

Mat Rng::gaussian_mat(std::size_t rows, std::size_t cols) {
  std::vector<Complex> e(rows * cols);
  for (Complex& z : e) z = complex_gaussian();
  return Mat(rows, cols, std::move(e));
}

Mat Rng::hermitian(std::size_t dim) {
  const Mat g = gaussian_mat(dim, dim);
  return Complex(0.5) * (g + adjoint(g));
}

std::vector<Vec> Rng::orthonormal_basis(std::size_t dim) {
  std::vector<Vec> basis;
  while (basis.size() < dim) {
    Vec v = gaussian_vec(dim);
    for (const Vec& b : basis) v = v - inner(b, v) * b;
    const double n = v.norm();
    if (n < 1e-6) continue;
    v = Complex(1.0 / n) * v;
    // Second pass restores orthogonality lost to rounding.
    for (const Vec& b : basis) v = v - inner(b, v) * b;
    basis.push_back(Complex(1.0 / v.norm()) * v);
  }
  return basis;
}

std::vector<double> Rng::weights(std::size_t count, double floor) {
  if (count == 0) throw DimensionError("weights: empty");
  std::vector<double> w(count);
  double total = 0.0;
  for (double& x : w) {
    x = uniform(floor, 1.0);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace entanglekit
