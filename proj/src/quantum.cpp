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

#include "entanglekit/quantum.hpp"

#include <cmath>
#include <string>

#include "entanglekit/errors.hpp"

namespace entanglekit {

PureState::PureState(Vec v, const Tolerance& tol) : vec_(std::move(v)) {
  if (vec_.dim() == 0) throw DimensionError("pure state has dimension 0");
  const double n = vec_.norm();
  if (n == 0.0) throw ZeroVectorError("pure state is the zero vector");
  if (std::abs(n - 1.0) > tol.eps())
    throw InvariantError("pure state is not normalized (norm " + std::to_string(n) + ")");
}

DensityOperator::DensityOperator(Mat m, const Tolerance& tol) : mat_(std::move(m)) {
  if (!mat_.is_square() || mat_.rows() == 0)
    throw DimensionError("density operator must be a non-empty square matrix");
  if (!is_hermitian(mat_, tol)) throw InvariantError("density operator is not Hermitian");
  const Complex t = trace(mat_);
  if (std::abs(t - Complex(1.0)) > tol.eps())
    throw InvariantError("density operator trace is not 1");
  if (!is_positive(mat_, tol)) throw InvariantError("density operator is not positive");
}

MixedEnsemble::MixedEnsemble(std::vector<EnsembleTerm> terms, const Tolerance& tol)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvariantError("ensemble has no terms");
  double total = 0.0;
  for (const EnsembleTerm& t : terms_) {
    if (!std::isfinite(t.weight) || t.weight < 0.0)
      throw InvariantError("ensemble weight must be finite and nonnegative");
    if (t.state.dim() != terms_.front().state.dim())
      throw DimensionError("ensemble states differ in dimension");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > tol.eps()) throw InvariantError("ensemble weights do not sum to 1");
}

DensityOperator projector(const PureState& x) {
  return DensityOperator(outer(x.vec(), x.vec()));
}

double expectation(const Mat& a, const DensityOperator& rho, const Tolerance& tol) {
  if (!a.is_square() || a.rows() != rho.dim())
    throw DimensionError("expectation: observable and state differ in dimension");
  if (!is_hermitian(a, tol)) throw InvariantError("expectation: observable is not Hermitian");
  const Complex value = trace(a * rho.mat());
  if (std::abs(value.imag()) > tol.scaled(a.max_abs()))
    throw ConsistencyError("expectation: Tr(A rho) has a non-negligible imaginary part");
  return value.real();
}

DensityOperator mix(const MixedEnsemble& ensemble, const Tolerance& tol) {
  Mat acc = Mat::zeros(ensemble.dim(), ensemble.dim());
  for (const EnsembleTerm& t : ensemble.terms())
    acc = acc + Complex(t.weight) * outer(t.state.vec(), t.state.vec());
  return DensityOperator(std::move(acc), tol);
}

bool is_density(const Mat& m, const Tolerance& tol) {
  if (!m.is_square() || m.rows() == 0) return false;
  if (!is_positive(m, tol)) return false;
  return std::abs(trace(m) - Complex(1.0)) <= tol.eps();
}

double purity(const DensityOperator& rho) {
  return trace(rho.mat() * rho.mat()).real();
}

bool is_pure_density(const DensityOperator& rho, const Tolerance& tol) {
  const bool by_rank = rank(rho.mat(), tol) == 1;
  // 1 - Tr(rho^2) ~ 2 * (mass outside the leading eigenvector), hence 2 eps
  // keeps the two tests aligned with the rank threshold.
  const bool by_purity = std::abs(purity(rho) - 1.0) <= 2.0 * tol.eps();
  if (by_rank != by_purity)
    throw ConsistencyError("is_pure_density: rank and purity tests disagree");
  return by_rank;
}

MixtureComparison mixture_vs_superposition(const Mat& a, const PureState& x1,
                                           const PureState& x2, double p1,
                                           SuperpositionNorm norm, const Tolerance& tol) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw InvariantError("mixture weight must lie in [0, 1]");
  if (x1.dim() != x2.dim() || !a.is_square() || a.rows() != x1.dim())
    throw DimensionError("mixture_vs_superposition: dimension mismatch");
  if (!is_hermitian(a, tol)) throw InvariantError("observable is not Hermitian");
  const double p2 = 1.0 - p1;
  MixtureComparison out;
  out.mixture_value = p1 * inner(x1.vec(), a * x1.vec()).real() +
                      p2 * inner(x2.vec(), a * x2.vec()).real();
  const Vec z = Complex(p1) * x1.vec() + Complex(p2) * x2.vec();
  out.naive_value = inner(z, a * z).real();
  if (norm == SuperpositionNorm::Normalized) {
    const double zz = inner(z, z).real();
    if (zz == 0.0) throw ZeroVectorError("superposed vector is zero");
    out.naive_value /= zz;
  }
  return out;
}

Complex ccr_trace_obstruction(const Mat& x, const Mat& p) {
  if (!x.is_square() || !p.is_square() || x.rows() != p.rows())
    throw DimensionError("ccr_trace_obstruction: operators must be square of equal size");
  return trace(x * p - p * x);
}

}  // namespace entanglekit
