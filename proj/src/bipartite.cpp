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

#include <cmath>
#include <string>

#include "entanglekit/errors.hpp"
#include "entanglekit/kernels.hpp"

namespace entanglekit {

BipartiteDims::BipartiteDims(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2) {
  if (d1_ == 0 || d2_ == 0) throw DimensionError("bipartite factor dimensions must be >= 1");
}

BipartiteVector::BipartiteVector(Vec v, BipartiteDims dims) : vec_(std::move(v)), dims_(dims) {
  if (vec_.dim() != dims_.total())
    throw DimensionError("bipartite vector has length " + std::to_string(vec_.dim()) +
                         ", expected " + std::to_string(dims_.d1()) + " * " +
                         std::to_string(dims_.d2()));
}

BipartiteVector kron_vec(const Vec& x, const Vec& y) {
  std::vector<Complex> e(x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) e[i * y.dim() + j] = x[i] * y[j];
  return BipartiteVector(Vec(std::move(e)), BipartiteDims(x.dim(), y.dim()));
}

Mat kron_op(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("kron_op: operators must be square");
  std::vector<Complex> out(a.rows() * b.rows() * a.cols() * b.cols());
  kernels::parallel::kron(a.entries(), a.rows(), a.cols(), b.entries(), b.rows(), b.cols(), out);
  return Mat(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

Complex inner_bipartite(const BipartiteVector& s, const BipartiteVector& t) {
  if (!(s.dims() == t.dims())) throw DimensionError("inner_bipartite: factor dimensions differ");
  return inner(s.vec(), t.vec());
}

Mat coefficient_matrix(const BipartiteVector& t) {
  const auto e = t.vec().entries();
  return Mat(t.dims().d1(), t.dims().d2(), std::vector<Complex>(e.begin(), e.end()));
}

BipartiteVector from_coefficient_matrix(const Mat& m) {
  const auto e = m.entries();
  return BipartiteVector(Vec(std::vector<Complex>(e.begin(), e.end())),
                         BipartiteDims(m.rows(), m.cols()));
}

SchmidtDecomposition schmidt(const BipartiteVector& t, const Tolerance& tol) {
  if (t.vec().max_abs() == 0.0) throw ZeroVectorError("schmidt: zero vector");
  const SingularValueDecomposition d = svd(coefficient_matrix(t));
  const double threshold = tol.scaled(d.values.front());

  SchmidtDecomposition out{t.dims(), {}, {}, {}, 0};
  for (std::size_t k = 0; k < d.values.size() && d.values[k] > threshold; ++k) {
    // M = sum s u v^H, so t = sum s u (x) conj(v).
    std::vector<Complex> left(d.left[k].entries().begin(), d.left[k].entries().end());
    std::vector<Complex> right(d.right[k].dim());
    for (std::size_t j = 0; j < right.size(); ++j) right[j] = std::conj(d.right[k][j]);
    double scale = 0.0;
    for (const Complex& z : left) scale = std::max(scale, std::abs(z));
    for (Complex& z : left) {
      if (std::abs(z) > 1e-12 * scale) {
        const double mag = std::abs(z);
        const Complex phase = std::conj(z) / mag;
        for (Complex& w : left) w *= phase;
        for (Complex& w : right) w /= phase;
        z = mag;
        break;
      }
    }
    out.coeffs.push_back(d.values[k]);
    out.left.emplace_back(std::move(left));
    out.right.emplace_back(std::move(right));
  }
  out.rank = out.coeffs.size();
  return out;
}

BipartiteVector reconstruct(const SchmidtDecomposition& s) {
  std::vector<Complex> acc(s.dims.total());
  for (std::size_t k = 0; k < s.rank; ++k)
    for (std::size_t i = 0; i < s.dims.d1(); ++i)
      for (std::size_t j = 0; j < s.dims.d2(); ++j)
        acc[i * s.dims.d2() + j] += s.coeffs[k] * s.left[k][i] * s.right[k][j];
  return BipartiteVector(Vec(std::move(acc)), s.dims);
}

bool is_elementary(const BipartiteVector& t, const Tolerance& tol) {
  return schmidt(t, tol).rank == 1;
}

DensityOperator partial_trace(const DensityOperator& rho, const BipartiteDims& dims, Side keep,
                              const Tolerance& tol) {
  if (rho.dim() != dims.total())
    throw DimensionError("partial_trace: operator dimension " + std::to_string(rho.dim()) +
                         " does not factor as " + std::to_string(dims.d1()) + " * " +
                         std::to_string(dims.d2()));
  const std::size_t kept = keep == Side::First ? dims.d1() : dims.d2();
  std::vector<Complex> out(kept * kept);
  kernels::parallel::partial_trace(rho.mat().entries(), dims.d1(), dims.d2(),
                                   keep == Side::First, out);
  return DensityOperator(Mat(kept, kept, std::move(out)), tol);
}

}  // namespace entanglekit
