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

#include "entanglekit/separability.hpp"

#include <cmath>
#include <string>

#include "entanglekit/errors.hpp"

namespace entanglekit {

namespace {

// Distance of v from span(basis), basis orthonormal.
double projection_residual(const Vec& v, const std::vector<Vec>& basis) {
  Vec r = v;
  for (const Vec& b : basis) r = r - inner(b, r) * b;
  return r.norm();
}

std::vector<Vec> orthonormal_span(const std::vector<Vec>& vectors, const Tolerance& tol) {
  if (vectors.empty()) return {};
  const SingularValueDecomposition d = svd(Mat::from_columns(vectors));
  const double threshold = tol.scaled(d.values.front());
  std::vector<Vec> out;
  for (std::size_t k = 0; k < d.values.size() && d.values[k] > threshold; ++k)
    out.push_back(d.left[k]);
  return out;
}

Classification classify_pure(const PureState& t, const BipartiteDims& dims, const Tolerance& tol) {
  SchmidtDecomposition s = schmidt(BipartiteVector(t.vec(), dims), tol);
  if (s.rank == 1) {
    ProductCertificate cert{PureState(s.left[0], tol), PureState(s.right[0], tol), std::move(s)};
    return {Verdict::QuantumProductPure, std::move(cert)};
  }
  return {Verdict::QuantumEntangledPure, EntangledCertificate{std::move(s)}};
}

}  // namespace

SeparableDecomposition::SeparableDecomposition(BipartiteDims dims, std::vector<ProductTerm> terms,
                                               const Tolerance& tol)
    : dims_(dims), terms_(std::move(terms)) {
  if (terms_.empty()) throw InvariantError("separable decomposition has no terms");
  double total = 0.0;
  for (const ProductTerm& t : terms_) {
    if (!std::isfinite(t.weight) || t.weight < 0.0)
      throw InvariantError("separable weight must be finite and nonnegative");
    if (t.x.dim() != dims_.d1() || t.y.dim() != dims_.d2())
      throw DimensionError("separable term does not match dims");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > tol.eps()) throw InvariantError("separable weights do not sum to 1");
}

DensityOperator product_pure(const PureState& x, const PureState& y, const Tolerance& tol) {
  const Vec xy = kron_vec(x.vec(), y.vec()).vec();
  Mat direct = outer(xy, xy);
  const Mat factored = kron_op(outer(x.vec(), x.vec()), outer(y.vec(), y.vec()));
  if (max_abs_diff(direct, factored) > tol.eps())
    throw ConsistencyError("product_pure: projector of x (x) y differs from P_x (x) P_y");
  return DensityOperator(std::move(direct), tol);
}

DensityOperator separable_density(const SeparableDecomposition& dec, const Tolerance& tol) {
  Mat acc = Mat::zeros(dec.dims().total(), dec.dims().total());
  for (const ProductTerm& t : dec.terms())
    acc = acc + Complex(t.weight) * product_pure(t.x, t.y, tol).mat();
  return DensityOperator(std::move(acc), tol);
}

std::vector<Vec> range_basis(const DensityOperator& rho, const Tolerance& tol) {
  const HermitianEigen e = eig_hermitian(rho.mat(), tol);
  const double threshold = tol.scaled(e.values.front());
  std::vector<Vec> out;
  for (std::size_t k = 0; k < e.values.size() && e.values[k] > threshold; ++k)
    out.push_back(e.vectors[k]);
  return out;
}

RangeCheck range_criterion_report(const SeparableDecomposition& dec, const Tolerance& tol) {
  const std::vector<Vec> range = range_basis(separable_density(dec, tol), tol);
  std::vector<Vec> products;
  for (const ProductTerm& t : dec.terms())
    if (t.weight > tol.eps()) products.push_back(kron_vec(t.x.vec(), t.y.vec()).vec());
  const std::vector<Vec> span = orthonormal_span(products, tol);

  RangeCheck out;
  out.range_rank = range.size();
  out.span_rank = span.size();
  for (const Vec& v : products)
    out.max_term_residual = std::max(out.max_term_residual, projection_residual(v, range));
  for (const Vec& b : range)
    out.max_basis_residual = std::max(out.max_basis_residual, projection_residual(b, span));
  out.holds = out.range_rank == out.span_rank && out.max_term_residual <= tol.eps() &&
              out.max_basis_residual <= tol.eps();
  return out;
}

bool check_range_criterion(const SeparableDecomposition& dec, const Tolerance& tol) {
  return range_criterion_report(dec, tol).holds;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ClassicalPure: return "ClassicalPure";
    case Verdict::ClassicalSeparable: return "ClassicalSeparable";
    case Verdict::QuantumProductPure: return "QuantumProductPure";
    case Verdict::QuantumEntangledPure: return "QuantumEntangledPure";
    case Verdict::QuantumSeparableByConstruction: return "QuantumSeparableByConstruction";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

Classification classify(const BipartiteVector& t, const Tolerance& tol) {
  return classify_pure(PureState(t.vec(), tol), t.dims(), tol);
}

Classification classify(const DensityOperator& rho, const BipartiteDims& dims,
                        const Tolerance& tol) {
  if (rho.dim() != dims.total())
    throw DimensionError("classify: density dimension " + std::to_string(rho.dim()) +
                         " does not factor as " + std::to_string(dims.d1()) + " * " +
                         std::to_string(dims.d2()));
  std::vector<Vec> basis = range_basis(rho, tol);
  if (basis.size() == 1) return classify_pure(PureState(basis.front(), tol), dims, tol);

  RangeReport report{dims, {}, {}, true};
  for (const Vec& b : basis) {
    const std::size_t r = schmidt(BipartiteVector(b, dims), tol).rank;
    report.schmidt_ranks.push_back(r);
    report.elementary_spanning_set_found = report.elementary_spanning_set_found && r == 1;
  }
  report.basis = std::move(basis);
  return {Verdict::Undetermined, std::move(report)};
}

Classification classify(const SeparableDecomposition& dec, const Tolerance& tol) {
  RangeCheck range = range_criterion_report(dec, tol);
  return {Verdict::QuantumSeparableByConstruction, SeparableCertificate{dec, range}};
}

Classification classify(const CompositeClassicalState& h) {
  ClassicalSeparableCert cert = classify_classical(h);
  const Verdict v = cert.terms.size() == 1 ? Verdict::ClassicalPure : Verdict::ClassicalSeparable;
  return {v, std::move(cert)};
}

bool certificate_supports_verdict(const Classification& c, const Tolerance& tol) {
  switch (c.verdict) {
    case Verdict::QuantumProductPure: {
      const auto* cert = std::get_if<ProductCertificate>(&c.certificate);
      if (cert == nullptr || cert->schmidt.rank != 1) return false;
      const Vec t = reconstruct(cert->schmidt).vec();
      const Vec xy = kron_vec(cert->x.vec(), cert->y.vec()).vec();
      return max_abs_diff(t, Complex(cert->schmidt.coeffs[0]) * xy) <= tol.eps();
    }
    case Verdict::QuantumEntangledPure: {
      const auto* cert = std::get_if<EntangledCertificate>(&c.certificate);
      if (cert == nullptr || cert->schmidt.rank < 2) return false;
      return schmidt(reconstruct(cert->schmidt), tol).rank >= 2;
    }
    case Verdict::QuantumSeparableByConstruction: {
      const auto* cert = std::get_if<SeparableCertificate>(&c.certificate);
      return cert != nullptr && cert->range.holds;
    }
    case Verdict::ClassicalPure:
    case Verdict::ClassicalSeparable: {
      const auto* cert = std::get_if<ClassicalSeparableCert>(&c.certificate);
      if (cert == nullptr || cert->terms.empty()) return false;
      for (const auto& t : cert->terms)
        if (!t.fx.is_pure() || !t.gy.is_pure()) return false;
      return (c.verdict == Verdict::ClassicalPure) == (cert->terms.size() == 1);
    }
    case Verdict::Undetermined:
      return std::holds_alternative<RangeReport>(c.certificate);
  }
  return false;
}

}  // namespace entanglekit
