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

#include "entanglekit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "entanglekit/random.hpp"

namespace entanglekit {

namespace {

class Check {
 public:
  Check(std::string name, std::string claim, bool fault)
      : fault_(fault) {
    result_.name = std::move(name);
    result_.claim = std::move(claim);
  }

  void expect(bool ok, const std::function<Json()>& witness) {
    ++result_.checks;
    if (fault_ && result_.checks == 1) ok = false;
    if (ok) return;
    ++result_.failures;
    if (!result_.counterexample) result_.counterexample = witness();
  }

  void fail_with(const std::string& what) {
    ++result_.failures;
    if (!result_.counterexample) result_.counterexample = Json{{"exception", what}};
  }

  SuiteResult finish() {
    result_.passed = result_.failures == 0;
    return std::move(result_);
  }

 private:
  bool fault_;
  SuiteResult result_;
};

using SuiteFn = void (*)(Rng&, std::size_t, Check&);

struct SuiteDef {
  const char* name;
  const char* claim;
  SuiteFn run;
};

PhaseSpace labelled_space(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return PhaseSpace(std::move(labels));
}

ClassicalState random_classical(Rng& rng, const PhaseSpace& space) {
  std::vector<std::size_t> counts(space.size());
  std::size_t total = 0;
  while (total == 0) {
    total = 0;
    for (std::size_t& c : counts) total += (c = rng.index(0, 9));
  }
  std::map<std::string, double> probs;
  for (std::size_t i = 0; i < counts.size(); ++i)
    probs[space.labels()[i]] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return ClassicalState(space, probs);
}

CompositeClassicalState random_composite(Rng& rng, std::size_t nx, std::size_t ny) {
  const PhaseSpace sx = labelled_space("x", nx), sy = labelled_space("y", ny);
  std::vector<CompositeEntry> entries;
  std::size_t total = 0;
  while (total == 0) {
    entries.clear();
    for (const std::string& x : sx.labels())
      for (const std::string& y : sy.labels())
        if (rng.uniform() < 0.5) {
          const std::size_t c = rng.index(1, 9);
          total += c;
          entries.push_back({x, y, static_cast<double>(c)});
        }
  }
  for (CompositeEntry& e : entries) e.p /= static_cast<double>(total);
  return CompositeClassicalState(sx, sy, entries);
}

Vec normalized(const Vec& v) { return Complex(1.0 / v.norm()) * v; }

std::vector<double> nonzero_spectrum(const DensityOperator& rho, const Tolerance& tol) {
  const HermitianEigen e = eig_hermitian(rho.mat(), tol);
  std::vector<double> out;
  for (double v : e.values)
    if (v > tol.scaled(e.values.front())) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

void classical_convex_decomposition(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const ClassicalState f = random_classical(rng, labelled_space("s", rng.index(1, 6)));
    const auto terms = decompose_pure(f);
    bool ok = convex_sum(terms) == f && terms.size() == f.support().size();
    for (std::size_t k = 0; k < terms.size() && ok; ++k)
      ok = terms[k].state.is_pure() && terms[k].weight == f.support()[k].second;
    check.expect(ok, [&] { return Json{{"state", to_json(f)}}; });
  }
}

void classical_product_states(Rng& rng, std::size_t n, Check& check) {
  const PhaseSpace sx = labelled_space("x", 4), sy = labelled_space("y", 4);
  for (const std::string& x : sx.labels())
    for (const std::string& y : sy.labels()) {
      const auto product = classical_tensor(classical_pure(sx, x), classical_pure(sy, y));
      check.expect(product == composite_pure(sx, sy, x, y),
                   [&] { return Json{{"x", x}, {"y", y}, {"product", to_json(product)}}; });
    }
  for (std::size_t i = 0; i < n; ++i) {
    const ClassicalState f = random_classical(rng, labelled_space("x", rng.index(1, 5)));
    const ClassicalState g = random_classical(rng, labelled_space("y", rng.index(1, 5)));
    const CompositeClassicalState h = classical_tensor(f, g);
    const auto factors = is_product_composite(h);
    bool ok = factors.has_value() &&
              max_abs_diff(classical_tensor(factors->first, factors->second), h) <= 1e-9;
    const ClassicalState mf = marginal(h, Side::First), mg = marginal(h, Side::Second);
    for (const auto& [label, p] : f.support()) ok = ok && std::abs(mf.prob(label) - p) <= 1e-9;
    for (const auto& [label, p] : g.support()) ok = ok && std::abs(mg.prob(label) - p) <= 1e-9;
    check.expect(ok, [&] { return Json{{"f", to_json(f)}, {"g", to_json(g)}}; });
  }
}

void classical_separability(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const CompositeClassicalState h = random_composite(rng, rng.index(1, 4), rng.index(1, 4));
    const ClassicalSeparableCert cert = classify_classical(h);
    const bool ok = max_abs_diff(recombine(cert), h) <= 1e-9 &&
                    cert.terms.size() == h.support().size() &&
                    certificate_supports_verdict(classify(h));
    check.expect(ok, [&] { return Json{{"state", to_json(h)}}; });
  }
}

void hermitian_quadratic_form(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(2, 6);
    const Mat m = rng.hermitian(d);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Vec x = rng.unit_vec(d);
      worst = std::max(worst, std::abs(inner(x, m * x).imag()));
    }
    check.expect(is_hermitian(m) && worst <= 1e-9,
                 [&] { return Json{{"hermitian", mat_to_json(m)}, {"max_imag", worst}}; });

    const Mat g = rng.gaussian_mat(d, d);
    bool witness = false;
    for (int k = 0; k < 100 && !witness; ++k) {
      const Vec x = rng.gaussian_vec(d);
      witness = std::abs(inner(x, g * x).imag()) > 1e-9;
    }
    check.expect(!is_hermitian(g) && witness, [&] { return Json{{"non_hermitian", mat_to_json(g)}}; });
  }
  // A real matrix whose quadratic form is real on real vectors but which is
  // not self-adjoint; complex vectors expose it.
  const Mat a{{1.0, 2.0}, {0.0, 1.0}};
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vec x = rng.real_vec(2);
    worst = std::max(worst, std::abs(inner(x, a * x).imag()));
  }
  const Vec w{1.0, Complex(0.0, 1.0)};
  const Complex q = inner(w, a * w);
  check.expect(worst <= 1e-9 && !is_hermitian(a) && std::abs(q - Complex(2.0, 2.0)) <= 1e-12,
               [&] { return Json{{"max_imag_real_vectors", worst}, {"complex_witness", complex_to_json(q)}}; });
}

void positive_factorization(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(1, 8);
    const Mat b = rng.gaussian_mat(d, d);
    const Mat t = adjoint(b) * b;
    bool ok = is_positive(t);
    if (ok) {
      const Mat f = factor_positive(t);
      ok = max_abs_diff(adjoint(f) * f, t) <= 1e-8 * std::max(1.0, t.max_abs());
    }
    check.expect(ok, [&] { return Json{{"T", mat_to_json(t)}}; });

    // Hermitian with a definitely negative eigenvalue.
    const std::vector<Vec> basis = rng.orthonormal_basis(d);
    std::vector<double> lambda(d);
    for (double& l : lambda) l = rng.uniform(0.0, 1.0);
    lambda[rng.index(0, d - 1)] = -rng.uniform(0.05, 1.0);
    Mat h = Mat::zeros(d, d);
    for (std::size_t k = 0; k < d; ++k) h = h + Complex(lambda[k]) * outer(basis[k], basis[k]);
    bool rejected = false;
    try {
      factor_positive(h);
    } catch (const InvariantError&) {
      rejected = true;
    }
    check.expect(!is_positive(h) && rejected, [&] { return Json{{"indefinite", mat_to_json(h)}}; });

    // Equivalence on Hermitian matrices of either sign pattern.
    Mat s = rng.hermitian(d);
    if (rng.uniform() < 0.5) {
      double bound = 0.0;
      for (const Complex& z : s.entries()) bound += std::abs(z);
      s = s + Complex(bound) * Mat::identity(d);
    }
    bool factored = false;
    try {
      const Mat f = factor_positive(s);
      factored = max_abs_diff(adjoint(f) * f, s) <= 1e-8 * std::max(1.0, s.max_abs());
    } catch (const InvariantError&) {
    }
    check.expect(is_positive(s) == factored, [&] { return Json{{"hermitian", mat_to_json(s)}}; });
  }
}

void projector_laws(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = rng.unit_vec(rng.index(1, 6));
    const Mat p = projector(PureState(x)).mat();
    const bool ok = is_hermitian(p) && max_abs_diff(p * p, p) <= 1e-9 && rank(p) == 1 &&
                    std::abs(trace(p) - Complex(1.0)) <= 1e-12 && is_positive(p);
    check.expect(ok, [&] { return Json{{"x", vec_to_json(x)}}; });
  }
}

MixedEnsemble random_ensemble(Rng& rng, std::size_t d) {
  const std::vector<double> w = rng.weights(rng.index(1, 5));
  std::vector<EnsembleTerm> terms;
  for (double p : w) terms.push_back({p, PureState(rng.unit_vec(d))});
  return MixedEnsemble(std::move(terms));
}

Json ensemble_json(const MixedEnsemble& e) {
  Json out = Json::array();
  for (const EnsembleTerm& t : e.terms()) out.push_back({{"p", t.weight}, {"x", vec_to_json(t.state.vec())}});
  return out;
}

void density_convexity(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(1, 6);
    const MixedEnsemble e1 = random_ensemble(rng, d), e2 = random_ensemble(rng, d);
    const DensityOperator rho1 = mix(e1), rho2 = mix(e2);

    const double q = rng.uniform(0.0, 1.0);
    std::vector<EnsembleTerm> flat;
    for (const EnsembleTerm& t : e1.terms()) flat.push_back({q * t.weight, t.state});
    for (const EnsembleTerm& t : e2.terms()) flat.push_back({(1.0 - q) * t.weight, t.state});
    const DensityOperator nested = mix(MixedEnsemble(std::move(flat)));
    const Mat expected = Complex(q) * rho1.mat() + Complex(1.0 - q) * rho2.mat();

    const Mat a = rng.hermitian(d);
    double weighted = 0.0;
    for (const EnsembleTerm& t : e1.terms()) weighted += t.weight * expectation(a, projector(t.state));

    const bool ok = is_density(rho1.mat()) && is_density(nested.mat()) &&
                    max_abs_diff(nested.mat(), expected) <= 1e-9 &&
                    std::abs(expectation(a, rho1) - weighted) <= 1e-9 * std::max(1.0, a.max_abs());
    check.expect(ok, [&] { return Json{{"ensemble", ensemble_json(e1)}, {"q", q}}; });
  }
}

void schmidt_dichotomy(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d1 = rng.index(2, 4), d2 = rng.index(2, 4);
    const Vec u1 = rng.gaussian_vec(d1), u2 = rng.gaussian_vec(d1);
    const Vec v1 = rng.gaussian_vec(d2), v2 = rng.gaussian_vec(d2);
    const Vec sum = kron_vec(u1, v1).vec() + kron_vec(u2, v2).vec();
    const BipartiteVector tau(normalized(sum), BipartiteDims(d1, d2));
    const SchmidtDecomposition s = schmidt(tau);
    double c2 = 0.0;
    for (double c : s.coeffs) c2 += c * c;
    const bool ok = s.rank >= 2 && max_abs_diff(reconstruct(s).vec(), tau.vec()) <= 1e-9 &&
                    std::abs(c2 - std::pow(tau.vec().norm(), 2)) <= 1e-9;
    check.expect(ok, [&] { return Json{{"independent_pair", to_json(tau)}}; });

    const Vec x1 = rng.gaussian_vec(d1);
    const Vec x2 = rng.complex_gaussian() * x1;
    const Vec dep = kron_vec(x1, rng.gaussian_vec(d2)).vec() + kron_vec(x2, rng.gaussian_vec(d2)).vec();
    const BipartiteVector reducible(normalized(dep), BipartiteDims(d1, d2));
    const SchmidtDecomposition r = schmidt(reducible);
    check.expect(r.rank == 1 && max_abs_diff(reconstruct(r).vec(), reducible.vec()) <= 1e-9,
                 [&] { return Json{{"dependent_pair", to_json(reducible)}}; });
  }
}

void product_projector(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = rng.unit_vec(rng.index(1, 4)), y = rng.unit_vec(rng.index(1, 4));
    const Vec xy = kron_vec(x, y).vec();
    const double err = max_abs_diff(outer(xy, xy), kron_op(outer(x, x), outer(y, y)));
    check.expect(err <= 1e-10, [&] { return Json{{"x", vec_to_json(x)}, {"y", vec_to_json(y)}, {"error", err}}; });
  }
}

void product_pure_classification(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d1 = rng.index(1, 4), d2 = rng.index(1, 4);
    const BipartiteVector t = kron_vec(rng.unit_vec(d1), rng.unit_vec(d2));
    const Classification c = classify(t);
    const DensityOperator rho = projector(PureState(t.vec()));
    const bool ok = c.verdict == Verdict::QuantumProductPure && certificate_supports_verdict(c) &&
                    classify(rho, t.dims()).verdict == Verdict::QuantumProductPure &&
                    is_pure_density(partial_trace(rho, t.dims(), Side::First)) &&
                    is_pure_density(partial_trace(rho, t.dims(), Side::Second));
    check.expect(ok, [&] { return Json{{"state", to_json(t)}}; });
  }
}

void range_criterion(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const BipartiteDims dims(rng.index(2, 3), rng.index(2, 3));
    std::vector<ProductTerm> terms;
    std::size_t expected_rank = 0;
    if (i % 4 == 0) {
      // Two product vectors that are scalar multiples of each other.
      const Vec x = rng.unit_vec(dims.d1()), y = rng.unit_vec(dims.d2());
      const Complex a = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
      const Complex b = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
      const std::vector<double> w = rng.weights(2);
      terms.push_back({w[0], PureState(x), PureState(y)});
      terms.push_back({w[1], PureState(a * x), PureState(b * y)});
      expected_rank = 1;
    } else if (i % 4 == 1) {
      const std::vector<double> w = rng.weights(2);
      for (double p : w) terms.push_back({p, PureState(rng.unit_vec(dims.d1())), PureState(rng.unit_vec(dims.d2()))});
      expected_rank = 2;
    } else {
      const std::vector<double> w = rng.weights(rng.index(1, 4));
      for (double p : w) terms.push_back({p, PureState(rng.unit_vec(dims.d1())), PureState(rng.unit_vec(dims.d2()))});
    }
    const SeparableDecomposition dec(dims, std::move(terms));
    const RangeCheck r = range_criterion_report(dec);
    const bool ok = r.holds && (expected_rank == 0 || r.range_rank == expected_rank);
    check.expect(ok, [&] {
      return Json{{"decomposition", to_json(dec)}, {"range_rank", r.range_rank}, {"span_rank", r.span_rank},
                  {"max_term_residual", r.max_term_residual}, {"max_basis_residual", r.max_basis_residual}};
    });
  }
}

void entangled_pure_classification(Rng& rng, std::size_t n, Check& check) {
  const Tolerance tol;
  {
    const double h = 1.0 / std::sqrt(2.0);
    const BipartiteVector bell(Vec{h, 0.0, 0.0, h}, BipartiteDims(2, 2));
    const Classification c = classify(bell);
    const DensityOperator rho = projector(PureState(bell.vec()));
    const Mat half = Complex(0.5) * Mat::identity(2);
    const DensityOperator r1 = partial_trace(rho, bell.dims(), Side::First);
    const DensityOperator r2 = partial_trace(rho, bell.dims(), Side::Second);
    const bool ok = c.verdict == Verdict::QuantumEntangledPure &&
                    max_abs_diff(r1.mat(), half) <= 1e-10 && max_abs_diff(r2.mat(), half) <= 1e-10 &&
                    rank(r1.mat()) == 2 && rank(r2.mat()) == 2;
    check.expect(ok, [&] { return Json{{"bell", to_json(bell)}}; });
  }
  for (std::size_t i = 0; i < n; ++i) {
    const BipartiteDims dims(rng.index(2, 4), rng.index(2, 4));
    const BipartiteVector t(rng.unit_vec(dims.total()), dims);
    const Classification c = classify(t);
    bool ok = c.verdict == Verdict::QuantumEntangledPure && certificate_supports_verdict(c);
    if (ok) {
      const auto& s = std::get<EntangledCertificate>(c.certificate).schmidt;
      const DensityOperator rho = projector(PureState(t.vec()));
      // The range of P_t is one-dimensional and spanned by a non-elementary vector.
      const std::vector<Vec> range = range_basis(rho);
      ok = range.size() == 1 && schmidt(BipartiteVector(range[0], dims)).rank >= 2;
      const DensityOperator r1 = partial_trace(rho, dims, Side::First);
      const DensityOperator r2 = partial_trace(rho, dims, Side::Second);
      ok = ok && !is_pure_density(r1) && !is_pure_density(r2);
      const std::vector<double> sp1 = nonzero_spectrum(r1, tol), sp2 = nonzero_spectrum(r2, tol);
      ok = ok && sp1.size() == s.rank && sp2.size() == s.rank;
      for (std::size_t k = 0; ok && k < s.rank; ++k)
        ok = std::abs(sp1[k] - sp2[k]) <= 1e-9 && std::abs(sp1[k] - s.coeffs[k] * s.coeffs[k]) <= 1e-9;
    }
    check.expect(ok, [&] { return Json{{"state", to_json(t)}}; });
  }
}

void ccr_trace(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(2, 6);
    const Mat x = rng.gaussian_mat(d, d), p = rng.gaussian_mat(d, d);
    const Complex t = ccr_trace_obstruction(x, p);
    // Tr(i I) = i d is never zero, so XP - PX = i hbar I cannot hold.
    const bool ok = std::abs(t) <= 1e-9 &&
                    std::abs(trace(Complex(0.0, 1.0) * Mat::identity(d))) == static_cast<double>(d);
    check.expect(ok, [&] { return Json{{"X", mat_to_json(x)}, {"P", mat_to_json(p)}, {"trace", complex_to_json(t)}}; });
  }
}

void trace_basis_independence(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(1, 6);
    const Mat m = rng.gaussian_mat(d, d);
    Complex sum{};
    for (const Vec& u : rng.orthonormal_basis(d)) sum += inner(u, m * u);
    const double err = std::abs(sum - trace(m));
    check.expect(err <= 1e-9, [&] { return Json{{"M", mat_to_json(m)}, {"error", err}}; });
  }
}

void expectation_trace_identity(Rng& rng, std::size_t n, Check& check) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rng.index(1, 6);
    const Mat a = rng.hermitian(d);
    const Vec x = rng.unit_vec(d);
    const double err = std::abs(expectation(a, projector(PureState(x))) - inner(x, a * x).real());
    check.expect(err <= 1e-9, [&] { return Json{{"A", mat_to_json(a)}, {"x", vec_to_json(x)}, {"error", err}}; });
  }
}

void mixture_not_superposition(Rng& rng, std::size_t n, Check& check) {
  {
    const PureState x1(Vec{1.0, 0.0}), x2(Vec{0.0, 1.0});
    const Mat a = projector(x1).mat();
    const MixtureComparison raw = mixture_vs_superposition(a, x1, x2, 0.5, SuperpositionNorm::Unnormalized);
    const MixtureComparison scaled = mixture_vs_superposition(a, x1, x2, 0.5, SuperpositionNorm::Normalized);
    const bool ok = std::abs(raw.mixture_value - 0.5) <= 1e-12 && std::abs(raw.naive_value - 0.25) <= 1e-12 &&
                    std::abs(scaled.naive_value - 0.5) <= 1e-12;
    check.expect(ok, [&] { return Json{{"mixture", raw.mixture_value}, {"superposition", raw.naive_value}}; });
  }
  const std::size_t batches = std::max<std::size_t>(1, n / 20);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t d = rng.index(2, 6);
    const std::vector<Vec> basis = rng.orthonormal_basis(d);
    const PureState x1(basis[0]), x2(basis[1]);
    const double p1 = rng.uniform(0.05, 0.95);
    double widest = 0.0;
    for (int k = 0; k < 20; ++k) {
      const MixtureComparison c = mixture_vs_superposition(rng.hermitian(d), x1, x2, p1);
      widest = std::max(widest, std::abs(c.mixture_value - c.naive_value));
    }
    check.expect(widest > 1e-9, [&] { return Json{{"p1", p1}, {"x1", vec_to_json(basis[0])}, {"x2", vec_to_json(basis[1])}}; });
  }
}

constexpr SuiteDef kSuites[] = {
    {"classical-convex-decomposition", "every classical state is a convex combination of pure states", classical_convex_decomposition},
    {"classical-product-states", "pure composite states are products; products factor through their marginals", classical_product_states},
    {"classical-separability", "every classical composite state is separable", classical_separability},
    {"hermitian-quadratic-form", "on a complex space, T is self-adjoint iff <x, Tx> is real for all x", hermitian_quadratic_form},
    {"positive-factorization", "<x, Tx> >= 0 for all x iff T = B*B", positive_factorization},
    {"projector-laws", "pure states are self-adjoint rank-one projectors of unit trace", projector_laws},
    {"density-convexity", "convex combinations of pure states are positive with unit trace", density_convexity},
    {"schmidt-elementary-dichotomy", "u1(x)v1 + u2(x)v2 with independent pairs is never elementary", schmidt_dichotomy},
    {"product-projector", "P_{x(x)y} = P_x (x) P_y", product_projector},
    {"product-pure-classification", "pure states of elementary tensors are separable", product_pure_classification},
    {"range-criterion", "the range of a separable state is spanned by elementary tensors", range_criterion},
    {"entangled-pure-classification", "pure states of non-elementary tensors are entangled", entangled_pure_classification},
    {"ccr-trace-obstruction", "Tr(XP - PX) = 0 in finite dimension", ccr_trace},
    {"trace-basis-independence", "the trace is the same in every orthonormal basis", trace_basis_independence},
    {"expectation-trace-identity", "Tr(A P_x) = <x, Ax>", expectation_trace_identity},
    {"mixture-not-superposition", "a mixed state is not a superposition of its pure states", mixture_not_superposition},
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteDef& s : kSuites) out.emplace_back(s.name);
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  constexpr long kCount = static_cast<long>(std::size(kSuites));
  VerifyReport report;
  report.seed = options.seed;
  report.instances = options.instances;
  report.suites.resize(kCount);

#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (long i = 0; i < kCount; ++i) {
    const SuiteDef& def = kSuites[i];
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(i)));
    Check check(def.name, def.claim, options.inject_fault == def.name);
    try {
      def.run(rng, options.instances, check);
    } catch (const std::exception& e) {
      check.fail_with(e.what());
    }
    report.suites[static_cast<std::size_t>(i)] = check.finish();
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json suites = Json::array();
  for (const SuiteResult& s : report.suites) {
    Json j = {{"name", s.name}, {"claim", s.claim}, {"passed", s.passed},
              {"checks", s.checks}, {"failures", s.failures}};
    if (s.counterexample) j["counterexample"] = *s.counterexample;
    suites.push_back(std::move(j));
  }
  return {{"seed", report.seed}, {"instances", report.instances},
          {"all_passed", report.all_passed()}, {"suites", suites}};
}

}  // namespace entanglekit
