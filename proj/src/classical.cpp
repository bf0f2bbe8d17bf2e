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

#include "entanglekit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "entanglekit/errors.hpp"

namespace entanglekit {

namespace {

void require_probability(double p, const std::string& where) {
  if (!std::isfinite(p) || p < 0.0)
    throw InvariantError("probability at " + where + " must be finite and nonnegative");
}

void require_normalized(double total) {
  if (std::abs(total - 1.0) > kClassicalSumEps)
    throw InvariantError("probabilities sum to " + std::to_string(total) + ", not 1");
}

}  // namespace

PhaseSpace::PhaseSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvariantError("phase space has no labels");
  std::set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second) throw InvariantError("duplicate phase-space label '" + l + "'");
}

bool PhaseSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PhaseSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvariantError("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

ClassicalState::ClassicalState(PhaseSpace space, const std::map<std::string, double>& probs)
    : space_(std::move(space)) {
  double total = 0.0;
  for (const auto& [label, p] : probs) {
    space_.index_of(label);
    require_probability(p, "'" + label + "'");
    total += p;
  }
  require_normalized(total);
  for (const std::string& label : space_.labels()) {
    const auto it = probs.find(label);
    if (it != probs.end() && it->second > 0.0) support_.emplace_back(label, it->second);
  }
}

double ClassicalState::prob(const std::string& label) const {
  for (const auto& [l, p] : support_)
    if (l == label) return p;
  return 0.0;
}

CompositeClassicalState::CompositeClassicalState(PhaseSpace space_x, PhaseSpace space_y,
                                                 std::span<const CompositeEntry> entries)
    : space_x_(std::move(space_x)), space_y_(std::move(space_y)) {
  std::map<std::pair<std::size_t, std::size_t>, const CompositeEntry*> ordered;
  double total = 0.0;
  for (const CompositeEntry& e : entries) {
    const auto key = std::make_pair(space_x_.index_of(e.x), space_y_.index_of(e.y));
    require_probability(e.p, "('" + e.x + "', '" + e.y + "')");
    if (!ordered.emplace(key, &e).second)
      throw InvariantError("duplicate entry ('" + e.x + "', '" + e.y + "')");
    total += e.p;
  }
  require_normalized(total);
  for (const auto& [key, e] : ordered)
    if (e->p > 0.0) support_.push_back(*e);
}

double CompositeClassicalState::prob(const std::string& x, const std::string& y) const {
  for (const CompositeEntry& e : support_)
    if (e.x == x && e.y == y) return e.p;
  return 0.0;
}

Mat CompositeClassicalState::probability_matrix() const {
  const std::size_t nx = space_x_.size(), ny = space_y_.size();
  std::vector<Complex> m(nx * ny);
  for (const CompositeEntry& e : support_)
    m[space_x_.index_of(e.x) * ny + space_y_.index_of(e.y)] = e.p;
  return Mat(nx, ny, std::move(m));
}

ClassicalState classical_pure(const PhaseSpace& space, const std::string& x0) {
  return ClassicalState(space, {{x0, 1.0}});
}

CompositeClassicalState composite_pure(const PhaseSpace& space_x, const PhaseSpace& space_y,
                                       const std::string& x0, const std::string& y0) {
  const CompositeEntry e{x0, y0, 1.0};
  return CompositeClassicalState(space_x, space_y, std::span(&e, 1));
}

std::vector<WeightedClassicalState> decompose_pure(const ClassicalState& f) {
  std::vector<WeightedClassicalState> out;
  out.reserve(f.support().size());
  for (const auto& [label, p] : f.support())
    out.push_back({p, classical_pure(f.space(), label)});
  return out;
}

ClassicalState convex_sum(std::span<const WeightedClassicalState> terms) {
  if (terms.empty()) throw InvariantError("convex_sum: no terms");
  const PhaseSpace& space = terms.front().state.space();
  std::map<std::string, double> acc;
  for (const auto& [w, state] : terms) {
    if (state.space() != space) throw DimensionError("convex_sum: phase spaces differ");
    require_probability(w, "weight");
    for (const auto& [label, p] : state.support()) acc[label] += w * p;
  }
  return ClassicalState(space, acc);
}

CompositeClassicalState classical_tensor(const ClassicalState& f, const ClassicalState& g) {
  std::vector<CompositeEntry> entries;
  entries.reserve(f.support().size() * g.support().size());
  for (const auto& [x, px] : f.support())
    for (const auto& [y, py] : g.support()) entries.push_back({x, y, px * py});
  return CompositeClassicalState(f.space(), g.space(), entries);
}

ClassicalState marginal(const CompositeClassicalState& h, Side keep) {
  std::map<std::string, double> acc;
  for (const CompositeEntry& e : h.support()) acc[keep == Side::First ? e.x : e.y] += e.p;
  return ClassicalState(keep == Side::First ? h.space_x() : h.space_y(), acc);
}

ClassicalSeparableCert classify_classical(const CompositeClassicalState& h) {
  ClassicalSeparableCert cert;
  cert.terms.reserve(h.support().size());
  for (const CompositeEntry& e : h.support())
    cert.terms.push_back(
        {e.p, classical_pure(h.space_x(), e.x), classical_pure(h.space_y(), e.y)});
  return cert;
}

CompositeClassicalState recombine(const ClassicalSeparableCert& cert) {
  if (cert.terms.empty()) throw InvariantError("recombine: empty certificate");
  const PhaseSpace& sx = cert.terms.front().fx.space();
  const PhaseSpace& sy = cert.terms.front().gy.space();
  std::map<std::pair<std::string, std::string>, double> acc;
  for (const auto& t : cert.terms) {
    if (t.fx.space() != sx || t.gy.space() != sy)
      throw DimensionError("recombine: phase spaces differ between terms");
    require_probability(t.weight, "weight");
    for (const auto& [x, px] : t.fx.support())
      for (const auto& [y, py] : t.gy.support()) acc[{x, y}] += t.weight * px * py;
  }
  std::vector<CompositeEntry> entries;
  for (const auto& [key, p] : acc) entries.push_back({key.first, key.second, p});
  return CompositeClassicalState(sx, sy, entries);
}

std::optional<std::pair<ClassicalState, ClassicalState>> is_product_composite(
    const CompositeClassicalState& h, const Tolerance& tol) {
  if (rank(h.probability_matrix(), tol) != 1) return std::nullopt;
  // A rank-one nonnegative joint matrix a b^T with unit mass factors as the
  // product of its marginals.
  ClassicalState f = marginal(h, Side::First);
  ClassicalState g = marginal(h, Side::Second);
  if (max_abs_diff(classical_tensor(f, g), h) > tol.eps()) return std::nullopt;
  return std::make_pair(std::move(f), std::move(g));
}

double max_abs_diff(const CompositeClassicalState& a, const CompositeClassicalState& b) {
  if (a.space_x() != b.space_x() || a.space_y() != b.space_y())
    throw DimensionError("max_abs_diff: composite states live on different spaces");
  double m = 0.0;
  for (const CompositeEntry& e : a.support()) m = std::max(m, std::abs(e.p - b.prob(e.x, e.y)));
  for (const CompositeEntry& e : b.support()) m = std::max(m, std::abs(e.p - a.prob(e.x, e.y)));
  return m;
}

}  // namespace entanglekit
