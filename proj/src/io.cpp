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

#include "entanglekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace entanglekit {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

// Runs f, prefixing any domain error with the location it came from.
template <typename F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  const std::string where = path.empty() ? "/" : path;
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const ZeroVectorError& e) {
    throw ZeroVectorError(where + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(where + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(where + ": " + e.what());
  }
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

double parse_number(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

std::size_t parse_positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(path, "expected a positive integer");
  return j.get<std::size_t>();
}

Complex parse_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected a complex number [re, im]");
  return {parse_number(j[0], path + "/0"), parse_number(j[1], path + "/1")};
}

Vec parse_vec(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of [re, im]");
  std::vector<Complex> e;
  e.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(parse_complex(j[i], path + "/" + std::to_string(i)));
  return at(path, [&] { return Vec(std::move(e)); });
}

Mat parse_mat(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> e;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    const Json& row = j[r];
    if (!row.is_array() || row.empty()) schema_error(rp, "expected a non-empty row");
    if (r == 0) cols = row.size();
    if (row.size() != cols) schema_error(rp, "row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c) e.push_back(parse_complex(row[c], rp + "/" + std::to_string(c)));
  }
  return at(path, [&] { return Mat(rows, cols, std::move(e)); });
}

PhaseSpace parse_space(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_error(path + "/" + std::to_string(i), "expected a string label");
    labels.push_back(j[i].get<std::string>());
  }
  return at(path, [&] { return PhaseSpace(std::move(labels)); });
}

BipartiteDims parse_dims(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected [d1, d2]");
  return BipartiteDims(parse_positive_int(j[0], path + "/0"), parse_positive_int(j[1], path + "/1"));
}

PureState parse_unit(const Json& j, const std::string& path, const Tolerance& tol) {
  Vec v = parse_vec(j, path);
  return at(path, [&] { return PureState(std::move(v), tol); });
}

StateFile parse_classical(const Json& doc) {
  PhaseSpace space = parse_space(field(doc, "space", ""), "/space");
  const Json& probs = field(doc, "probs", "");
  if (!probs.is_object()) schema_error("/probs", "expected an object label -> probability");
  std::map<std::string, double> p;
  for (const auto& [label, value] : probs.items()) p[label] = parse_number(value, "/probs/" + label);
  return at("/probs", [&] { return ClassicalState(std::move(space), p); });
}

StateFile parse_classical2(const Json& doc) {
  PhaseSpace sx = parse_space(field(doc, "spaceX", ""), "/spaceX");
  PhaseSpace sy = parse_space(field(doc, "spaceY", ""), "/spaceY");
  const Json& probs = field(doc, "probs", "");
  if (!probs.is_array()) schema_error("/probs", "expected an array of [x, y, p]");
  std::vector<CompositeEntry> entries;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::string path = "/probs/" + std::to_string(i);
    const Json& e = probs[i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      schema_error(path, "expected [x, y, p]");
    entries.push_back({e[0].get<std::string>(), e[1].get<std::string>(), parse_number(e[2], path + "/2")});
  }
  return at("/probs", [&] { return CompositeClassicalState(std::move(sx), std::move(sy), entries); });
}

StateFile parse_density(const Json& doc, const Tolerance& tol) {
  const std::size_t dim = parse_positive_int(field(doc, "dim", ""), "/dim");
  Mat m = parse_mat(field(doc, "mat", ""), "/mat");
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionError("/mat: expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
  std::optional<BipartiteDims> dims;
  if (doc.contains("dims")) {
    dims = at("/dims", [&] { return parse_dims(doc["dims"], "/dims"); });
    if (dims->total() != dim) throw DimensionError("/dims: d1 * d2 does not equal dim");
  }
  DensityOperator rho = at("/mat", [&] { return DensityOperator(std::move(m), tol); });
  return DensityFile{std::move(rho), dims};
}

StateFile parse_bipartite(const Json& doc, const Tolerance& tol) {
  const BipartiteDims dims = at("/dims", [&] { return parse_dims(field(doc, "dims", ""), "/dims"); });
  Vec v = parse_vec(field(doc, "vec", ""), "/vec");
  BipartiteVector t = at("/vec", [&] { return BipartiteVector(v, dims); });
  // Validates the norm: zero vectors and non-unit vectors are rejected.
  at("/vec", [&] { return PureState(v, tol); });
  return t;
}

StateFile parse_separable(const Json& doc, const Tolerance& tol) {
  const BipartiteDims dims = at("/dims", [&] { return parse_dims(field(doc, "dims", ""), "/dims"); });
  const Json& terms = field(doc, "terms", "");
  if (!terms.is_array() || terms.empty()) schema_error("/terms", "expected a non-empty array of terms");
  std::vector<ProductTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const Json& t = terms[i];
    if (!t.is_object()) schema_error(path, "expected an object {p, x, y}");
    const double p = parse_number(field(t, "p", path), path + "/p");
    PureState x = parse_unit(field(t, "x", path), path + "/x", tol);
    PureState y = parse_unit(field(t, "y", path), path + "/y", tol);
    out.push_back({p, std::move(x), std::move(y)});
  }
  return at("/terms", [&] { return SeparableDecomposition(dims, std::move(out), tol); });
}

void write_json(std::string& out, const Json& j, bool pretty, int depth);

void write_scalar(std::string& out, const Json& j) {
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) {
      out += "null";
      return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    out += buf;
  } else {
    out += j.dump();
  }
}

bool inline_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j)
    if (e.is_object() || (e.is_array() && !inline_array(e))) return false;
  std::string compact;
  write_json(compact, j, false, 0);
  return compact.size() <= 100;
}

void newline(std::string& out, int depth) {
  out += '\n';
  out.append(static_cast<std::size_t>(2 * depth), ' ');
}

void write_json(std::string& out, const Json& j, bool pretty, int depth) {
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ',';
      first = false;
      if (pretty) newline(out, depth + 1);
      out += Json(key).dump();
      out += pretty ? ": " : ":";
      write_json(out, value, pretty, depth + 1);
    }
    if (pretty) newline(out, depth);
    out += '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    const bool broken = pretty && !inline_array(j);
    out += '[';
    bool first = true;
    for (const Json& e : j) {
      if (!first) out += broken ? "," : (pretty ? ", " : ",");
      first = false;
      if (broken) newline(out, depth + 1);
      write_json(out, e, pretty, depth + 1);
    }
    if (broken) newline(out, depth);
    out += ']';
  } else {
    write_scalar(out, j);
  }
}

Json range_check_json(const RangeCheck& r) {
  return {{"holds", r.holds},
          {"range_rank", r.range_rank},
          {"span_rank", r.span_rank},
          {"max_term_residual", r.max_term_residual},
          {"max_basis_residual", r.max_basis_residual}};
}

struct CertificateWriter {
  Json operator()(const ProductCertificate& c) const {
    return {{"kind", "product"}, {"x", vec_to_json(c.x.vec())}, {"y", vec_to_json(c.y.vec())},
            {"schmidt", to_json(c.schmidt)}};
  }
  Json operator()(const EntangledCertificate& c) const {
    return {{"kind", "schmidt"}, {"schmidt", to_json(c.schmidt)}};
  }
  Json operator()(const SeparableCertificate& c) const {
    return {{"kind", "decomposition"}, {"decomposition", to_json(c.decomposition)},
            {"range_criterion", range_check_json(c.range)}};
  }
  Json operator()(const RangeReport& r) const {
    Json basis = Json::array();
    for (const Vec& b : r.basis) basis.push_back(vec_to_json(b));
    return {{"kind", "range_basis"},
            {"dims", {r.dims.d1(), r.dims.d2()}},
            {"basis", basis},
            {"schmidt_ranks", r.schmidt_ranks},
            {"elementary_spanning_set_found", r.elementary_spanning_set_found},
            {"note", "rank-one screening of range vectors is heuristic, not a separability verdict"}};
  }
  Json operator()(const ClassicalSeparableCert& c) const {
    Json terms = Json::array();
    for (const auto& t : c.terms)
      terms.push_back({{"p", t.weight}, {"x", to_json(t.fx)}, {"y", to_json(t.gy)}});
    return {{"kind", "classical_decomposition"}, {"terms", terms}};
  }
};

}  // namespace

StateFile parse_state(std::string_view text, const Tolerance& tol) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": invalid JSON");
  }
  if (!doc.is_object()) schema_error("", "expected a JSON object");
  const Json& type = field(doc, "type", "");
  if (!type.is_string()) schema_error("/type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "classical") return parse_classical(doc);
  if (t == "classical2") return parse_classical2(doc);
  if (t == "pure") return parse_unit(field(doc, "vec", ""), "/vec", tol);
  if (t == "density") return parse_density(doc, tol);
  if (t == "bipartite") return parse_bipartite(doc, tol);
  if (t == "separable") return parse_separable(doc, tol);
  schema_error("/type", "unknown state type \"" + t + "\"");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Complex& z : v.entries()) out.push_back(complex_to_json(z));
  return out;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
  return out;
}

Json to_json(const ClassicalState& f) {
  Json probs = Json::object();
  for (const auto& [label, p] : f.support()) probs[label] = p;
  return {{"type", "classical"}, {"space", f.space().labels()}, {"probs", probs}};
}

Json to_json(const CompositeClassicalState& h) {
  Json probs = Json::array();
  for (const CompositeEntry& e : h.support()) probs.push_back({e.x, e.y, e.p});
  return {{"type", "classical2"},
          {"spaceX", h.space_x().labels()},
          {"spaceY", h.space_y().labels()},
          {"probs", probs}};
}

Json to_json(const PureState& x) { return {{"type", "pure"}, {"vec", vec_to_json(x.vec())}}; }

Json to_json(const DensityOperator& rho, const std::optional<BipartiteDims>& dims) {
  Json out = {{"type", "density"}, {"dim", rho.dim()}, {"mat", mat_to_json(rho.mat())}};
  if (dims) out["dims"] = {dims->d1(), dims->d2()};
  return out;
}

Json to_json(const BipartiteVector& t) {
  return {{"type", "bipartite"}, {"dims", {t.dims().d1(), t.dims().d2()}}, {"vec", vec_to_json(t.vec())}};
}

Json to_json(const SeparableDecomposition& dec) {
  Json terms = Json::array();
  for (const ProductTerm& t : dec.terms())
    terms.push_back({{"p", t.weight}, {"x", vec_to_json(t.x.vec())}, {"y", vec_to_json(t.y.vec())}});
  return {{"type", "separable"}, {"dims", {dec.dims().d1(), dec.dims().d2()}}, {"terms", terms}};
}

Json to_json(const SchmidtDecomposition& s) {
  Json left = Json::array(), right = Json::array();
  for (const Vec& v : s.left) left.push_back(vec_to_json(v));
  for (const Vec& v : s.right) right.push_back(vec_to_json(v));
  return {{"dims", {s.dims.d1(), s.dims.d2()}},
          {"rank", s.rank},
          {"coeffs", s.coeffs},
          {"left", left},
          {"right", right}};
}

Json to_json(const Classification& c) {
  return {{"verdict", std::string(to_string(c.verdict))},
          {"certificate", std::visit(CertificateWriter{}, c.certificate)}};
}

Json to_json(const StateFile& state) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DensityFile>) {
          return to_json(s.rho, s.dims);
        } else {
          return to_json(s);
        }
      },
      state);
}

std::string dump(const Json& j, bool pretty) {
  std::string out;
  write_json(out, j, pretty, 0);
  return out;
}

std::string_view state_type(const StateFile& state) {
  static constexpr std::string_view kNames[] = {"classical", "classical2", "pure",
                                                "density",   "bipartite",  "separable"};
  return kNames[state.index()];
}

}  // namespace entanglekit
