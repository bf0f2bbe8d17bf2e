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

// JSON state files. Complex numbers are written as [re, im]; floating point
// values are emitted with 17 significant digits so they read back exactly.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "entanglekit/bipartite.hpp"
#include "entanglekit/classical.hpp"
#include "entanglekit/errors.hpp"
#include "entanglekit/quantum.hpp"
#include "entanglekit/separability.hpp"
#include "json.hpp"

namespace entanglekit {

using Json = nlohmann::json;

/// Malformed JSON or a document that does not match any state schema. The
/// message carries a line/column or a JSON pointer to the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A density operator together with the optional tensor factorization of its
/// space ("dims": [d1, d2]).
struct DensityFile {
  DensityOperator rho;
  std::optional<BipartiteDims> dims;
};

using StateFile = std::variant<ClassicalState, CompositeClassicalState, PureState, DensityFile,
                               BipartiteVector, SeparableDecomposition>;

/// Parses and validates a state file. Schema problems raise ParseError;
/// domain violations raise the library error for that invariant
/// (InvariantError, DimensionError, ZeroVectorError) prefixed with the
/// location of the offending field.
StateFile parse_state(std::string_view text, const Tolerance& tol = Tolerance{});

Json to_json(const StateFile& state);
Json to_json(const ClassicalState& f);
Json to_json(const CompositeClassicalState& h);
Json to_json(const PureState& x);
Json to_json(const DensityOperator& rho, const std::optional<BipartiteDims>& dims = std::nullopt);
Json to_json(const BipartiteVector& t);
Json to_json(const SeparableDecomposition& dec);
Json to_json(const SchmidtDecomposition& s);
Json to_json(const Classification& c);

Json complex_to_json(Complex z);
Json vec_to_json(const Vec& v);
Json mat_to_json(const Mat& m);

/// Serializes with 17 significant digits. Compact output is a single line;
/// pretty output indents by two spaces and keeps short scalar arrays inline.
std::string dump(const Json& j, bool pretty);

/// Type tag of a state ("classical", "density", ...).
std::string_view state_type(const StateFile& state);

}  // namespace entanglekit
