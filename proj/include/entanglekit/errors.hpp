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

#include <stdexcept>
#include <string>

namespace entanglekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector lengths, square-ness, tensor factors).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain invariant: non-normalized state, negative
/// probability, non-positive operator handed to a factorization, ...
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a nonzero vector received the zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// Two independent internal routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace entanglekit
