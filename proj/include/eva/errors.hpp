// Copyright 2026 The EVA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace eva {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value is outside the domain an operation accepts.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Sizes of two inputs disagree (register widths, bit vector lengths).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An ansatz or circuit violates a structural requirement.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// The requested computation would not fit in memory.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eva
