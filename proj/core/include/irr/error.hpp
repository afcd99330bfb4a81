// Copyright 2026 The irr Authors
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

#ifndef IRR_ERROR_HPP
#define IRR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irr {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient rings, fields or free modules.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A quotient that must be finite-dimensional is not.
class NotZeroDimensionalError : public Error {
 public:
  using Error::Error;
};

/// No power of the maximal ideal was found inside an ideal (or submodule)
/// within the configured search bound.
class NotPrimaryError : public Error {
 public:
  using Error::Error;
};

/// A table of values did not settle into polynomial behaviour.
class NotStabilizedError : public Error {
 public:
  using Error::Error;
};

/// A universally valid identity failed on a concrete instance.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  /// Prefixes \p context to an existing error, keeping its position.
  ParseError(const std::string& context, const ParseError& inner)
      : Error(context + inner.what()), position_(inner.position_) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace irr

#endif  // IRR_ERROR_HPP
