// Copyright 2026 The primesym Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primesym {

// Base for every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition (bad argument, composite where a prime is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed word text. `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Bisection ran out of iterations; carries the last bracket.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double lo, double hi, const std::string& what)
      : Error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

// Two representations of the same object disagree. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace primesym
