// Copyright 2026 The lwdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LWDP_ERROR_H_
#define LWDP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwdp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric argument lies outside the domain of a distribution or formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An instance exceeds the size an exhaustive routine accepts, or an index is
// out of range.
class SizeError : public Error {
 public:
  using Error::Error;
};

// The graph does not contain an edge a caller relied on.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural rule (duplicate edge, self-loop, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Privacy budget or run configuration is inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A parameter value is recognised but deliberately not supported.
class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lwdp

#endif  // LWDP_ERROR_H_
