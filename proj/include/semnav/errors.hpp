// Copyright (c) 2026 Semnav Authors
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

#ifndef SEMNAV_ERRORS_HPP_
#define SEMNAV_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semnav {

/// Base class for all semnav failures. The CLI maps each subclass to a
/// distinct exit code (see README).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input documents: scene files, field dumps, assessment files.
/// The message names the offending field where one is known.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a domain invariant
/// (goal outside bounds, degenerate footprint, empty catalog, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Planning cannot produce a path: blocked endpoint or unreachable goal.
class PlanningError : public Error {
 public:
  PlanningError(const std::string& what, std::int64_t expansions)
      : Error(what), expansions(expansions) {}
  std::int64_t expansions = 0;  // states expanded before giving up
};

/// LLM provider failures: transport errors after retries, or responses that
/// stay unparseable after a re-prompt.
class ProviderError : public Error {
 public:
  using Error::Error;
};

}  // namespace semnav

#endif  // SEMNAV_ERRORS_HPP_
