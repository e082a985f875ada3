// Copyright 2026 The Authors.
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

namespace matkit {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Field construction was asked for a base that is not prime.
struct CompositeBase : Error {
  using Error::Error;
};

// A size cap was exceeded (field order, geometry order, projection depth).
struct UnsupportedSize : Error {
  using Error::Error;
};

// Arithmetic mixed elements of two different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// A subset mentioned an identifier outside the ground set.
struct UnknownElement : Error {
  using Error::Error;
};

struct RankOutOfRange : Error {
  using Error::Error;
};

// A set that was required to be closed is not.
struct NotAFlat : Error {
  using Error::Error;
};

// critical_elements was called on a matroid that is not overfull.
struct NotOverfull : Error {
  using Error::Error;
};

// A documented hypothesis of an analysis routine does not hold.
struct PreconditionFailed : Error {
  using Error::Error;
};

// The instance violates a structural assumption of the algorithm
// (e.g. the minimal spanning flat is not unique).
struct StructureViolation : Error {
  using Error::Error;
};

// A search exceeded its closure budget.  Deliberately distinct from a
// refutation: the caller must not treat this as a mathematical answer.
struct ResourceExceeded : Error {
  using Error::Error;
};

// A rank oracle failed a rank axiom.  Carries a printable witness.
struct AxiomViolation : Error {
  AxiomViolation(const std::string& what, std::string witness_sets)
      : Error(what), witness(std::move(witness_sets)) {}
  std::string witness;
};

// Construction document rejected before replay.  `path` is a
// slash-separated location inside the JSON document; `line` is the source
// line for syntax errors and 0 when the document parsed but failed
// validation.
struct ParseError : Error {
  ParseError(const std::string& what, std::string at, int at_line = 0)
      : Error(what + " (at " + at +
              (at_line > 0 ? ", line " + std::to_string(at_line) : "") + ")"),
        path(std::move(at)),
        line(at_line) {}
  std::string path;
  int line;
};

// Construction document failed while replaying operation `step`.
struct ReplayError : Error {
  ReplayError(const std::string& what, int at_step)
      : Error("step " + std::to_string(at_step) + ": " + what), step(at_step) {}
  int step;
};

struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace matkit
