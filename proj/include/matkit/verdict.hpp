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

#include <string>
#include <vector>

#include <json.hpp>

#include "matkit/bitset.hpp"

namespace matkit {

using Json = nlohmann::ordered_json;

// Outcome of a decision procedure.  Positive outcomes always carry enough
// data to replay the claim; refutations carry the refuting object.
enum class VerdictKind {
  kMinorFound,   // a minor of the requested kind exists; witness attached
  kBoundHolds,   // the checked inequality or property holds
  kWitness,      // an object was found (matching, subset, ...)
  kRefuted,      // exhaustive search proved non-existence
};

std::string to_string(VerdictKind k);

// Witness for a line minor: contracting `contract_flat` leaves a rank-2
// interval below `line_flat` containing `points` distinct points.
struct MinorWitness {
  ElementSet contract_flat;
  ElementSet line_flat;
  int points = 0;
};

struct AnalysisVerdict {
  VerdictKind kind = VerdictKind::kBoundHolds;
  std::string note;

  // Optional payloads; empty when not applicable.
  std::vector<MinorWitness> minors;
  std::vector<ElementSet> sets;     // covers, matchings, subsets, ...
  std::vector<long long> numbers;   // counts, thresholds, d values, ...

  bool positive() const { return kind != VerdictKind::kRefuted; }

  Json to_json() const;
};

Json set_to_json(const ElementSet& s);
ElementSet set_from_json(const Json& j);

}  // namespace matkit
