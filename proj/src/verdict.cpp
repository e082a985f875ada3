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

#include "matkit/verdict.hpp"

#include "matkit/errors.hpp"

namespace matkit {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kMinorFound: return "minor-found";
    case VerdictKind::kBoundHolds: return "bound-holds";
    case VerdictKind::kWitness: return "witness";
    case VerdictKind::kRefuted: return "refuted";
  }
  return "unknown";
}

Json set_to_json(const ElementSet& s) {
  Json j = Json::array();
  for (int e : s) j.push_back(e);
  return j;
}

ElementSet set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("element set must be an array", "set");
  ElementSet s;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError("element must be a nonnegative integer", "set");
    s.insert(v.get<int>());
  }
  return s;
}

Json AnalysisVerdict::to_json() const {
  Json j;
  j["verdict"] = to_string(kind);
  if (!note.empty()) j["note"] = note;
  if (!minors.empty()) {
    Json arr = Json::array();
    for (const MinorWitness& w : minors) {
      Json m;
      m["contract"] = set_to_json(w.contract_flat);
      m["line"] = set_to_json(w.line_flat);
      m["points"] = w.points;
      arr.push_back(std::move(m));
    }
    j["minors"] = std::move(arr);
  }
  if (!sets.empty()) {
    Json arr = Json::array();
    for (const ElementSet& s : sets) arr.push_back(set_to_json(s));
    j["sets"] = std::move(arr);
  }
  if (!numbers.empty()) j["numbers"] = numbers;
  return j;
}

}  // namespace matkit
