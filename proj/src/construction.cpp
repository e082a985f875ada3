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

#include "matkit/construction.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "matkit/errors.hpp"
#include "matkit/geometry.hpp"

namespace matkit {
namespace {

// Identifiers are kept small so a corrupt document cannot demand huge
// bitsets before replay even starts.
constexpr int kMaxIdentifier = 4095;

[[noreturn]] void fail(const std::string& what, const std::string& path) {
  throw ParseError(what, path);
}

std::string join(const std::string& base, const std::string& key) {
  return base + "/" + key;
}

// Strict mode: every object is checked against the exact key list of its
// schema node before any value is read.
void reject_unknown(const Json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known)
      fail("unknown field \"" + item.key() + "\"", join(path, item.key()));
  }
}

const Json& as_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail("expected an object", path);
  return j;
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"", path);
  return *it;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail("expected an integer", path);
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>(
              std::numeric_limits<long long>::max()))
    fail("integer is too large", path);
  return j.get<long long>();
}

int int_in(const Json& j, const std::string& path, long long lo, long long hi) {
  long long v = as_int(j, path);
  if (v < lo || v > hi)
    fail("value " + std::to_string(v) + " is outside [" + std::to_string(lo) +
             ", " + std::to_string(hi) + "]",
         path);
  return static_cast<int>(v);
}

ElementSet id_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail("expected a list of element identifiers", path);
  ElementSet s;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = join(path, std::to_string(i));
    int id = int_in(j[i], at, 0, kMaxIdentifier);
    if (s.contains(id)) fail("duplicate identifier " + std::to_string(id), at);
    s.insert(id);
  }
  return s;
}

std::vector<int> coeff_list(const Json& j, const std::string& path, int len,
                            int p) {
  if (!j.is_array()) fail("expected a coefficient list", path);
  if (static_cast<int>(j.size()) != len)
    fail("expected " + std::to_string(len) + " coefficients", path);
  std::vector<int> c(len);
  for (int i = 0; i < len; ++i)
    c[i] = int_in(j[i], join(path, std::to_string(i)), 0, p - 1);
  return c;
}

void parse_field_record(const Json& j, const std::string& path,
                        ConstructionDocument& d) {
  const Json& f = as_object(j, path);
  reject_unknown(f, path, {"p", "e", "modulus"});
  d.p = int_in(member(f, path, "p"), join(path, "p"), 2, 64);
  d.e = int_in(member(f, path, "e"), join(path, "e"), 1, 4);
  Field built;
  try {
    built = field_make(d.p, d.e);
  } catch (const Error& err) {
    fail(std::string("unsupported field: ") + err.what(), path);
  }
  d.modulus =
      coeff_list(member(f, path, "modulus"), join(path, "modulus"), d.e + 1, d.p);
  // Files spell the modulus out, but only the canonical choice has tables.
  if (d.modulus != built->modulus)
    fail("modulus is not the canonical modulus of GF(" +
             std::to_string(built->q) + ")",
         join(path, "modulus"));
}

void parse_base(const Json& j, const std::string& path,
                ConstructionDocument& d) {
  const Json& b = as_object(j, path);
  reject_unknown(b, path, {"pg", "matrix"});
  const bool has_pg = b.contains("pg");
  const bool has_matrix = b.contains("matrix");
  if (has_pg == has_matrix)
    fail("expected exactly one of \"pg\" and \"matrix\"", path);
  if (has_pg) {
    const std::string at = join(path, "pg");
    const Json& g = as_object(b["pg"], at);
    reject_unknown(g, at, {"n"});
    d.from_geometry = true;
    d.geometry_rank = int_in(member(g, at, "n"), join(at, "n"), 1, 32);
    return;
  }
  const std::string at = join(path, "matrix");
  const Json& mx = as_object(b["matrix"], at);
  reject_unknown(mx, at, {"rows", "cols", "entries"});
  d.from_geometry = false;
  d.rows = int_in(member(mx, at, "rows"), join(at, "rows"), 1, 256);
  d.cols = int_in(member(mx, at, "cols"), join(at, "cols"), 0, kMaxIdentifier + 1);
  const Json& ej = member(mx, at, "entries");
  const std::string ep = join(at, "entries");
  if (!ej.is_array()) fail("expected a list of coefficient lists", ep);
  const long long want = static_cast<long long>(d.rows) * d.cols;
  if (static_cast<long long>(ej.size()) != want)
    fail("expected rows * cols = " + std::to_string(want) + " entries", ep);
  d.entries.clear();
  d.entries.reserve(ej.size());
  for (size_t i = 0; i < ej.size(); ++i)
    d.entries.push_back(coeff_list(ej[i], join(ep, std::to_string(i)), d.e, d.p));
}

ConstructionOp parse_op(const Json& j, const std::string& path) {
  const Json& o = as_object(j, path);
  reject_unknown(o, path, {"extend", "truncate", "delete", "contract"});
  if (o.size() != 1) fail("expected exactly one operation", path);
  ConstructionOp op;
  if (o.contains("extend")) {
    const std::string at = join(path, "extend");
    const Json& x = as_object(o["extend"], at);
    reject_unknown(x, at, {"flat"});
    op.kind = ConstructionOp::Kind::kExtend;
    op.elements = id_list(member(x, at, "flat"), join(at, "flat"));
  } else if (o.contains("truncate")) {
    const std::string at = join(path, "truncate");
    const Json& x = as_object(o["truncate"], at);
    reject_unknown(x, at, {});
    op.kind = ConstructionOp::Kind::kTruncate;
  } else if (o.contains("delete")) {
    const std::string at = join(path, "delete");
    const Json& x = as_object(o["delete"], at);
    reject_unknown(x, at, {"set"});
    op.kind = ConstructionOp::Kind::kDelete;
    op.elements = id_list(member(x, at, "set"), join(at, "set"));
  } else {
    const std::string at = join(path, "contract");
    const Json& x = as_object(o["contract"], at);
    reject_unknown(x, at, {"set"});
    op.kind = ConstructionOp::Kind::kContract;
    op.elements = id_list(member(x, at, "set"), join(at, "set"));
  }
  return op;
}

uint8_t coeffs_to_index(const FieldSpec& f, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != f.e)
    throw PreconditionFailed("coefficient list length does not match the field");
  int v = 0;
  int pw = 1;
  for (int i = 0; i < f.e; ++i) {
    if (c[i] < 0 || c[i] >= f.p)
      throw PreconditionFailed("coefficient is not a base-p digit");
    v += c[i] * pw;
    pw *= f.p;
  }
  return static_cast<uint8_t>(v);
}

}  // namespace

ConstructionDocument pg_document(int p, int e, int rank) {
  if (rank < 1) throw PreconditionFailed("geometry rank must be at least 1");
  Field f = field_make(p, e);
  ConstructionDocument d;
  d.p = p;
  d.e = e;
  d.modulus = f->modulus;
  d.from_geometry = true;
  d.geometry_rank = rank;
  return d;
}

ConstructionDocument matrix_document(const Field& f, int rows, int cols,
                                     const std::vector<uint8_t>& entries) {
  if (rows < 1 || cols < 0 ||
      entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw PreconditionFailed("matrix shape does not match the entry count");
  ConstructionDocument d;
  d.p = f->p;
  d.e = f->e;
  d.modulus = f->modulus;
  d.from_geometry = false;
  d.rows = rows;
  d.cols = cols;
  d.entries.reserve(entries.size());
  for (uint8_t idx : entries) {
    if (idx >= f->q) throw PreconditionFailed("entry is not a field element");
    auto a = f->coeffs_of(idx);
    d.entries.emplace_back(a.begin(), a.begin() + f->e);
  }
  return d;
}

ConstructionDocument& add_extend(ConstructionDocument& d, const ElementSet& flat) {
  d.ops.push_back({ConstructionOp::Kind::kExtend, flat});
  return d;
}

ConstructionDocument& add_truncate(ConstructionDocument& d) {
  d.ops.push_back({ConstructionOp::Kind::kTruncate, {}});
  return d;
}

ConstructionDocument& add_delete(ConstructionDocument& d, const ElementSet& s) {
  d.ops.push_back({ConstructionOp::Kind::kDelete, s});
  return d;
}

ConstructionDocument& add_contract(ConstructionDocument& d, const ElementSet& s) {
  d.ops.push_back({ConstructionOp::Kind::kContract, s});
  return d;
}

ConstructionDocument construction_from_json(const Json& j) {
  if (!j.is_object()) fail("expected an object", "/");
  reject_unknown(j, "", {"version", "field", "base", "ops"});
  ConstructionDocument d;
  int v = int_in(member(j, "/", "version"), "/version", 1,
                 std::numeric_limits<int>::max());
  if (v != 1) fail("unsupported version " + std::to_string(v), "/version");
  d.version = 1;
  parse_field_record(member(j, "/", "field"), "/field", d);
  parse_base(member(j, "/", "base"), "/base", d);
  const Json& ops = member(j, "/", "ops");
  if (!ops.is_array()) fail("expected a list of operations", "/ops");
  d.ops.reserve(ops.size());
  for (size_t i = 0; i < ops.size(); ++i)
    d.ops.push_back(parse_op(ops[i], join("/ops", std::to_string(i))));
  return d;
}

ConstructionDocument parse_construction(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& pe) {
    int line = 1;
    for (size_t i = 0; i + 1 < pe.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    std::string msg = pe.what();
    auto cut = msg.find("] ");
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw ParseError("malformed JSON: " + msg, "/", line);
  }
  return construction_from_json(j);
}

Json construction_to_json(const ConstructionDocument& d) {
  Json j = Json::object();
  j["version"] = d.version;
  Json fld = Json::object();
  fld["p"] = d.p;
  fld["e"] = d.e;
  fld["modulus"] = d.modulus;
  j["field"] = std::move(fld);
  Json base = Json::object();
  if (d.from_geometry) {
    Json g = Json::object();
    g["n"] = d.geometry_rank;
    base["pg"] = std::move(g);
  } else {
    Json mx = Json::object();
    mx["rows"] = d.rows;
    mx["cols"] = d.cols;
    mx["entries"] = d.entries;
    base["matrix"] = std::move(mx);
  }
  j["base"] = std::move(base);
  Json ops = Json::array();
  for (const ConstructionOp& op : d.ops) {
    Json o = Json::object();
    switch (op.kind) {
      case ConstructionOp::Kind::kExtend: {
        Json x = Json::object();
        x["flat"] = set_to_json(op.elements);
        o["extend"] = std::move(x);
        break;
      }
      case ConstructionOp::Kind::kTruncate:
        o["truncate"] = Json::object();
        break;
      case ConstructionOp::Kind::kDelete: {
        Json x = Json::object();
        x["set"] = set_to_json(op.elements);
        o["delete"] = std::move(x);
        break;
      }
      case ConstructionOp::Kind::kContract: {
        Json x = Json::object();
        x["set"] = set_to_json(op.elements);
        o["contract"] = std::move(x);
        break;
      }
    }
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j;
}

std::string serialize_construction(const ConstructionDocument& d) {
  return construction_to_json(d).dump(2) + "\n";
}

MatroidHandle replay_construction(const ConstructionDocument& d) {
  MatroidHandle cur;
  try {
    Field f = field_make(d.p, d.e);
    if (d.modulus != f->modulus)
      throw PreconditionFailed("modulus is not the canonical modulus");
    if (d.from_geometry) {
      if (d.geometry_rank < 1)
        throw PreconditionFailed("geometry rank must be at least 1");
      // Documents are data, so the replay accepts every geometry the
      // representation supports; the tighter default cap only concerns
      // searches that must stay exhaustive.
      cur = pg(d.geometry_rank - 1, f, /*big=*/true).handle;
    } else {
      std::vector<uint8_t> idx;
      idx.reserve(d.entries.size());
      for (const std::vector<int>& c : d.entries)
        idx.push_back(coeffs_to_index(*f, c));
      cur = MatroidHandle::from_matrix(f, d.rows, d.cols, idx);
    }
  } catch (const Error& err) {
    throw ReplayError(std::string("base: ") + err.what(), -1);
  }
  for (size_t i = 0; i < d.ops.size(); ++i) {
    const ConstructionOp& op = d.ops[i];
    try {
      switch (op.kind) {
        case ConstructionOp::Kind::kExtend:
          cur = principal_extend(cur, op.elements).first;
          break;
        case ConstructionOp::Kind::kTruncate:
          cur = truncate_node(cur);
          break;
        case ConstructionOp::Kind::kDelete:
          cur = deletion(cur, op.elements);
          break;
        case ConstructionOp::Kind::kContract:
          cur = contraction(cur, op.elements);
          break;
      }
    } catch (const Error& err) {
      throw ReplayError(err.what(), static_cast<int>(i));
    }
  }
  return cur;
}

}  // namespace matkit
