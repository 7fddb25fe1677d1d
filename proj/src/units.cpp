// Copyright 2026 The numprobe Authors
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

#include "numprobe/units.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "numprobe/errors.hpp"

namespace numprobe {

// Defined in the build-generated builtin_catalog.cpp, mirroring
// resources/units.catalog verbatim.
const char* builtin_catalog_text();

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// "0.3048" or "381/1250" -> exact rational.
void parse_factor(const std::string& text, BigInt* num, BigInt* den) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    *num = bigint_from_digits(text.substr(0, slash));
    *den = bigint_from_digits(text.substr(slash + 1));
    if (*den == 0) throw CatalogError("zero denominator in factor " + text);
    return;
  }
  NumericValue v = NumericValue::parse(text);
  std::string s = v.to_string();
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    *num = bigint_from_digits(s);
    *den = 1;
  } else {
    *num = bigint_from_digits(s.substr(0, dot) + s.substr(dot + 1));
    *den = 1;
    for (size_t i = 0; i < s.size() - dot - 1; ++i) *den *= 10;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

NumericValue factor_ratio_value(const UnitEntry& e) {
  // For ordering only; 18 digits is far beyond any catalog factor's needs.
  return NumericValue::from_parts(false, e.factor_num, 0)
      .times_ratio(BigInt(1), e.factor_den, 18, nullptr);
}

}  // namespace

UnitCatalog UnitCatalog::builtin() { return parse_text(builtin_catalog_text()); }

UnitCatalog UnitCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

UnitCatalog UnitCatalog::parse_text(const std::string& text) {
  UnitCatalog cat;
  std::map<std::string, UnitEntry> by_id;
  std::vector<std::string> order;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CatalogError("line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = line.substr(first, eq - first);
    std::string value = line.substr(eq + 1);
    if (key == "version") {
      cat.version_ = std::stoi(value);
      continue;
    }
    std::vector<std::string> parts = split(key, '.');
    if (parts.size() != 3 || parts[0] != "unit") {
      throw CatalogError("line " + std::to_string(lineno) + ": bad key " + key);
    }
    const std::string& id = parts[1];
    if (!by_id.count(id)) {
      by_id[id].id = id;
      order.push_back(id);
    }
    UnitEntry& e = by_id[id];
    const std::string& field = parts[2];
    if (field == "family") {
      e.family = value;
    } else if (field == "system") {
      e.system = value;
    } else if (field == "factor") {
      parse_factor(value, &e.factor_num, &e.factor_den);
    } else if (field == "aliases") {
      e.aliases = split(value, '|');
    } else if (field == "counterpart") {
      e.counterpart = value;
    } else {
      throw CatalogError("line " + std::to_string(lineno) + ": unknown field " +
                         field);
    }
  }
  if (cat.version_ != 1) {
    throw CatalogError("unsupported catalog version " +
                       std::to_string(cat.version_));
  }
  for (const std::string& id : order) {
    UnitEntry& e = by_id[id];
    if (e.family.empty() || e.aliases.empty() || e.factor_num == 0) {
      throw CatalogError("incomplete unit entry: " + id);
    }
    cat.entries_.push_back(std::move(e));
  }
  for (const UnitEntry& e : cat.entries_) {
    if (!e.counterpart.empty()) {
      const UnitEntry* c = cat.find(e.counterpart);
      if (!c || c->family != e.family) {
        throw CatalogError("bad counterpart for " + e.id);
      }
    }
  }
  return cat;
}

const UnitEntry* UnitCatalog::find(const std::string& id_or_alias) const {
  for (const UnitEntry& e : entries_) {
    if (e.id == id_or_alias) return &e;
    for (const std::string& a : e.aliases) {
      if (a == id_or_alias) return &e;
    }
  }
  // Case-insensitive fallback for word-length aliases only; single-letter
  // symbols stay case-sensitive ("M" is not "m").
  if (id_or_alias.size() >= 2) {
    std::string want = lower(id_or_alias);
    for (const UnitEntry& e : entries_) {
      for (const std::string& a : e.aliases) {
        if (a.size() >= 2 && lower(a) == want) return &e;
      }
    }
  }
  return nullptr;
}

const UnitEntry& UnitCatalog::require(const std::string& id_or_alias) const {
  const UnitEntry* e = find(id_or_alias);
  if (!e) throw UnknownUnit("unknown unit: \"" + id_or_alias + "\"");
  return *e;
}

NumericValue UnitCatalog::convert(const NumericValue& v,
                                  const std::string& from,
                                  const std::string& to, int max_sig,
                                  bool* exact) const {
  const UnitEntry& f = require(from);
  const UnitEntry& t = require(to);
  if (f.family != t.family) {
    throw DimensionMismatch("cannot convert " + f.id + " (" + f.family +
                            ") to " + t.id + " (" + t.family + ")");
  }
  return v.times_ratio(f.factor_num * t.factor_den, f.factor_den * t.factor_num,
                       max_sig, exact);
}

std::optional<std::string> UnitCatalog::adjacent_unit(const std::string& id,
                                                      int direction) const {
  const UnitEntry& e = require(id);
  std::vector<const UnitEntry*> scale;
  for (const UnitEntry& o : entries_) {
    if (o.family == e.family && o.system == e.system) scale.push_back(&o);
  }
  std::sort(scale.begin(), scale.end(), [](const UnitEntry* a, const UnitEntry* b) {
    return factor_ratio_value(*a) < factor_ratio_value(*b);
  });
  auto it = std::find_if(scale.begin(), scale.end(),
                         [&](const UnitEntry* u) { return u->id == e.id; });
  size_t idx = static_cast<size_t>(it - scale.begin());
  if (scale.size() < 2) return std::nullopt;
  if (direction < 0) {
    return idx > 0 ? scale[idx - 1]->id : scale[idx + 1]->id;
  }
  return idx + 1 < scale.size() ? scale[idx + 1]->id : scale[idx - 1]->id;
}

std::optional<std::string> UnitCatalog::cross_system_unit(
    const std::string& id) const {
  const UnitEntry& e = require(id);
  if (!e.counterpart.empty()) return e.counterpart;
  for (const UnitEntry& o : entries_) {
    if (o.family == e.family && o.system != e.system) return o.id;
  }
  return std::nullopt;
}

}  // namespace numprobe
