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

#ifndef NUMPROBE_UNITS_HPP_
#define NUMPROBE_UNITS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "numprobe/numeric_value.hpp"

namespace numprobe {

struct UnitEntry {
  std::string id;        // "meter"
  std::string family;    // "length", "mass", ..., "currency-usd"
  std::string system;    // "metric", "imperial", or "none"
  BigInt factor_num{1};  // factor to the family base unit, exact rational
  BigInt factor_den{1};
  std::vector<std::string> aliases;  // includes id; first is render default
  std::string counterpart;           // sibling in the other system, or empty
};

// Read-only after load; safe to share across threads.
class UnitCatalog {
 public:
  // Compiled-in copy of resources/units.catalog.
  static UnitCatalog builtin();
  // Versioned key=value resource file. Throws CatalogError on malformed
  // input or unsupported version.
  static UnitCatalog load(const std::string& path);
  static UnitCatalog parse_text(const std::string& text);

  const UnitEntry* find(const std::string& id_or_alias) const;
  const UnitEntry& require(const std::string& id_or_alias) const;

  // Exact multiplication by the catalog factor ratio, division capped at
  // max_sig significant digits. DimensionMismatch across families.
  NumericValue convert(const NumericValue& v, const std::string& from,
                       const std::string& to, int max_sig = 12,
                       bool* exact = nullptr) const;

  // Next unit within the same family+system ordered by factor:
  // direction -1 = next smaller, +1 = next larger. Falls back to the other
  // direction at the end of the scale; nullopt when the unit is alone.
  std::optional<std::string> adjacent_unit(const std::string& id,
                                           int direction = -1) const;

  // Declared counterpart, else the first same-family unit under another
  // system. nullopt when the family has a single system.
  std::optional<std::string> cross_system_unit(const std::string& id) const;

  const std::vector<UnitEntry>& entries() const { return entries_; }
  int version() const { return version_; }

 private:
  int version_ = 0;
  std::vector<UnitEntry> entries_;
};

}  // namespace numprobe

#endif  // NUMPROBE_UNITS_HPP_
