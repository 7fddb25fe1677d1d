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

#ifndef NUMPROBE_SCAN_HPP_
#define NUMPROBE_SCAN_HPP_

#include <string>
#include <vector>

#include "numprobe/dates.hpp"
#include "numprobe/formats.hpp"
#include "numprobe/numeric_value.hpp"
#include "numprobe/units.hpp"

namespace numprobe {

enum class MentionKind {
  kCardinalDigits,
  kCardinalWords,
  kOrdinal,
  kDate,
  kTime,
  kPercentage,
  kCurrency,
  kScientificNotation,
  kNegativeNumber,
  kMeasuredQuantity,
};

const char* mention_kind_name(MentionKind k);
MentionKind mention_kind_from_name(const std::string& name);

// One numeric mention in a hypothesis. Spans are byte offsets into the
// scanned text; surface is the verbatim substring.
struct Mention {
  size_t begin = 0;
  size_t end = 0;
  std::string surface;
  MentionKind kind = MentionKind::kCardinalDigits;
  NumericValue value;       // numeric kinds; seconds for kTime
  DateValue date;           // kDate only
  std::string unit;         // unit id for MeasuredQuantity/Currency/Time
  FormatDescriptor format;  // rendering of the numeric part
  // Sub-span holding just the number (excludes currency symbols, unit
  // aliases, and word multipliers). Equal to [begin, end) for plain kinds.
  size_t num_begin = 0;
  size_t num_end = 0;
  // "5 million" carries value 5e6 with multiplier_pow10 = 6; replacement
  // values are re-rendered against the same multiplier word.
  int multiplier_pow10 = 0;

  bool is_date() const { return kind == MentionKind::kDate; }
};

// All maximal non-overlapping mentions, left to right. Longest match wins;
// kind priority (Date > Currency > Percentage > Scientific > Measured >
// Ordinal > Negative > CardinalDigits > CardinalWords) breaks overlaps.
// A matched surface whose numeric value is negative is reported as
// NegativeNumber whatever matcher found it; bare four-digit years surface
// as CardinalDigits and are upgraded to dates only by table linking.
std::vector<Mention> scan_mentions(const std::string& text,
                                   const UnitCatalog& catalog);

}  // namespace numprobe

#endif  // NUMPROBE_SCAN_HPP_
