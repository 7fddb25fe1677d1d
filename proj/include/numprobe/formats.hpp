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

#ifndef NUMPROBE_FORMATS_HPP_
#define NUMPROBE_FORMATS_HPP_

#include <string>

namespace numprobe {

// Surface-form pattern identifiers shared by the parsers, the mention
// scanner, and the probe generators (which re-render values in a sibling
// pattern).
enum class Pattern {
  kNone = 0,
  // Dates.
  kDmyHyphen,                // 03-06-1986
  kDmySlash,                 // 03/06/1986
  kIso,                      // 1986-06-03
  kDayMonthYear,             // 3 June 1986
  kOrdinalDayMonthCommaYear, // 3rd June, 1986
  kMonthDayCommaYear,        // June 20, 2003
  kMonthYear,                // June 1986
  kYearOnly,                 // 1986
  kTimeColon,                // 14:30
  // Plain numbers.
  kPlainDigits,              // 1986, 3.14, -5
  kGroupedThousands,         // 116,111,561
  kCardinalWords,            // one hundred and forty-four
  kOrdinalSuffix,            // 3rd
  kOrdinalWord,              // third
  kPercentSign,              // 35%
  kPercentWord,              // 35 percent
  kSciENotation,             // 116.111561e6
  kCurrencySymbol,           // $116,000,000
  kCurrencyCode,             // 5 million USD
  kMeasuredQuantity,         // 1.85 m
};

const char* pattern_name(Pattern p);
Pattern pattern_from_name(const std::string& name);

struct FormatDescriptor {
  Pattern pattern = Pattern::kNone;
  std::string locale_note;  // free-form, e.g. "day-first"
};

}  // namespace numprobe

#endif  // NUMPROBE_FORMATS_HPP_
