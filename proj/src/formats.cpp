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

#include "numprobe/formats.hpp"

#include <array>
#include <utility>

#include "numprobe/errors.hpp"

namespace numprobe {
namespace {

constexpr std::array<std::pair<Pattern, const char*>, 21> kNames = {{
    {Pattern::kNone, "none"},
    {Pattern::kDmyHyphen, "dmy-hyphen"},
    {Pattern::kDmySlash, "dmy-slash"},
    {Pattern::kIso, "iso-8601"},
    {Pattern::kDayMonthYear, "day-month-year"},
    {Pattern::kOrdinalDayMonthCommaYear, "ordinal-day-month-comma-year"},
    {Pattern::kMonthDayCommaYear, "month-day-comma-year"},
    {Pattern::kMonthYear, "month-year"},
    {Pattern::kYearOnly, "year-only"},
    {Pattern::kTimeColon, "time-colon"},
    {Pattern::kPlainDigits, "plain-digits"},
    {Pattern::kGroupedThousands, "grouped-thousands"},
    {Pattern::kCardinalWords, "cardinal-words"},
    {Pattern::kOrdinalSuffix, "ordinal-suffix"},
    {Pattern::kOrdinalWord, "ordinal-word"},
    {Pattern::kPercentSign, "percent-sign"},
    {Pattern::kPercentWord, "percent-word"},
    {Pattern::kSciENotation, "sci-e-notation"},
    {Pattern::kCurrencySymbol, "currency-symbol"},
    {Pattern::kCurrencyCode, "currency-code"},
    {Pattern::kMeasuredQuantity, "measured-quantity"},
}};

}  // namespace

const char* pattern_name(Pattern p) {
  for (const auto& [pat, name] : kNames) {
    if (pat == p) return name;
  }
  throw ParseError("unknown pattern id");
}

Pattern pattern_from_name(const std::string& name) {
  for (const auto& [pat, pname] : kNames) {
    if (name == pname) return pat;
  }
  throw ParseError("unknown pattern name: " + name);
}

}  // namespace numprobe
