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

#ifndef NUMPROBE_DATES_HPP_
#define NUMPROBE_DATES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "numprobe/formats.hpp"

namespace numprobe {

// Calendar date with optional day and month (a bare "June 1986" or "1986"
// is still a date mention). Day present implies month present.
struct DateValue {
  int day = 0;    // 1..31, 0 = absent
  int month = 0;  // 1..12, 0 = absent
  long long year = 0;
  FormatDescriptor source_format;

  bool has_day() const { return day != 0; }
  bool has_month() const { return month != 0; }

  // Field equality; source_format is presentation only.
  friend bool operator==(const DateValue& a, const DateValue& b) {
    return a.day == b.day && a.month == b.month && a.year == b.year;
  }
  friend bool operator!=(const DateValue& a, const DateValue& b) {
    return !(a == b);
  }
};

bool is_leap_year(long long year);
int days_in_month(long long year, int month);

// Throws InvalidDate on calendar violations ("31-02-2020") and on surfaces
// matching no catalog pattern. Bare "1986" parses as a year-only date here;
// the mention scanner decides separately whether such a span is a date.
DateValue parse_date(const std::string& surface);
std::optional<DateValue> try_parse_date(const std::string& surface);

// Renders in the requested pattern. InvalidDate when the pattern needs a
// field the value lacks (e.g. DMY-hyphen for a month-year date).
std::string format_date(const DateValue& d, Pattern pattern);

// Patterns able to render d, most specific first. The first entry differing
// from d.source_format is the deterministic "reformat" choice.
std::vector<Pattern> renderable_date_patterns(const DateValue& d);

const char* month_name(int month);  // 1 -> "January"

}  // namespace numprobe

#endif  // NUMPROBE_DATES_HPP_
