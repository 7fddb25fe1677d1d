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

#include "numprobe/dates.hpp"

#include "doctest.h"
#include "numprobe/errors.hpp"
#include "numprobe/rng.hpp"

using numprobe::DateValue;
using numprobe::format_date;
using numprobe::parse_date;
using numprobe::Pattern;

TEST_CASE("parse catalog patterns") {
  DateValue d = parse_date("3rd June, 1986");
  CHECK(d.day == 3);
  CHECK(d.month == 6);
  CHECK(d.year == 1986);
  CHECK(d.source_format.pattern == Pattern::kOrdinalDayMonthCommaYear);

  d = parse_date("03-06-1986");
  CHECK(d == parse_date("3rd June, 1986"));
  CHECK(d.source_format.pattern == Pattern::kDmyHyphen);

  d = parse_date("1986-06-03");
  CHECK(d.day == 3);
  CHECK(d.source_format.pattern == Pattern::kIso);

  d = parse_date("03/06/1986");
  CHECK(d.month == 6);
  CHECK(d.source_format.pattern == Pattern::kDmySlash);

  d = parse_date("June 20, 2003");
  CHECK(d.day == 20);
  CHECK(d.month == 6);
  CHECK(d.year == 2003);
  CHECK(d.source_format.pattern == Pattern::kMonthDayCommaYear);

  d = parse_date("20th June, 2003");
  CHECK(d == parse_date("June 20, 2003"));

  d = parse_date("3 June 1986");
  CHECK(d.source_format.pattern == Pattern::kDayMonthYear);

  d = parse_date("June 1986");
  CHECK(!d.has_day());
  CHECK(d.month == 6);
  CHECK(d.source_format.pattern == Pattern::kMonthYear);

  d = parse_date("1986");
  CHECK(!d.has_day());
  CHECK(!d.has_month());
  CHECK(d.year == 1986);
  CHECK(d.source_format.pattern == Pattern::kYearOnly);
}

TEST_CASE("calendar validation") {
  CHECK_THROWS_AS(parse_date("31-02-2020"), numprobe::InvalidDate);
  CHECK_THROWS_AS(parse_date("29-02-2019"), numprobe::InvalidDate);
  CHECK_NOTHROW(parse_date("29-02-2020"));
  CHECK_NOTHROW(parse_date("29-02-2000"));
  CHECK_THROWS_AS(parse_date("29-02-1900"), numprobe::InvalidDate);
  CHECK_THROWS_AS(parse_date("00-06-1986"), numprobe::InvalidDate);
  CHECK_THROWS_AS(parse_date("15-13-1986"), numprobe::InvalidDate);
  CHECK_THROWS_AS(parse_date("June 31, 2003"), numprobe::InvalidDate);
  CHECK_THROWS_AS(parse_date("whenever"), numprobe::InvalidDate);
  CHECK(numprobe::is_leap_year(2000));
  CHECK(!numprobe::is_leap_year(1900));
  CHECK(numprobe::is_leap_year(2020));
  CHECK(!numprobe::is_leap_year(2019));
  CHECK(numprobe::days_in_month(2020, 2) == 29);
  CHECK(numprobe::days_in_month(2019, 2) == 28);
  CHECK(numprobe::days_in_month(2019, 4) == 30);
}

TEST_CASE("format patterns") {
  DateValue d;
  d.day = 3;
  d.month = 6;
  d.year = 1986;
  CHECK(format_date(d, Pattern::kDmyHyphen) == "03-06-1986");
  CHECK(format_date(d, Pattern::kDmySlash) == "03/06/1986");
  CHECK(format_date(d, Pattern::kIso) == "1986-06-03");
  CHECK(format_date(d, Pattern::kDayMonthYear) == "3 June 1986");
  CHECK(format_date(d, Pattern::kOrdinalDayMonthCommaYear) == "3rd June, 1986");
  CHECK(format_date(d, Pattern::kMonthDayCommaYear) == "June 3, 1986");

  DateValue my;
  my.month = 6;
  my.year = 1986;
  CHECK(format_date(my, Pattern::kMonthYear) == "June 1986");
  CHECK_THROWS_AS(format_date(my, Pattern::kDmyHyphen), numprobe::InvalidDate);

  DateValue y;
  y.year = 1986;
  CHECK(format_date(y, Pattern::kYearOnly) == "1986");
}

TEST_CASE("reformat candidates preserve fields") {
  DateValue d = parse_date("3rd June, 1986");
  auto pats = numprobe::renderable_date_patterns(d);
  CHECK(pats.front() == Pattern::kDmyHyphen);
  for (Pattern p : pats) {
    CHECK(parse_date(format_date(d, p)) == d);
  }
  DateValue my = parse_date("June 1986");
  CHECK(numprobe::renderable_date_patterns(my) ==
        std::vector<Pattern>{Pattern::kMonthYear});
}

TEST_CASE("parse format round trip under random dates") {
  numprobe::Rng rng(0xda7e5);
  for (int i = 0; i < 3000; ++i) {
    DateValue d;
    d.year = rng.between(1800, 2100);
    d.month = static_cast<int>(rng.between(1, 12));
    d.day = static_cast<int>(
        rng.between(1, numprobe::days_in_month(d.year, d.month)));
    for (Pattern p : numprobe::renderable_date_patterns(d)) {
      std::string s = format_date(d, p);
      DateValue back = parse_date(s);
      CHECK(back == d);
      CHECK(back.source_format.pattern == p);
      CHECK(format_date(back, p) == s);
    }
  }
}
