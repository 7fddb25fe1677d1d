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

#include "numprobe/scan.hpp"

#include "doctest.h"
#include "numprobe/numeric_value.hpp"

using numprobe::Mention;
using numprobe::MentionKind;
using numprobe::NumericValue;
using numprobe::Pattern;
using numprobe::UnitCatalog;

namespace {

const UnitCatalog& cat() {
  static UnitCatalog c = UnitCatalog::builtin();
  return c;
}

std::vector<Mention> scan(const std::string& text) {
  return numprobe::scan_mentions(text, cat());
}

NumericValue nv(const std::string& s) { return NumericValue::parse(s); }

}  // namespace

TEST_CASE("bare years and ages are cardinal digits") {
  auto ms = scan("Born in 1986, Nadal is age 37 currently.");
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].kind == MentionKind::kCardinalDigits);
  CHECK(ms[0].surface == "1986");
  CHECK(ms[0].value == nv("1986"));
  CHECK(ms[1].kind == MentionKind::kCardinalDigits);
  CHECK(ms[1].surface == "37");
  CHECK(ms[1].value == nv("37"));
}

TEST_CASE("empty text") {
  CHECK(scan("").empty());
  CHECK(scan("No numbers here at all.").empty());
}

TEST_CASE("negative amount with multiplier and currency code") {
  auto ms = scan("The company's monthly closing resulted in -5 million USD.");
  REQUIRE(ms.size() == 1);
  const Mention& m = ms[0];
  CHECK(m.kind == MentionKind::kNegativeNumber);
  CHECK(m.surface == "-5 million USD");
  CHECK(m.value == nv("-5000000"));
  CHECK(m.unit == "usd");
  CHECK(m.multiplier_pow10 == 6);
}

TEST_CASE("full dates beat ordinals") {
  auto ms = scan("The player's birth date is on 3rd June, 1986.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kDate);
  CHECK(ms[0].surface == "3rd June, 1986");
  CHECK(ms[0].date.day == 3);
  CHECK(ms[0].date.month == 6);
  CHECK(ms[0].date.year == 1986);
  CHECK(ms[0].format.pattern == Pattern::kOrdinalDayMonthCommaYear);

  ms = scan("Hulk was released on 20th June, 2003.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kDate);
  CHECK(ms[0].date.day == 20);

  ms = scan("The release date was June 20, 2003 in theaters.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kDate);
  CHECK(ms[0].surface == "June 20, 2003");

  ms = scan("It premiered in June 2003 worldwide.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kDate);
  CHECK(ms[0].surface == "June 2003");
  CHECK(!ms[0].date.has_day());
}

TEST_CASE("measured quantities") {
  auto ms = scan("The player has a height of 1.85 meters.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kMeasuredQuantity);
  CHECK(ms[0].surface == "1.85 meters");
  CHECK(ms[0].value == nv("1.85"));
  CHECK(ms[0].unit == "meter");
  CHECK(ms[0].num_end - ms[0].num_begin == 4);

  ms = scan("The movie lasted 138 minutes.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].unit == "minute");

  ms = scan("He is 1.85m tall.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kMeasuredQuantity);
  CHECK(ms[0].surface == "1.85m");
  CHECK(ms[0].unit == "meter");

  ms = scan("I watched it in about two hours.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kMeasuredQuantity);
  CHECK(ms[0].surface == "two hours");
  CHECK(ms[0].value == nv("2"));
  CHECK(ms[0].unit == "hour");
  CHECK(ms[0].format.pattern == Pattern::kCardinalWords);
}

TEST_CASE("currency symbol with grouped digits") {
  auto ms = scan("Nadal has won $116,111,561 prize money in his career.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kCurrency);
  CHECK(ms[0].surface == "$116,111,561");
  CHECK(ms[0].value == nv("116111561"));
  CHECK(ms[0].unit == "usd");
  CHECK(ms[0].format.pattern == Pattern::kCurrencySymbol);
  // The numeric sub-span excludes the symbol.
  CHECK(ms[0].num_begin == ms[0].begin + 1);

  ms = scan("It grossed $245.4 million worldwide.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].surface == "$245.4 million");
  CHECK(ms[0].value == nv("245400000"));
  CHECK(ms[0].multiplier_pow10 == 6);
}

TEST_CASE("percentages and scientific notation") {
  auto ms = scan("Support rose to 13.1% in May.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kPercentage);
  CHECK(ms[0].surface == "13.1%");
  CHECK(ms[0].value == nv("13.1"));

  ms = scan("Support rose to 35 percent overall.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kPercentage);
  CHECK(ms[0].format.pattern == Pattern::kPercentWord);

  ms = scan("The prize pool equals 116.111561e6 dollars.");
  REQUIRE(ms.size() == 1);
  // Currency amounts are plain numbers; an e-notation amount is scanned as
  // scientific notation (the currency pattern simply never fires on it).
  CHECK(ms[0].kind == MentionKind::kScientificNotation);
  CHECK(ms[0].value == nv("116111561"));

  ms = scan("The constant is 2.5e3 exactly.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kScientificNotation);
  CHECK(ms[0].value == nv("2500"));
}

TEST_CASE("ordinals in both surfaces") {
  auto ms = scan("He has the 3rd highest prize money.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kOrdinal);
  CHECK(ms[0].surface == "3rd");
  CHECK(ms[0].value == nv("3"));

  ms = scan("He has the third highest prize money.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kOrdinal);
  CHECK(ms[0].surface == "third");

  ms = scan("She finished twenty-first overall.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].value == nv("21"));
}

TEST_CASE("cardinal words") {
  auto ms = scan("Nadal is age thirty seven currently.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kCardinalWords);
  CHECK(ms[0].surface == "thirty seven");
  CHECK(ms[0].value == nv("37"));

  ms = scan("Born in nineteen eighty six, he turned pro early.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].surface == "nineteen eighty six");
  CHECK(ms[0].value == nv("1986"));

  ms = scan("They sold one hundred and forty-four units.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].surface == "one hundred and forty-four");
  CHECK(ms[0].value == nv("144"));
}

TEST_CASE("hyphens between digits are not minus signs") {
  auto ms = scan("The 2003-06 season was long.");
  REQUIRE(ms.size() >= 1);
  CHECK(ms[0].value == nv("2003"));
  for (const auto& m : ms) CHECK(m.value.sign() >= 0);

  ms = scan("It closed at -5 overall.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kNegativeNumber);
  CHECK(ms[0].value == nv("-5"));
}

TEST_CASE("times") {
  auto ms = scan("Kickoff is at 14:30 sharp.");
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MentionKind::kTime);
  CHECK(ms[0].value == nv("52200"));
}

TEST_CASE("left to right non-overlapping spans") {
  auto ms = scan("Between 1990 and 2003 he earned $5 million and 35% more.");
  REQUIRE(ms.size() == 4);
  CHECK(ms[0].value == nv("1990"));
  CHECK(ms[1].value == nv("2003"));
  CHECK(ms[2].value == nv("5000000"));
  CHECK(ms[3].value == nv("35"));
  for (size_t i = 1; i < ms.size(); ++i) {
    CHECK(ms[i - 1].end <= ms[i].begin);
  }
}
