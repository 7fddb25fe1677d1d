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

#include "numprobe/number_words.hpp"

#include "doctest.h"
#include "numprobe/errors.hpp"
#include "numprobe/numeric_value.hpp"
#include "numprobe/rng.hpp"

using numprobe::NumericValue;
using numprobe::numeral_to_words;
using numprobe::words_to_numeral;
using numprobe::WordStyle;

namespace {
NumericValue nv(const std::string& s) { return NumericValue::parse(s); }
}  // namespace

TEST_CASE("words to numeral") {
  CHECK(words_to_numeral("thirty seven") == nv("37"));
  CHECK(words_to_numeral("thirty-seven") == nv("37"));
  CHECK(words_to_numeral("zero") == nv("0"));
  CHECK(words_to_numeral("nineteen eighty six") == nv("1986"));
  CHECK(words_to_numeral("twenty twenty") == nv("2020"));
  CHECK(words_to_numeral("nineteen oh four") == nv("1904"));
  CHECK(words_to_numeral("one hundred and forty-four") == nv("144"));
  CHECK(words_to_numeral("one hundred forty four") == nv("144"));
  CHECK(words_to_numeral("nineteen hundred") == nv("1900"));
  CHECK(words_to_numeral("two thousand and five") == nv("2005"));
  CHECK(words_to_numeral("five million") == nv("5000000"));
  CHECK(words_to_numeral("minus five") == nv("-5"));
  CHECK(words_to_numeral("three point one four") == nv("3.14"));
  CHECK(words_to_numeral("a hundred") == nv("100"));
  CHECK(words_to_numeral("one million two hundred thirty-four thousand five "
                         "hundred and sixty-seven") == nv("1234567"));
  CHECK_THROWS_AS(words_to_numeral("banana"), numprobe::NotANumberPhrase);
  CHECK_THROWS_AS(words_to_numeral(""), numprobe::NotANumberPhrase);
  // Strict grammar: a teen cannot be glued to a tens word outside the
  // year-pair reading, and the year-pair reading rejects a minus sign.
  CHECK_THROWS_AS(words_to_numeral("minus nineteen eighty six"),
                  numprobe::NotANumberPhrase);
}

TEST_CASE("numeral to words, dictionary style") {
  CHECK(numeral_to_words(nv("2")) == "two");
  CHECK(numeral_to_words(nv("0")) == "zero");
  CHECK(numeral_to_words(nv("144")) == "one hundred and forty-four");
  CHECK(numeral_to_words(nv("37")) == "thirty-seven");
  CHECK(numeral_to_words(nv("1986")) ==
        "one thousand nine hundred and eighty-six");
  CHECK(numeral_to_words(nv("2005")) == "two thousand and five");
  CHECK(numeral_to_words(nv("5000000")) == "five million");
  CHECK(numeral_to_words(nv("-5")) == "minus five");
  CHECK(numeral_to_words(nv("3.14")) == "three point one four");
  CHECK_THROWS_AS(numeral_to_words(nv("1e15")), numprobe::OutOfRange);
}

TEST_CASE("numeral to words, spoken style") {
  WordStyle spoken = numprobe::spoken_style();
  CHECK(numeral_to_words(nv("37"), spoken) == "thirty seven");
  CHECK(numeral_to_words(nv("1986"), spoken) == "nineteen eighty six");
  CHECK(numeral_to_words(nv("2020"), spoken) == "twenty twenty");
  // No clean year pair: falls back to the full reading.
  CHECK(numeral_to_words(nv("1904"), spoken) ==
        "one thousand nine hundred and four");
  CHECK(numeral_to_words(nv("2003"), spoken) == "two thousand and three");
}

TEST_CASE("ordinals") {
  CHECK(numprobe::parse_ordinal_word("third") == 3);
  CHECK(numprobe::parse_ordinal_word("first") == 1);
  CHECK(numprobe::parse_ordinal_word("twelfth") == 12);
  CHECK(numprobe::parse_ordinal_word("twentieth") == 20);
  CHECK(numprobe::parse_ordinal_word("twenty-first") == 21);
  CHECK(numprobe::parse_ordinal_word("thirty-seventh") == 37);
  CHECK(numprobe::parse_ordinal_word("hundredth") == 100);
  CHECK_THROWS_AS(numprobe::parse_ordinal_word("three"),
                  numprobe::NotAnOrdinal);
  CHECK_THROWS_AS(numprobe::parse_ordinal_word("月"), numprobe::NotAnOrdinal);

  CHECK(numprobe::format_ordinal_word(3) == "third");
  CHECK(numprobe::format_ordinal_word(1) == "first");
  CHECK(numprobe::format_ordinal_word(21) == "twenty-first");
  CHECK(numprobe::format_ordinal_word(12) == "twelfth");
  CHECK(numprobe::format_ordinal_word(20) == "twentieth");

  CHECK(numprobe::parse_ordinal_suffix("3rd") == 3);
  CHECK(numprobe::parse_ordinal_suffix("1st") == 1);
  CHECK(numprobe::parse_ordinal_suffix("11th") == 11);
  CHECK(numprobe::parse_ordinal_suffix("112th") == 112);
  CHECK_THROWS_AS(numprobe::parse_ordinal_suffix("2rd"),
                  numprobe::NotAnOrdinal);
  CHECK_THROWS_AS(numprobe::parse_ordinal_suffix("11st"),
                  numprobe::NotAnOrdinal);

  CHECK(numprobe::format_ordinal_suffix(3) == "3rd");
  CHECK(numprobe::format_ordinal_suffix(1) == "1st");
  CHECK(numprobe::format_ordinal_suffix(2) == "2nd");
  CHECK(numprobe::format_ordinal_suffix(11) == "11th");
  CHECK(numprobe::format_ordinal_suffix(12) == "12th");
  CHECK(numprobe::format_ordinal_suffix(13) == "13th");
  CHECK(numprobe::format_ordinal_suffix(21) == "21st");
  CHECK(numprobe::format_ordinal_suffix(112) == "112th");
}

TEST_CASE("round trips under random values") {
  numprobe::Rng rng(0x77);
  for (int i = 0; i < 3000; ++i) {
    long long raw = rng.between(-999999999999999LL, 999999999999999LL);
    NumericValue v = nv(std::to_string(raw));
    CHECK(words_to_numeral(numeral_to_words(v)) == v);
    WordStyle spoken = numprobe::spoken_style();
    CHECK(words_to_numeral(numeral_to_words(v, spoken)) == v);
  }
  for (int i = 0; i < 2000; ++i) {
    long long rank = rng.between(1, 999999);
    CHECK(numprobe::parse_ordinal_word(numprobe::format_ordinal_word(rank)) ==
          rank);
    CHECK(numprobe::parse_ordinal_suffix(
              numprobe::format_ordinal_suffix(rank)) == rank);
  }
}
