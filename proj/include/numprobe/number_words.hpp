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

#ifndef NUMPROBE_NUMBER_WORDS_HPP_
#define NUMPROBE_NUMBER_WORDS_HPP_

#include <optional>
#include <string>

#include "numprobe/numeric_value.hpp"

namespace numprobe {

// Rendering knobs for cardinal words. The default is the dictionary style
// ("one hundred and forty-four"); probe text uses the looser spoken style
// with year pairs and no hyphens ("nineteen eighty six", "thirty seven").
struct WordStyle {
  bool hyphenate = true;   // forty-four vs forty four
  bool use_and = true;     // one hundred and five vs one hundred five
  bool year_pair = false;  // 1986 -> nineteen eighty six when it reads cleanly
};

inline WordStyle spoken_style() { return WordStyle{false, true, true}; }

// "thirty seven" -> 37; "nineteen eighty six" -> 1986 (year-pair reading);
// "three point one four" -> 3.14; "minus five" -> -5.
// Throws NotANumberPhrase.
NumericValue words_to_numeral(const std::string& words);

// Inverse rendering; |value| must be < 10^15 (OutOfRange otherwise).
std::string numeral_to_words(const NumericValue& value,
                             const WordStyle& style = WordStyle{});

// Ordinals. parse_ordinal_word("third") == 3; parse_ordinal_suffix("3rd") == 3.
// format_ordinal_suffix(3) == "3rd"; format_ordinal_word(3) == "third".
// Parse errors throw NotAnOrdinal.
long long parse_ordinal_word(const std::string& word);
long long parse_ordinal_suffix(const std::string& text);
std::string format_ordinal_suffix(long long rank);
std::string format_ordinal_word(long long rank, bool hyphenate = true);

// Non-throwing helpers used by the mention scanner.
std::optional<NumericValue> try_words_to_numeral(const std::string& words);
std::optional<long long> try_parse_ordinal_word(const std::string& word);
bool is_number_word(const std::string& lower_token);

}  // namespace numprobe

#endif  // NUMPROBE_NUMBER_WORDS_HPP_
