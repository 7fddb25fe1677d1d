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

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "numprobe/errors.hpp"

namespace numprobe {
namespace {

const std::array<const char*, 10> kUnits = {"zero", "one", "two",   "three",
                                            "four", "five", "six",  "seven",
                                            "eight", "nine"};
const std::array<const char*, 10> kTeens = {
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
const std::array<const char*, 8> kTens = {"twenty", "thirty",  "forty",
                                          "fifty",  "sixty",   "seventy",
                                          "eighty", "ninety"};

struct Scale {
  const char* word;
  long long factor;
};
const std::array<Scale, 4> kScales = {Scale{"trillion", 1000000000000LL},
                                      Scale{"billion", 1000000000LL},
                                      Scale{"million", 1000000LL},
                                      Scale{"thousand", 1000LL}};

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> tokenize(const std::string& phrase) {
  std::string t = lower(phrase);
  for (char& c : t) {
    if (c == '-') c = ' ';
  }
  std::vector<std::string> toks;
  std::istringstream in(t);
  std::string w;
  while (in >> w) toks.push_back(w);
  return toks;
}

int unit_value(const std::string& w) {
  for (int i = 0; i < 10; ++i) {
    if (w == kUnits[i]) return i;
  }
  return -1;
}

int teen_value(const std::string& w) {
  for (int i = 0; i < 10; ++i) {
    if (w == kTeens[i]) return 10 + i;
  }
  return -1;
}

int tens_value(const std::string& w) {
  for (int i = 0; i < 8; ++i) {
    if (w == kTens[i]) return 20 + i * 10;
  }
  return -1;
}

long long scale_value(const std::string& w) {
  for (const Scale& s : kScales) {
    if (w == s.word) return s.factor;
  }
  return -1;
}

// Parser over a token slice. Grammar is strict on purpose: sequences like
// "nineteen eighty six" must fail here so the year-pair reading can claim
// them instead of being mis-summed.
struct Cursor {
  const std::vector<std::string>& toks;
  size_t i = 0;

  bool done() const { return i >= toks.size(); }
  const std::string& peek() const { return toks[i]; }
};

// teen | tens [unit] | unit(1..9). Returns -1 without consuming on no match.
int parse_two_digit(Cursor& c) {
  if (c.done()) return -1;
  int v = teen_value(c.peek());
  if (v >= 0) {
    ++c.i;
    return v;
  }
  v = tens_value(c.peek());
  if (v >= 0) {
    ++c.i;
    if (!c.done()) {
      int u = unit_value(c.peek());
      if (u >= 1) {
        ++c.i;
        v += u;
      }
    }
    return v;
  }
  v = unit_value(c.peek());
  if (v >= 1) {
    ++c.i;
    return v;
  }
  return -1;
}

// [two_digit] "hundred" [["and"] two_digit] | two_digit.
// "a hundred" counts as "one hundred". Teen multipliers are legal so that
// "nineteen hundred" reads as 1900.
long long parse_group(Cursor& c) {
  if (c.done()) return -1;
  long long small;
  if (c.peek() == "a" && c.i + 1 < c.toks.size() &&
      (c.toks[c.i + 1] == "hundred" || scale_value(c.toks[c.i + 1]) > 0)) {
    small = 1;
    ++c.i;
  } else {
    small = parse_two_digit(c);
    if (small < 0) return -1;
  }
  if (!c.done() && c.peek() == "hundred") {
    ++c.i;
    long long val = small * 100;
    size_t save = c.i;
    if (!c.done() && c.peek() == "and") ++c.i;
    int tail = parse_two_digit(c);
    if (tail >= 0) {
      val += tail;
    } else {
      c.i = save;
    }
    return val;
  }
  return small;
}

// Full strict cardinal: groups joined by strictly decreasing scale words.
long long parse_strict(const std::vector<std::string>& toks) {
  if (toks.size() == 1 && toks[0] == "zero") return 0;
  Cursor c{toks};
  long long total = 0;
  long long last_scale = -1;  // -1 = unbounded
  while (true) {
    long long g = parse_group(c);
    if (g < 0) return -1;
    if (c.done()) return total + g;
    long long s = scale_value(c.peek());
    if (s < 0) return -1;
    if (last_scale > 0 && s >= last_scale) return -1;
    ++c.i;
    total += g * s;
    last_scale = s;
    if (c.done()) return total;
    if (c.peek() == "and") {
      ++c.i;
      if (c.done()) return -1;
    }
  }
}

// "nineteen eighty six" -> 1986; "nineteen oh four" -> 1904;
// "twenty twenty" -> 2020. Both halves read as spoken year components.
long long parse_year_pair(const std::vector<std::string>& toks) {
  for (size_t split = 1; split < toks.size(); ++split) {
    std::vector<std::string> head(toks.begin(), toks.begin() + split);
    Cursor hc{head};
    int hi = parse_two_digit(hc);
    if (hi < 10 || !hc.done()) continue;
    std::vector<std::string> tail(toks.begin() + split, toks.end());
    long long lo = -1;
    if (tail.size() == 2 && (tail[0] == "oh" || tail[0] == "o")) {
      int u = unit_value(tail[1]);
      if (u >= 1) lo = u;
    } else {
      Cursor tc{tail};
      int t = parse_two_digit(tc);
      if (t >= 10 && tc.done()) lo = t;
    }
    if (lo >= 0) return static_cast<long long>(hi) * 100 + lo;
  }
  return -1;
}

std::string two_digit_words(int v, const WordStyle& style) {
  if (v < 10) return kUnits[v];
  if (v < 20) return kTeens[v - 10];
  std::string out = kTens[v / 10 - 2];
  if (v % 10) {
    out += style.hyphenate ? "-" : " ";
    out += kUnits[v % 10];
  }
  return out;
}

std::string group_words(int g, const WordStyle& style) {
  std::string out;
  if (g >= 100) {
    out = std::string(kUnits[g / 100]) + " hundred";
    g %= 100;
    if (g) {
      out += style.use_and ? " and " : " ";
      out += two_digit_words(g, style);
    }
    return out;
  }
  return two_digit_words(g, style);
}

std::string integer_words(long long v, const WordStyle& style) {
  if (v == 0) return "zero";
  if (style.year_pair && v >= 1010 && v <= 9999 && v % 100 >= 10) {
    return two_digit_words(static_cast<int>(v / 100), style) + " " +
           two_digit_words(static_cast<int>(v % 100), style);
  }
  std::string out;
  bool higher = false;
  for (const Scale& s : kScales) {
    if (v >= s.factor) {
      long long g = v / s.factor;
      v %= s.factor;
      if (!out.empty()) out += " ";
      // Group multipliers up to 999; the <10^15 cap keeps this in range.
      out += group_words(static_cast<int>(g), style);
      out += " ";
      out += s.word;
      higher = true;
    }
  }
  if (v > 0) {
    if (!out.empty()) out += " ";
    if (style.use_and && higher && v < 100) out += "and ";
    out += group_words(static_cast<int>(v), style);
  }
  return out;
}

const std::map<std::string, std::string>& ordinal_irregulars() {
  static const std::map<std::string, std::string> m = {
      {"one", "first"},   {"two", "second"}, {"three", "third"},
      {"five", "fifth"},  {"eight", "eighth"}, {"nine", "ninth"},
      {"twelve", "twelfth"}};
  return m;
}

std::string ordinalize_word(const std::string& w) {
  auto it = ordinal_irregulars().find(w);
  if (it != ordinal_irregulars().end()) return it->second;
  if (!w.empty() && w.back() == 'y') return w.substr(0, w.size() - 1) + "ieth";
  return w + "th";
}

// Inverse of ordinalize_word; empty result means "not an ordinal form".
std::string deordinalize_word(const std::string& w) {
  for (const auto& [card, ord] : ordinal_irregulars()) {
    if (w == ord) return card;
  }
  if (w.size() > 4 && w.compare(w.size() - 4, 4, "ieth") == 0) {
    return w.substr(0, w.size() - 4) + "y";
  }
  if (w.size() > 2 && w.compare(w.size() - 2, 2, "th") == 0) {
    return w.substr(0, w.size() - 2);
  }
  return "";
}

}  // namespace

NumericValue words_to_numeral(const std::string& words) {
  auto v = try_words_to_numeral(words);
  if (!v) throw NotANumberPhrase("not a number phrase: \"" + words + "\"");
  return *v;
}

std::optional<NumericValue> try_words_to_numeral(const std::string& words) {
  std::vector<std::string> toks = tokenize(words);
  if (toks.empty()) return std::nullopt;
  bool neg = false;
  if (toks.front() == "minus" || toks.front() == "negative") {
    neg = true;
    toks.erase(toks.begin());
    if (toks.empty()) return std::nullopt;
  }
  // Split at "point" for spoken decimals.
  std::string frac;
  auto pt = std::find(toks.begin(), toks.end(), std::string("point"));
  bool has_frac = pt != toks.end();
  if (has_frac) {
    for (auto it = pt + 1; it != toks.end(); ++it) {
      int d = (*it == "oh" || *it == "o") ? 0 : unit_value(*it);
      if (d < 0) return std::nullopt;
      frac += static_cast<char>('0' + d);
    }
    if (frac.empty()) return std::nullopt;
    toks.erase(pt, toks.end());
    if (toks.empty()) return std::nullopt;
  }
  long long ip = parse_strict(toks);
  if (ip < 0 && !neg && !has_frac) ip = parse_year_pair(toks);
  if (ip < 0) return std::nullopt;
  std::string text = (neg ? "-" : "") + std::to_string(ip);
  if (has_frac) text += "." + frac;
  return NumericValue::parse(text);
}

std::string numeral_to_words(const NumericValue& value,
                             const WordStyle& style) {
  std::string s = value.to_string();
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.erase(0, 1);
  }
  std::string ipart = s;
  std::string fpart;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    ipart = s.substr(0, dot);
    fpart = s.substr(dot + 1);
  }
  if (ipart.size() > 15) {
    throw OutOfRange("word rendering capped below 10^15, got " + s);
  }
  WordStyle istyle = style;
  if (neg || !fpart.empty()) istyle.year_pair = false;
  std::string out = integer_words(std::stoll(ipart), istyle);
  if (!fpart.empty()) {
    out += " point";
    for (char d : fpart) {
      out += " ";
      out += kUnits[d - '0'];
    }
  }
  if (neg) out = "minus " + out;
  return out;
}

long long parse_ordinal_word(const std::string& word) {
  auto v = try_parse_ordinal_word(word);
  if (!v) throw NotAnOrdinal("not an ordinal word: \"" + word + "\"");
  return *v;
}

std::optional<long long> try_parse_ordinal_word(const std::string& word) {
  std::vector<std::string> toks = tokenize(word);
  if (toks.empty()) return std::nullopt;
  std::string base = deordinalize_word(toks.back());
  if (base.empty()) return std::nullopt;
  // "hundredth"/"thousandth"/"millionth" on their own imply multiplier one.
  if (base == "hundred" || scale_value(base) > 0) {
    if (toks.size() == 1) toks.insert(toks.begin(), "one");
  }
  toks.back() = base;
  std::string joined;
  for (const std::string& t : toks) {
    if (!joined.empty()) joined += " ";
    joined += t;
  }
  long long v = parse_strict(tokenize(joined));
  if (v < 1) return std::nullopt;
  return v;
}

long long parse_ordinal_suffix(const std::string& text) {
  std::string digits;
  size_t i = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' && !digits.empty()) {
      continue;
    } else {
      break;
    }
  }
  std::string suffix = lower(text.substr(i));
  if (digits.empty() || digits.size() > 15 || suffix.size() != 2) {
    throw NotAnOrdinal("not an ordinal: \"" + text + "\"");
  }
  long long v = std::stoll(digits);
  if (v < 1 || format_ordinal_suffix(v) != digits + suffix) {
    throw NotAnOrdinal("bad ordinal suffix: \"" + text + "\"");
  }
  return v;
}

std::string format_ordinal_suffix(long long rank) {
  if (rank < 1) throw OutOfRange("ordinal rank must be positive");
  long long mod100 = rank % 100;
  long long mod10 = rank % 10;
  const char* suf = "th";
  if (mod100 < 11 || mod100 > 13) {
    if (mod10 == 1) suf = "st";
    else if (mod10 == 2) suf = "nd";
    else if (mod10 == 3) suf = "rd";
  }
  return std::to_string(rank) + suf;
}

std::string format_ordinal_word(long long rank, bool hyphenate) {
  if (rank < 1) throw OutOfRange("ordinal rank must be positive");
  WordStyle style;
  style.hyphenate = hyphenate;
  style.year_pair = false;
  std::string words = numeral_to_words(NumericValue::parse(std::to_string(rank)),
                                       style);
  // Ordinalize the final segment only: "twenty-one" -> "twenty-first".
  size_t cut = words.find_last_of(" -");
  std::string head = cut == std::string::npos ? "" : words.substr(0, cut + 1);
  std::string last = cut == std::string::npos ? words : words.substr(cut + 1);
  return head + ordinalize_word(last);
}

bool is_number_word(const std::string& lower_token) {
  const std::string& w = lower_token;
  return unit_value(w) >= 0 || teen_value(w) >= 0 || tens_value(w) >= 0 ||
         scale_value(w) > 0 || w == "hundred";
}

}  // namespace numprobe
