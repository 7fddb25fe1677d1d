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

#include "numprobe/numformat.hpp"

#include <cctype>

#include "numprobe/errors.hpp"

namespace numprobe {
namespace {

bool scientific_shape(const std::string& s) {
  size_t i = 0;
  auto digits = [&](bool allow_dot) {
    size_t start = i;
    bool saw_digit = false, saw_dot = false;
    while (i < s.size()) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        saw_digit = true;
        ++i;
      } else if (c == '.' && allow_dot && !saw_dot) {
        saw_dot = true;
        ++i;
      } else {
        break;
      }
    }
    return saw_digit && i > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(true)) return false;
  if (i >= s.size() || (s[i] != 'e' && s[i] != 'E')) return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(false)) return false;
  return i == s.size();
}

}  // namespace

NumericValue parse_scientific(const std::string& surface) {
  if (!scientific_shape(surface)) {
    throw NotScientific("not e-notation: \"" + surface + "\"");
  }
  return NumericValue::parse(surface);
}

std::string format_scientific(const NumericValue& v) {
  if (v.is_zero()) return "0e0";
  int m = v.magnitude_order();
  // Floor division toward -inf so 0.5 normalizes to 500e-3, not 0.5e0.
  int exp = (m >= 0 ? m / 3 : -((-m + 2) / 3)) * 3;
  return v.shifted(-exp).to_string() + "e" + std::to_string(exp);
}

NumericValue parse_percentage(const std::string& surface) {
  std::string num = surface;
  auto strip_tail = [&](const std::string& tail) {
    if (num.size() > tail.size() &&
        num.compare(num.size() - tail.size(), tail.size(), tail) == 0) {
      num.erase(num.size() - tail.size());
      return true;
    }
    return false;
  };
  bool matched = strip_tail("%") || strip_tail(" percent") ||
                 strip_tail(" per cent") || strip_tail(" percentages");
  if (!matched) throw NotAPercentage("no percent marker: \"" + surface + "\"");
  while (!num.empty() && num.back() == ' ') num.pop_back();
  try {
    return NumericValue::parse(num);
  } catch (const Error&) {
    throw NotAPercentage("bad percentage number: \"" + surface + "\"");
  }
}

std::string render_percentage_sign(const NumericValue& v) {
  return v.to_string() + "%";
}

std::string render_percentage_word(const NumericValue& v) {
  return v.to_string() + " percent";
}

NumericValue round_magnitude(const NumericValue& v) {
  if (v.is_zero()) return v;
  int m = v.magnitude_order();
  int granularity_exp;
  if (m < 3) {
    granularity_exp = 1;
  } else if (m < 5) {
    granularity_exp = 2;
  } else if (m < 7) {
    granularity_exp = 3;
  } else {
    granularity_exp = m - 2;  // keep 3 significant digits
  }
  return v.round_to_multiple_of(NumericValue::parse("1").shifted(granularity_exp));
}

}  // namespace numprobe
