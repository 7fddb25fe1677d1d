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

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>

#include "numprobe/errors.hpp"
#include "numprobe/number_words.hpp"

namespace numprobe {
namespace {

const std::array<const char*, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

int month_from_token(const std::string& tok) {
  std::string t = tok;
  while (!t.empty() && (t.back() == '.' || t.back() == ',')) t.pop_back();
  std::string lo = t;
  std::transform(lo.begin(), lo.end(), lo.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (int i = 0; i < 12; ++i) {
    std::string full = kMonths[i];
    std::transform(full.begin(), full.end(), full.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lo == full || (lo.size() == 3 && full.compare(0, 3, lo) == 0)) {
      return i + 1;
    }
  }
  return 0;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "20" -> 20, "20th" -> 20 (with was_ordinal set). -1 on no match.
int day_token(const std::string& tok, bool* was_ordinal) {
  if (all_digits(tok) && tok.size() <= 2) {
    *was_ordinal = false;
    return std::stoi(tok);
  }
  if (tok.size() >= 3 && tok.size() <= 4) {
    std::string digits = tok.substr(0, tok.size() - 2);
    std::string suf = tok.substr(tok.size() - 2);
    if (all_digits(digits) &&
        (suf == "st" || suf == "nd" || suf == "rd" || suf == "th")) {
      *was_ordinal = true;
      return std::stoi(digits);
    }
  }
  return -1;
}

DateValue checked(int day, int month, long long year, Pattern pattern) {
  if (year < 1 || year > 9999) throw InvalidDate("year out of range");
  if (month < 0 || month > 12) throw InvalidDate("month out of range");
  if (day != 0) {
    if (month == 0) throw InvalidDate("day without month");
    if (day < 1 || day > days_in_month(year, month)) {
      throw InvalidDate("day " + std::to_string(day) + " invalid for month " +
                        std::to_string(month));
    }
  }
  DateValue d;
  d.day = day;
  d.month = month;
  d.year = year;
  d.source_format.pattern = pattern;
  return d;
}

std::string pad2(int v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d", v);
  return buf;
}

std::string pad4(long long v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04lld", v);
  return buf;
}

}  // namespace

const char* month_name(int month) {
  if (month < 1 || month > 12) throw InvalidDate("month out of range");
  return kMonths[month - 1];
}

bool is_leap_year(long long year) {
  return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int days_in_month(long long year, int month) {
  static const int kLen[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) throw InvalidDate("month out of range");
  if (month == 2 && is_leap_year(year)) return 29;
  return kLen[month - 1];
}

DateValue parse_date(const std::string& surface) {
  // Numeric separators first. ISO wants a 4-digit lead; DMY a 4-digit tail.
  for (char sep : {'-', '/'}) {
    size_t p1 = surface.find(sep);
    if (p1 == std::string::npos) continue;
    size_t p2 = surface.find(sep, p1 + 1);
    if (p2 == std::string::npos || surface.find(sep, p2 + 1) != std::string::npos)
      continue;
    std::string a = surface.substr(0, p1);
    std::string b = surface.substr(p1 + 1, p2 - p1 - 1);
    std::string c = surface.substr(p2 + 1);
    if (!all_digits(a) || !all_digits(b) || !all_digits(c)) continue;
    if (sep == '-' && a.size() == 4 && b.size() == 2 && c.size() == 2) {
      if (std::stoi(c) == 0) throw InvalidDate("day 00 in \"" + surface + "\"");
      return checked(std::stoi(c), std::stoi(b), std::stoll(a), Pattern::kIso);
    }
    if (a.size() <= 2 && b.size() <= 2 && c.size() == 4) {
      if (std::stoi(a) == 0) throw InvalidDate("day 00 in \"" + surface + "\"");
      return checked(std::stoi(a), std::stoi(b), std::stoll(c),
                     sep == '-' ? Pattern::kDmyHyphen : Pattern::kDmySlash);
    }
  }

  std::vector<std::string> toks = split_ws(surface);
  if (toks.size() >= 2 && toks.size() <= 3) {
    // Day-first textual: "3rd June, 1986", "3 June 1986".
    bool ord = false;
    int d = day_token(toks[0], &ord);
    if (toks.size() == 3 && d > 0) {
      int m = month_from_token(toks[1]);
      std::string y = toks[2];
      if (m > 0 && all_digits(y) && y.size() == 4) {
        return checked(d, m, std::stoll(y),
                       ord ? Pattern::kOrdinalDayMonthCommaYear
                           : Pattern::kDayMonthYear);
      }
    }
    // Month-first textual: "June 20, 2003", "June 1986".
    int m = month_from_token(toks[0]);
    if (m > 0) {
      if (toks.size() == 3) {
        std::string daytok = toks[1];
        if (!daytok.empty() && daytok.back() == ',') daytok.pop_back();
        bool dord = false;
        int dd = day_token(daytok, &dord);
        std::string y = toks[2];
        if (dd > 0 && all_digits(y) && y.size() == 4) {
          return checked(dd, m, std::stoll(y), Pattern::kMonthDayCommaYear);
        }
      } else {
        std::string y = toks[1];
        if (all_digits(y) && y.size() == 4) {
          return checked(0, m, std::stoll(y), Pattern::kMonthYear);
        }
      }
    }
  }

  if (all_digits(surface) && surface.size() == 4) {
    return checked(0, 0, std::stoll(surface), Pattern::kYearOnly);
  }
  throw InvalidDate("unrecognized date surface: \"" + surface + "\"");
}

std::optional<DateValue> try_parse_date(const std::string& surface) {
  try {
    return parse_date(surface);
  } catch (const InvalidDate&) {
    return std::nullopt;
  }
}

std::string format_date(const DateValue& d, Pattern pattern) {
  auto need_day = [&] {
    if (!d.has_day()) throw InvalidDate("pattern requires a day");
  };
  auto need_month = [&] {
    if (!d.has_month()) throw InvalidDate("pattern requires a month");
  };
  switch (pattern) {
    case Pattern::kDmyHyphen:
      need_day();
      return pad2(d.day) + "-" + pad2(d.month) + "-" + pad4(d.year);
    case Pattern::kDmySlash:
      need_day();
      return pad2(d.day) + "/" + pad2(d.month) + "/" + pad4(d.year);
    case Pattern::kIso:
      need_day();
      return pad4(d.year) + "-" + pad2(d.month) + "-" + pad2(d.day);
    case Pattern::kDayMonthYear:
      need_day();
      return std::to_string(d.day) + " " + month_name(d.month) + " " +
             std::to_string(d.year);
    case Pattern::kOrdinalDayMonthCommaYear:
      need_day();
      return format_ordinal_suffix(d.day) + " " + month_name(d.month) + ", " +
             std::to_string(d.year);
    case Pattern::kMonthDayCommaYear:
      need_day();
      return std::string(month_name(d.month)) + " " + std::to_string(d.day) +
             ", " + std::to_string(d.year);
    case Pattern::kMonthYear:
      need_month();
      return std::string(month_name(d.month)) + " " + std::to_string(d.year);
    case Pattern::kYearOnly:
      return std::to_string(d.year);
    default:
      throw InvalidDate("not a date pattern");
  }
}

std::vector<Pattern> renderable_date_patterns(const DateValue& d) {
  // Only information-preserving patterns: a reformat must keep every field.
  if (d.has_day()) {
    return {Pattern::kDmyHyphen,          Pattern::kDayMonthYear,
            Pattern::kMonthDayCommaYear,  Pattern::kOrdinalDayMonthCommaYear,
            Pattern::kIso,                Pattern::kDmySlash};
  }
  if (d.has_month()) return {Pattern::kMonthYear};
  return {Pattern::kYearOnly};
}

}  // namespace numprobe
