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

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>

#include "numprobe/errors.hpp"
#include "numprobe/number_words.hpp"
#include "numprobe/numformat.hpp"

namespace numprobe {
namespace {

constexpr std::array<std::pair<MentionKind, const char*>, 10> kKindNames = {{
    {MentionKind::kCardinalDigits, "cardinal-digits"},
    {MentionKind::kCardinalWords, "cardinal-words"},
    {MentionKind::kOrdinal, "ordinal"},
    {MentionKind::kDate, "date"},
    {MentionKind::kTime, "time"},
    {MentionKind::kPercentage, "percentage"},
    {MentionKind::kCurrency, "currency"},
    {MentionKind::kScientificNotation, "scientific-notation"},
    {MentionKind::kNegativeNumber, "negative-number"},
    {MentionKind::kMeasuredQuantity, "measured-quantity"},
}};

bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u < 0x80 && std::isalnum(u)) || c == '_';
}

bool is_digit(char c) {
  return c >= '0' && c <= '9';
}

bool is_alpha(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalpha(u);
}

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

struct MultWord {
  const char* word;
  int pow10;
};
constexpr std::array<MultWord, 4> kMultipliers = {MultWord{"thousand", 3},
                                                  MultWord{"million", 6},
                                                  MultWord{"billion", 9},
                                                  MultWord{"trillion", 12}};

struct DigitsMatch {
  bool valid = false;
  size_t num_end = 0;   // sign + digits + fraction
  size_t full_end = 0;  // including a word multiplier
  NumericValue value;
  bool grouped = false;
  bool negative = false;
  int mult_pow10 = 0;
};

struct WordsMatch {
  bool valid = false;
  size_t end = 0;
  NumericValue value;
};

struct TokenSpan {
  size_t begin = 0, end = 0;
  std::string text;
};

// Pre-indexed catalog aliases, longest first so longest-match is a plain
// linear probe.
struct AliasIndex {
  std::vector<std::pair<std::string, const UnitEntry*>> measured;
  std::vector<std::pair<std::string, const UnitEntry*>> currency_words;
  std::vector<std::pair<std::string, const UnitEntry*>> currency_symbols;
};

class Scanner {
 public:
  Scanner(const std::string& text, const UnitCatalog& catalog)
      : text_(text), n_(text.size()) {
    for (const UnitEntry& e : catalog.entries()) {
      bool is_currency = e.family.rfind("currency-", 0) == 0;
      for (const std::string& a : e.aliases) {
        if (is_currency) {
          if (is_alpha(a[0])) {
            idx_.currency_words.emplace_back(a, &e);
          } else {
            idx_.currency_symbols.emplace_back(a, &e);
          }
        } else {
          idx_.measured.emplace_back(a, &e);
        }
      }
    }
    auto longer = [](const auto& a, const auto& b) {
      return a.first.size() > b.first.size();
    };
    std::stable_sort(idx_.measured.begin(), idx_.measured.end(), longer);
    std::stable_sort(idx_.currency_words.begin(), idx_.currency_words.end(),
                     longer);
    std::stable_sort(idx_.currency_symbols.begin(), idx_.currency_symbols.end(),
                     longer);
  }

  std::vector<Mention> run() {
    std::vector<Mention> out;
    size_t i = 0;
    while (i < n_) {
      bool boundary = i == 0 || !is_word_char(text_[i - 1]);
      if (!boundary) {
        ++i;
        continue;
      }
      std::optional<Mention> m;
      (m = try_date(i)) || (m = try_time(i)) || (m = try_currency(i)) ||
          (m = try_percentage(i)) || (m = try_scientific(i)) ||
          (m = try_measured(i)) || (m = try_ordinal(i)) ||
          (m = try_cardinal_digits(i)) || (m = try_cardinal_words(i));
      if (m) {
        m->surface = text_.substr(m->begin, m->end - m->begin);
        // Sign decides the reported kind for all plainly numeric shapes.
        if (m->kind != MentionKind::kDate && m->kind != MentionKind::kTime &&
            m->kind != MentionKind::kOrdinal && m->value.sign() < 0) {
          m->kind = MentionKind::kNegativeNumber;
        }
        out.push_back(std::move(*m));
        i = out.back().end;
      } else {
        ++i;
      }
    }
    return out;
  }

 private:
  char at(size_t p) const { return p < n_ ? text_[p] : '\0'; }
  bool word_at(size_t p) const { return p < n_ && is_word_char(text_[p]); }

  bool matches_at(size_t p, const std::string& s) const {
    return text_.compare(p, s.size(), s) == 0;
  }

  // [A-Za-z0-9]+ with internal hyphens between letters ("twenty-first").
  TokenSpan word_token(size_t p) const {
    TokenSpan t;
    t.begin = p;
    size_t j = p;
    while (j < n_) {
      if (is_word_char(text_[j])) {
        ++j;
      } else if (text_[j] == '-' && j > p && is_alpha(text_[j - 1]) &&
                 j + 1 < n_ && is_alpha(text_[j + 1])) {
        ++j;
      } else {
        break;
      }
    }
    t.end = j;
    t.text = text_.substr(p, j - p);
    return t;
  }

  DigitsMatch match_digits(size_t i, bool allow_sign, bool allow_mult) const {
    DigitsMatch r;
    size_t j = i;
    bool neg = false;
    if (at(j) == '-') {
      // Minus only at start/after whitespace and directly before a digit;
      // hyphens inside dates and ranges never reach here with that shape.
      if (!allow_sign) return r;
      if (!(i == 0 || text_[i - 1] == ' ' || text_[i - 1] == '(')) return r;
      if (!is_digit(at(j + 1))) return r;
      neg = true;
      ++j;
    }
    if (!is_digit(at(j))) return r;
    size_t d0 = j;
    while (is_digit(at(j))) ++j;
    size_t head_len = j - d0;
    bool grouped = false;
    if (head_len <= 3 && at(j) == ',') {
      size_t k = j;
      while (at(k) == ',' && is_digit(at(k + 1)) && is_digit(at(k + 2)) &&
             is_digit(at(k + 3)) && !is_digit(at(k + 4))) {
        k += 4;
        grouped = true;
      }
      if (grouped) j = k;
    }
    std::string digits;
    for (size_t p = d0; p < j; ++p) {
      if (text_[p] != ',') digits += text_[p];
    }
    if (at(j) == '.' && is_digit(at(j + 1))) {
      digits += '.';
      ++j;
      while (is_digit(at(j))) {
        digits += text_[j];
        ++j;
      }
    }
    r.num_end = j;
    r.full_end = j;
    r.value = NumericValue::parse((neg ? "-" : "") + digits);
    r.grouped = grouped;
    r.negative = neg;
    if (allow_mult && at(j) == ' ') {
      for (const MultWord& mw : kMultipliers) {
        std::string w = mw.word;
        if (matches_at(j + 1, w) && !word_at(j + 1 + w.size())) {
          r.full_end = j + 1 + w.size();
          r.value = r.value.shifted(mw.pow10);
          r.mult_pow10 = mw.pow10;
          break;
        }
      }
    }
    r.valid = true;
    return r;
  }

  WordsMatch match_words(size_t i) const {
    WordsMatch r;
    if (!is_alpha(at(i))) return r;
    std::vector<TokenSpan> toks;
    size_t p = i;
    while (toks.size() < 12) {
      TokenSpan t = word_token(p);
      if (t.end == t.begin) break;
      std::string lo = lower(t.text);
      // Hyphenated tokens are number phrases iff every segment is.
      bool core = true;
      size_t seg = 0;
      while (seg <= lo.size()) {
        size_t dash = lo.find('-', seg);
        size_t len = (dash == std::string::npos ? lo.size() : dash) - seg;
        if (!is_number_word(lo.substr(seg, len))) {
          core = false;
          break;
        }
        if (dash == std::string::npos) break;
        seg = dash + 1;
      }
      bool connector = lo == "and" || lo == "point" || lo == "oh";
      bool sign = toks.empty() && (lo == "minus" || lo == "negative");
      if (!core && !sign && !(connector && !toks.empty())) break;
      toks.push_back(t);
      if (at(t.end) != ' ') break;
      p = t.end + 1;
    }
    // Greedy with backtracking: the longest suffix-trimmed prefix that
    // parses is the mention.
    for (size_t k = toks.size(); k >= 1; --k) {
      size_t end = toks[k - 1].end;
      auto v = try_words_to_numeral(text_.substr(i, end - i));
      if (v) {
        r.valid = true;
        r.end = end;
        r.value = *v;
        return r;
      }
    }
    return r;
  }

  std::optional<Mention> make(size_t begin, size_t end, MentionKind kind,
                              Pattern pattern) const {
    Mention m;
    m.begin = begin;
    m.end = end;
    m.kind = kind;
    m.format.pattern = pattern;
    m.num_begin = begin;
    m.num_end = end;
    return m;
  }

  std::optional<Mention> try_date(size_t i) const {
    char c = at(i);
    if (!is_digit(c) && !is_alpha(c)) return std::nullopt;
    std::optional<std::string> cand;
    size_t cand_end = 0;
    if (is_digit(c)) {
      // ISO 8601 then day-first numeric.
      auto digits_run = [&](size_t p) {
        size_t q = p;
        while (is_digit(at(q))) ++q;
        return q - p;
      };
      size_t r1 = digits_run(i);
      if (r1 == 4 && at(i + 4) == '-' && digits_run(i + 5) == 2 &&
          at(i + 7) == '-' && digits_run(i + 8) == 2 && !word_at(i + 10)) {
        cand = text_.substr(i, 10);
        cand_end = i + 10;
      } else if (r1 >= 1 && r1 <= 2) {
        char sep = at(i + r1);
        if (sep == '-' || sep == '/') {
          size_t r2 = digits_run(i + r1 + 1);
          if (r2 >= 1 && r2 <= 2 && at(i + r1 + 1 + r2) == sep) {
            size_t y0 = i + r1 + 1 + r2 + 1;
            if (digits_run(y0) == 4 && !word_at(y0 + 4)) {
              cand_end = y0 + 4;
              cand = text_.substr(i, cand_end - i);
            }
          }
        }
      }
      if (!cand) {
        // "3rd June, 1986" / "3 June 1986".
        TokenSpan t1 = word_token(i);
        if (t1.end > t1.begin && at(t1.end) == ' ') {
          TokenSpan t2 = word_token(t1.end + 1);
          size_t after2 = t2.end;
          if (at(after2) == ',') ++after2;
          if (t2.end > t2.begin && at(after2) == ' ') {
            TokenSpan t3 = word_token(after2 + 1);
            if (t3.end - t3.begin == 4) {
              cand_end = t3.end;
              cand = text_.substr(i, cand_end - i);
            }
          }
        }
      }
    } else {
      // "June 20, 2003" / "June 20th, 2003" / "June 1986".
      TokenSpan t1 = word_token(i);
      if (month_from_token(t1.text) == 0) return std::nullopt;
      if (at(t1.end) != ' ') return std::nullopt;
      TokenSpan t2 = word_token(t1.end + 1);
      if (t2.end == t2.begin) return std::nullopt;
      size_t after2 = t2.end;
      if (at(after2) == ',') ++after2;
      if (at(after2) == ' ') {
        TokenSpan t3 = word_token(after2 + 1);
        if (t3.end - t3.begin == 4) {
          auto full = try_parse_date(text_.substr(i, t3.end - i));
          if (full) {
            Mention m = *make(i, t3.end, MentionKind::kDate,
                              full->source_format.pattern);
            m.date = *full;
            return m;
          }
        }
      }
      if (t2.end - t2.begin == 4) {
        cand_end = t2.end;
        cand = text_.substr(i, cand_end - i);
      }
    }
    if (!cand) return std::nullopt;
    auto d = try_parse_date(*cand);
    if (!d || d->source_format.pattern == Pattern::kYearOnly) {
      // Bare years stay cardinal mentions.
      return std::nullopt;
    }
    Mention m = *make(i, cand_end, MentionKind::kDate, d->source_format.pattern);
    m.date = *d;
    return m;
  }

  int month_from_token(const std::string& tok) const {
    for (int mth = 1; mth <= 12; ++mth) {
      std::string full = month_name(mth);
      if (tok == full) return mth;
      std::string lo = lower(tok);
      std::string flo = lower(full);
      if (lo == flo || (lo.size() == 3 && flo.compare(0, 3, lo) == 0)) {
        return mth;
      }
    }
    return 0;
  }

  std::optional<Mention> try_time(size_t i) const {
    if (!is_digit(at(i))) return std::nullopt;
    size_t j = i;
    while (is_digit(at(j))) ++j;
    if (j - i > 2 || at(j) != ':') return std::nullopt;
    if (!is_digit(at(j + 1)) || !is_digit(at(j + 2)) || is_digit(at(j + 3))) {
      return std::nullopt;
    }
    long long h = std::stoll(text_.substr(i, j - i));
    long long mi = std::stoll(text_.substr(j + 1, 2));
    size_t end = j + 3;
    long long sec = 0;
    if (at(end) == ':' && is_digit(at(end + 1)) && is_digit(at(end + 2)) &&
        !is_digit(at(end + 3))) {
      sec = std::stoll(text_.substr(end + 1, 2));
      end += 3;
    }
    bool pm = false, am = false;
    size_t tail = end;
    if (at(tail) == ' ') ++tail;
    if ((matches_at(tail, "pm") || matches_at(tail, "PM")) &&
        !word_at(tail + 2)) {
      pm = true;
      end = tail + 2;
    } else if ((matches_at(tail, "am") || matches_at(tail, "AM")) &&
               !word_at(tail + 2)) {
      am = true;
      end = tail + 2;
    }
    if (h >= 24 || mi >= 60 || sec >= 60) return std::nullopt;
    if ((pm || am) && (h < 1 || h > 12)) return std::nullopt;
    if (pm && h < 12) h += 12;
    if (am && h == 12) h = 0;
    Mention m = *make(i, end, MentionKind::kTime, Pattern::kTimeColon);
    m.value = NumericValue::parse(std::to_string(h * 3600 + mi * 60 + sec));
    m.unit = "second";
    return m;
  }

  std::optional<Mention> try_currency(size_t i) const {
    for (const auto& [alias, entry] : idx_.currency_symbols) {
      if (!matches_at(i, alias)) continue;
      DigitsMatch d = match_digits(i + alias.size(), false, true);
      if (!d.valid || word_at(d.full_end)) continue;
      Mention m = *make(i, d.full_end, MentionKind::kCurrency,
                        Pattern::kCurrencySymbol);
      m.value = d.value;
      m.unit = entry->id;
      m.num_begin = i + alias.size();
      m.num_end = d.num_end;
      m.multiplier_pow10 = d.mult_pow10;
      return m;
    }
    // Amount followed by a currency code or word.
    DigitsMatch d = match_digits(i, true, true);
    size_t amount_end = 0, num_b = 0, num_e = 0;
    NumericValue value;
    int mult = 0;
    bool have = false;
    if (d.valid) {
      amount_end = d.full_end;
      num_b = i;
      num_e = d.num_end;
      value = d.value;
      mult = d.mult_pow10;
      have = true;
    } else {
      WordsMatch w = match_words(i);
      if (w.valid) {
        amount_end = w.end;
        num_b = i;
        num_e = w.end;
        value = w.value;
        have = true;
      }
    }
    if (!have || at(amount_end) != ' ') return std::nullopt;
    for (const auto& [alias, entry] : idx_.currency_words) {
      if (matches_at(amount_end + 1, alias) &&
          !word_at(amount_end + 1 + alias.size())) {
        Mention m = *make(i, amount_end + 1 + alias.size(),
                          MentionKind::kCurrency, Pattern::kCurrencyCode);
        m.value = value;
        m.unit = entry->id;
        m.num_begin = num_b;
        m.num_end = num_e;
        m.multiplier_pow10 = mult;
        return m;
      }
    }
    return std::nullopt;
  }

  std::optional<Mention> try_percentage(size_t i) const {
    DigitsMatch d = match_digits(i, true, false);
    size_t end = 0, num_e = 0;
    NumericValue value;
    if (d.valid) {
      num_e = d.num_end;
      value = d.value;
    } else {
      WordsMatch w = match_words(i);
      if (!w.valid) return std::nullopt;
      num_e = w.end;
      value = w.value;
    }
    Pattern pat;
    if (at(num_e) == '%') {
      end = num_e + 1;
      pat = Pattern::kPercentSign;
    } else if (matches_at(num_e, " percent") && !word_at(num_e + 8)) {
      end = num_e + 8;
      pat = Pattern::kPercentWord;
    } else if (matches_at(num_e, " per cent") && !word_at(num_e + 9)) {
      end = num_e + 9;
      pat = Pattern::kPercentWord;
    } else {
      return std::nullopt;
    }
    Mention m = *make(i, end, MentionKind::kPercentage, pat);
    m.value = value;
    m.num_end = num_e;
    return m;
  }

  std::optional<Mention> try_scientific(size_t i) const {
    size_t j = i;
    if (at(j) == '-') {
      if (!(i == 0 || text_[i - 1] == ' ' || text_[i - 1] == '(')) {
        return std::nullopt;
      }
      ++j;
    }
    if (!is_digit(at(j))) return std::nullopt;
    while (is_digit(at(j))) ++j;
    if (at(j) == '.' && is_digit(at(j + 1))) {
      ++j;
      while (is_digit(at(j))) ++j;
    }
    if (at(j) != 'e' && at(j) != 'E') return std::nullopt;
    ++j;
    if (at(j) == '+' || at(j) == '-') ++j;
    if (!is_digit(at(j))) return std::nullopt;
    while (is_digit(at(j))) ++j;
    if (word_at(j) || at(j) == '.') return std::nullopt;
    Mention m = *make(i, j, MentionKind::kScientificNotation,
                      Pattern::kSciENotation);
    m.value = parse_scientific(text_.substr(i, j - i));
    return m;
  }

  std::optional<Mention> try_measured(size_t i) const {
    DigitsMatch d = match_digits(i, true, true);
    size_t num_e = 0, full_e = 0;
    NumericValue value;
    Pattern pat = Pattern::kPlainDigits;
    int mult = 0;
    bool words = false;
    if (d.valid) {
      num_e = d.num_end;
      full_e = d.full_end;
      value = d.value;
      mult = d.mult_pow10;
      pat = d.grouped ? Pattern::kGroupedThousands : Pattern::kPlainDigits;
    } else {
      WordsMatch w = match_words(i);
      if (!w.valid) return std::nullopt;
      num_e = full_e = w.end;
      value = w.value;
      pat = Pattern::kCardinalWords;
      words = true;
    }
    // Attached alias ("1.85m") or one space ("185 centimeters").
    for (const auto& [alias, entry] : idx_.measured) {
      size_t unit_pos = std::string::npos;
      if (!words && mult == 0 && is_alpha(alias[0]) &&
          matches_at(num_e, alias) && !word_at(num_e + alias.size())) {
        unit_pos = num_e;
      } else if (at(full_e) == ' ' && matches_at(full_e + 1, alias) &&
                 !word_at(full_e + 1 + alias.size())) {
        unit_pos = full_e + 1;
      }
      if (unit_pos == std::string::npos) continue;
      Mention m = *make(i, unit_pos + alias.size(),
                        MentionKind::kMeasuredQuantity, pat);
      m.value = value;
      m.unit = entry->id;
      m.num_begin = i;
      m.num_end = num_e;
      m.multiplier_pow10 = mult;
      return m;
    }
    return std::nullopt;
  }

  std::optional<Mention> try_ordinal(size_t i) const {
    if (is_digit(at(i))) {
      size_t j = i;
      while (is_digit(at(j))) ++j;
      if (j + 2 <= n_ && is_alpha(at(j)) && is_alpha(at(j + 1)) &&
          !word_at(j + 2)) {
        try {
          long long rank = parse_ordinal_suffix(text_.substr(i, j + 2 - i));
          Mention m = *make(i, j + 2, MentionKind::kOrdinal,
                            Pattern::kOrdinalSuffix);
          m.value = NumericValue::parse(std::to_string(rank));
          return m;
        } catch (const Error&) {
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
    if (!is_alpha(at(i))) return std::nullopt;
    std::vector<TokenSpan> toks;
    size_t p = i;
    while (toks.size() < 4) {
      TokenSpan t = word_token(p);
      if (t.end == t.begin) break;
      toks.push_back(t);
      if (at(t.end) != ' ') break;
      p = t.end + 1;
    }
    for (size_t k = toks.size(); k >= 1; --k) {
      auto rank =
          try_parse_ordinal_word(text_.substr(i, toks[k - 1].end - i));
      if (rank) {
        Mention m = *make(i, toks[k - 1].end, MentionKind::kOrdinal,
                          Pattern::kOrdinalWord);
        m.value = NumericValue::parse(std::to_string(*rank));
        return m;
      }
    }
    return std::nullopt;
  }

  std::optional<Mention> try_cardinal_digits(size_t i) const {
    DigitsMatch d = match_digits(i, true, true);
    if (!d.valid) return std::nullopt;
    // A word character straight after the digits belongs to some other
    // construct (unit, ordinal suffix, e-notation) that already got its
    // chance; claiming the digits alone would split it.
    if (d.full_end == d.num_end && word_at(d.num_end)) return std::nullopt;
    Mention m = *make(i, d.full_end, MentionKind::kCardinalDigits,
                      d.grouped ? Pattern::kGroupedThousands
                                : Pattern::kPlainDigits);
    m.value = d.value;
    m.num_end = d.num_end;
    m.multiplier_pow10 = d.mult_pow10;
    return m;
  }

  std::optional<Mention> try_cardinal_words(size_t i) const {
    WordsMatch w = match_words(i);
    if (!w.valid) return std::nullopt;
    Mention m = *make(i, w.end, MentionKind::kCardinalWords,
                      Pattern::kCardinalWords);
    m.value = w.value;
    return m;
  }

  const std::string& text_;
  size_t n_;
  AliasIndex idx_;
};

}  // namespace

const char* mention_kind_name(MentionKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  throw ParseError("unknown mention kind");
}

MentionKind mention_kind_from_name(const std::string& name) {
  for (const auto& [kind, kname] : kKindNames) {
    if (name == kname) return kind;
  }
  throw ParseError("unknown mention kind name: " + name);
}

std::vector<Mention> scan_mentions(const std::string& text,
                                   const UnitCatalog& catalog) {
  return Scanner(text, catalog).run();
}

}  // namespace numprobe
