// Copyright 2026 The numprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numprobe/probegen.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "numprobe/dates.hpp"
#include "numprobe/errors.hpp"
#include "numprobe/number_words.hpp"
#include "numprobe/numformat.hpp"
#include "numprobe/rng.hpp"
#include "numprobe/scan.hpp"

namespace numprobe {
namespace {

using njson = nlohmann::ordered_json;

constexpr int kResampleLimit = 16;

std::string lower(const std::string& s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::string slice(const std::string& text, size_t b, size_t e) {
  return text.substr(b, e - b);
}

BigInt pow10_big(int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

// Largest integer <= v. Values here fit comfortably in a cpp_int.
BigInt floor_int(const NumericValue& v) {
  if (v.is_integer()) {
    BigInt r = v.coefficient() * pow10_big(v.scale_exp());
    return v.negative() ? BigInt(-r) : r;
  }
  BigInt p = pow10_big(-v.scale_exp());
  BigInt q = v.coefficient() / p;
  BigInt r = v.coefficient() % p;
  if (v.negative()) {
    q = -q;
    if (r != 0) q -= 1;
  }
  return q;
}

BigInt ceil_int(const NumericValue& v) { return -floor_int(v.negated()); }

NumericValue from_grid(const BigInt& k, int exp) {
  return NumericValue::from_parts(k < 0, k < 0 ? BigInt(-k) : k, exp);
}

// The precision grid a mention's replacement values live on. A "5 million"
// mention has one whole-coefficient step of 10^6; "245.4 million" steps by
// 10^5; plain "37" steps by 1.
int grid_exp(const Mention& m) {
  NumericValue coeff = m.value.shifted(-m.multiplier_pow10);
  return m.multiplier_pow10 - coeff.frac_digits();
}

// Uniform value on the 10^exp grid inside [lo, hi]. Throws OutOfRange when
// the window holds no grid point.
NumericValue sample_on_grid(Rng& rng, const NumericValue& lo,
                            const NumericValue& hi, int exp) {
  BigInt k_lo = ceil_int(lo.shifted(-exp));
  BigInt k_hi = floor_int(hi.shifted(-exp));
  if (k_hi < k_lo) throw OutOfRange("empty sampling window");
  BigInt count = k_hi - k_lo + 1;
  // Windows beyond 2^62 grid points lose their tail; harmless in practice.
  uint64_t n = count > BigInt(uint64_t(1) << 62)
                   ? (uint64_t(1) << 62)
                   : count.convert_to<uint64_t>();
  BigInt k = k_lo + BigInt(rng.below(n));
  return from_grid(k, exp);
}

bool num_is_grouped(const std::string& base, const Mention& m) {
  return slice(base, m.num_begin, m.num_end).find(',') != std::string::npos;
}

std::string render_digits(const NumericValue& v, bool grouped) {
  if (grouped && v.is_integer()) return v.to_grouped_string();
  return v.to_string();
}

EditRecord make_edit(const std::string& base, size_t b, size_t e,
                     std::string new_surface, std::string rule) {
  EditRecord ed;
  ed.begin = b;
  ed.end = e;
  ed.old_surface = slice(base, b, e);
  ed.new_surface = std::move(new_surface);
  ed.rule = std::move(rule);
  return ed;
}

// Replaces the numeric sub-span with a new value, keeping the mention's
// multiplier word, symbols, and representation (words stay words, grouped
// stays grouped).
EditRecord value_edit(const std::string& base, const Mention& m,
                      const NumericValue& replacement, const std::string& rule) {
  NumericValue coeff = replacement.shifted(-m.multiplier_pow10);
  std::string s;
  if (m.format.pattern == Pattern::kCardinalWords) {
    s = numeral_to_words(coeff, spoken_style());
  } else {
    s = render_digits(coeff, num_is_grouped(base, m));
  }
  return make_edit(base, m.num_begin, m.num_end, s, rule);
}

std::string capitalize_like(const std::string& old_surface, std::string repl) {
  if (!old_surface.empty() && !repl.empty() &&
      std::isupper(static_cast<unsigned char>(old_surface[0]))) {
    repl[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(repl[0])));
  }
  return repl;
}

bool wants_plural(const NumericValue& v) { return v.abs() != NumericValue(1); }

// Catalog alias convention: aliases[0] is the symbol, [1] the singular
// word, [2] the plural word when one exists.
const std::string& symbol_alias(const UnitEntry& e) { return e.aliases.front(); }

const std::string& word_alias(const UnitEntry& e, bool plural) {
  if (e.aliases.size() >= 3) return e.aliases[plural ? 2 : 1];
  return e.aliases.back();
}

// The alias the base text actually used for a measured mention.
std::string surface_alias(const std::string& base, const Mention& m,
                          const UnitEntry& entry) {
  std::string tail = lower(slice(base, m.num_begin, m.end));
  std::string best;
  for (const std::string& a : entry.aliases) {
    if (tail.size() >= a.size() &&
        tail.compare(tail.size() - a.size(), a.size(), lower(a)) == 0 &&
        a.size() > best.size()) {
      best = a;
    }
  }
  return best.empty() ? entry.aliases.front() : best;
}

std::vector<ApproxTier> builtin_approx_tiers() {
  std::vector<ApproxTier> tiers;
  tiers.push_back({NumericValue(1000), 1});
  tiers.push_back({NumericValue(100000), 2});
  tiers.push_back({NumericValue(10000000), 3});
  return tiers;
}

// Granularity used both to round a value and to step a wrong rounding away
// from the right one. Beyond the last tier: three significant digits.
NumericValue approx_granularity(const NumericValue& v,
                                const GenerationConfig& cfg) {
  const std::vector<ApproxTier>& tiers =
      cfg.approximation_tiers.empty() ? builtin_approx_tiers()
                                      : cfg.approximation_tiers;
  NumericValue a = v.abs();
  for (const ApproxTier& t : tiers) {
    if (a < t.threshold) return from_grid(BigInt(1), t.granularity_exp);
  }
  return from_grid(BigInt(1), a.magnitude_order() - 2);
}

Label invert(Label l) {
  return l == Label::kEntail ? Label::kContradict : Label::kEntail;
}

std::string probe_id(const std::string& base_id, ReasoningType type,
                     const std::string& submode, bool flip, size_t occ) {
  return base_id + "-" + reasoning_type_name(type) + "-" + submode +
         (flip ? "-f" : "-p") + std::to_string(occ);
}

Probe start_probe(const Hypothesis& h, ReasoningType type,
                  const std::string& submode, bool flip, size_t occ,
                  uint64_t seed) {
  Probe p;
  p.id = probe_id(h.id, type, submode, flip, occ);
  p.base_id = h.id;
  p.type = type;
  p.flip = flip;
  p.expected_label = flip ? invert(h.label) : h.label;
  p.seed = seed;
  return p;
}

void finish_probe(Probe& p, const Hypothesis& h) {
  std::sort(p.edits.begin(), p.edits.end(),
            [](const EditRecord& a, const EditRecord& b) { return a.begin < b.begin; });
  p.text = apply_edits(h.text, p.edits);
}

// ---------------------------------------------------------------------------
// Shared grounding helpers (generators and the validator re-derive the same
// facts, so the logic lives once).

struct SignalEntry {
  const char* word;
  const char* opposite;
  bool greater;  // claims table value > threshold
};

const SignalEntry kSignals[] = {
    {"at least", "at most", true},   {"at most", "at least", false},
    {"more", "less", true},          {"less", "more", false},
    {"fewer", "more", false},        {"greater", "smaller", true},
    {"higher", "lower", true},       {"lower", "higher", false},
    {"bigger", "smaller", true},     {"larger", "smaller", true},
    {"smaller", "bigger", false},    {"taller", "shorter", true},
    {"shorter", "taller", false},    {"longer", "shorter", true},
    {"faster", "slower", true},      {"slower", "faster", false},
    {"older", "younger", true},      {"younger", "older", false},
    {"heavier", "lighter", true},    {"lighter", "heavier", false},
    {"after", "before", true},       {"before", "after", false},
    {"above", "below", true},        {"below", "above", false},
    {"over", "under", true},         {"under", "over", false},
    {"later", "earlier", true},      {"earlier", "later", false},
};

struct SignalHit {
  size_t begin = 0;
  size_t end = 0;
  const SignalEntry* entry = nullptr;
};

bool boundary_at(const std::string& s, size_t pos, size_t len) {
  if (pos > 0 && is_word_char(s[pos - 1])) return false;
  if (pos + len < s.size() && is_word_char(s[pos + len])) return false;
  return true;
}

std::optional<SignalHit> find_signal(const std::string& text) {
  std::string low = lower(text);
  std::optional<SignalHit> best;
  for (const SignalEntry& e : kSignals) {
    std::string w = e.word;
    size_t pos = 0;
    while ((pos = low.find(w, pos)) != std::string::npos) {
      if (boundary_at(low, pos, w.size())) {
        if (!best || pos < best->begin ||
            (pos == best->begin && w.size() > best->end - best->begin)) {
          best = SignalHit{pos, pos + w.size(), &e};
        }
        break;
      }
      ++pos;
    }
  }
  return best;
}

struct ComparisonGround {
  SignalHit signal;
  size_t mention_idx = 0;
  NumericValue table_value;  // expressed in the hypothesis mention's units
};

std::optional<ComparisonGround> ground_comparison(const Hypothesis& h,
                                                  const Table& t,
                                                  const UnitCatalog& catalog) {
  auto sig = find_signal(h.text);
  if (!sig) return std::nullopt;
  for (const MentionLink& link : link_mentions(h, t, catalog)) {
    const Mention& hm = h.mentions[link.hyp_mention];
    if (hm.is_date()) continue;
    const Mention& cm = t.at(link.row, link.col).mentions[link.cell_mention];
    NumericValue v;
    if (link.year_match) {
      v = NumericValue(cm.date.year);
    } else if (cm.is_date()) {
      continue;
    } else if (!link.unit_from.empty() && link.unit_from != link.unit_to) {
      v = catalog.convert(cm.value, link.unit_to, link.unit_from, 15);
    } else {
      v = cm.value;
    }
    if (v == hm.value) continue;  // no side to stand on
    ComparisonGround g;
    g.signal = *sig;
    g.mention_idx = link.hyp_mention;
    g.table_value = v;
    return g;
  }
  return std::nullopt;
}

// Threshold replacement window: same side of the table value as the old
// threshold, at least a tenth of the old gap away from it.
NumericValue sample_threshold(Rng& rng, const NumericValue& v,
                              const NumericValue& x, int exp) {
  NumericValue g = from_grid(BigInt(1), exp);
  NumericValue d = v.minus(x).abs();
  NumericValue s_min = d.times_ratio(1, 10, 30);
  if (s_min < g) s_min = g;
  NumericValue s_max = d.times_ratio(3, 2, 30).plus(g.times(NumericValue(10)));
  bool x_below = x < v;
  for (int tries = 0; tries < kResampleLimit; ++tries) {
    NumericValue s = sample_on_grid(rng, s_min, s_max, exp);
    NumericValue cand = x_below ? v.minus(s) : v.plus(s);
    if (cand != x) return cand;
  }
  throw NoApplicableMention("threshold window collapsed");
}

struct Indicator {
  size_t begin = 0;
  size_t end = 0;
  long long rank = 1;
  int dir = 0;  // -1 descending, +1 ascending, 0 row order
  bool composite = false;
  bool ord_is_suffix = false;
  size_t ord_begin = 0;
  size_t ord_end = 0;
  std::string sup_lower;
};

const char* const kDescWords[] = {"highest", "biggest", "largest",
                                  "greatest", "top",    "most"};
const char* const kAscWords[] = {"lowest", "smallest", "least", "fewest",
                                 "bottom"};

int superlative_dir(const std::string& w) {
  for (const char* d : kDescWords)
    if (w == d) return -1;
  for (const char* a : kAscWords)
    if (w == a) return +1;
  return 0;
}

struct Tok {
  size_t begin = 0;
  size_t end = 0;
  std::string low;
};

std::vector<Tok> word_tokens(const std::string& text) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_word_char(text[j])) ++j;
    out.push_back({i, j, lower(slice(text, i, j))});
    i = j;
  }
  return out;
}

std::optional<long long> token_rank(const Tok& t) {
  if (auto r = try_parse_ordinal_word(t.low)) return *r;
  if (std::isdigit(static_cast<unsigned char>(t.low[0]))) {
    try {
      return parse_ordinal_suffix(t.low);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

bool inside_date(const Hypothesis& h, size_t begin, size_t end) {
  for (const Mention& m : h.mentions) {
    if (m.is_date() && begin >= m.begin && end <= m.end) return true;
  }
  return false;
}

std::optional<Indicator> find_indicator(const Hypothesis& h) {
  std::vector<Tok> toks = word_tokens(h.text);
  for (size_t i = 0; i < toks.size(); ++i) {
    if (inside_date(h, toks[i].begin, toks[i].end)) continue;
    std::optional<long long> rank = token_rank(toks[i]);
    if (rank) {
      Indicator ind;
      ind.rank = *rank;
      ind.ord_begin = toks[i].begin;
      ind.ord_end = toks[i].end;
      ind.ord_is_suffix = std::isdigit(static_cast<unsigned char>(toks[i].low[0])) != 0;
      if (i + 1 < toks.size()) {
        int dir = superlative_dir(toks[i + 1].low);
        if (dir != 0) {
          ind.begin = toks[i].begin;
          ind.end = toks[i + 1].end;
          ind.dir = dir;
          ind.composite = true;
          ind.sup_lower = toks[i + 1].low;
          return ind;
        }
      }
      ind.begin = toks[i].begin;
      ind.end = toks[i].end;
      ind.dir = 0;
      return ind;
    }
    int dir = superlative_dir(toks[i].low);
    if (dir != 0) {
      Indicator ind;
      ind.begin = toks[i].begin;
      ind.end = toks[i].end;
      ind.rank = 1;
      ind.dir = dir;
      ind.sup_lower = toks[i].low;
      return ind;
    }
  }
  return std::nullopt;
}

struct SortGround {
  Indicator ind;
  size_t column = 0;
  NumericColumn col;
  std::vector<NumericValue> ranked;  // sorted per the indicator's direction
  std::optional<NumericValue> entity_value;
  std::optional<size_t> value_mention_idx;  // hypothesis mention, if any
};

std::vector<NumericValue> rank_values(const NumericColumn& col, int dir) {
  std::vector<NumericValue> v = col.values;
  if (dir < 0) {
    std::sort(v.begin(), v.end(), [](const NumericValue& a, const NumericValue& b) {
      return a > b;
    });
  } else if (dir > 0) {
    std::sort(v.begin(), v.end(), [](const NumericValue& a, const NumericValue& b) {
      return a < b;
    });
  }
  return v;
}

std::optional<SortGround> ground_sorting(const Hypothesis& h, const Table& t,
                                         const UnitCatalog& catalog) {
  if (t.orientation != Orientation::kRelationalGrid) return std::nullopt;
  std::optional<Indicator> ind = find_indicator(h);
  if (!ind) return std::nullopt;
  SortGround g;
  g.ind = *ind;

  bool have_col = false;
  for (const MentionLink& link : link_mentions(h, t, catalog)) {
    try {
      g.col = extract_numeric_column(t, link.col);
      g.column = link.col;
      g.value_mention_idx = link.hyp_mention;
      have_col = true;
      break;
    } catch (const Error&) {
    }
  }
  if (!have_col) {
    // Match a column header's words against the hypothesis text.
    std::string low = lower(h.text);
    for (size_t c = 0; c < t.headers.size() && !have_col; ++c) {
      std::vector<Tok> hdr = word_tokens(t.headers[c]);
      if (hdr.empty()) continue;
      bool all = true;
      for (const Tok& w : hdr) {
        size_t pos = low.find(w.low);
        if (pos == std::string::npos || !boundary_at(low, pos, w.low.size())) {
          all = false;
          break;
        }
      }
      if (!all) continue;
      try {
        g.col = extract_numeric_column(t, c);
        g.column = c;
        have_col = true;
      } catch (const Error&) {
      }
    }
  }
  if (!have_col) {
    // Last resort: a grid with exactly one numeric column.
    size_t hits = 0;
    for (size_t c = 0; c < t.column_count(); ++c) {
      try {
        NumericColumn nc = extract_numeric_column(t, c);
        g.col = nc;
        g.column = c;
        ++hits;
      } catch (const Error&) {
      }
    }
    if (hits != 1) return std::nullopt;
  }

  // Entity row: the longest non-numeric cell text that appears verbatim.
  std::string low = lower(h.text);
  size_t best_len = 0;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    bool has_value = std::find(g.col.value_rows.begin(), g.col.value_rows.end(),
                               r) != g.col.value_rows.end();
    if (!has_value) continue;
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c == g.column) continue;
      const std::string raw = lower(t.rows[r][c].raw);
      if (raw.size() < 3 || raw.size() <= best_len) continue;
      size_t pos = low.find(raw);
      if (pos != std::string::npos && boundary_at(low, pos, raw.size())) {
        for (size_t k = 0; k < g.col.value_rows.size(); ++k) {
          if (g.col.value_rows[k] == r) {
            g.entity_value = g.col.values[k];
            best_len = raw.size();
          }
        }
      }
    }
  }

  g.ranked = rank_values(g.col, g.ind.dir);
  return g;
}

std::string render_rank_token(long long rank, bool as_suffix) {
  return as_suffix ? format_ordinal_suffix(rank) : format_ordinal_word(rank);
}

// ---------------------------------------------------------------------------
// Validator-side parsing of edited surfaces.

NumericValue parse_value_surface(const std::string& raw,
                                 const UnitCatalog& catalog) {
  std::string s = raw;
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  std::string low = lower(s);
  for (const char* w : {"minus ", "negative "}) {
    if (starts_with(low, w)) {
      return parse_value_surface(s.substr(std::string(w).size()), catalog).negated();
    }
  }
  if (auto v = try_words_to_numeral(s)) return *v;
  std::vector<Mention> ms = scan_mentions(s, catalog);
  if (!ms.empty() && !ms.front().is_date()) return ms.front().value;
  std::string digits;
  for (char c : s)
    if (c != ',') digits.push_back(c);
  return NumericValue::parse(digits);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string apply_edits(const std::string& base,
                        const std::vector<EditRecord>& edits) {
  std::string out;
  size_t cursor = 0;
  for (const EditRecord& e : edits) {
    if (e.begin < cursor || e.end < e.begin || e.end > base.size()) {
      throw ParseError("edit spans overlap or run out of order");
    }
    if (base.compare(e.begin, e.end - e.begin, e.old_surface) != 0) {
      throw ParseError("edit old_surface disagrees with base text at offset " +
                       std::to_string(e.begin));
    }
    out.append(base, cursor, e.begin - cursor);
    out.append(e.new_surface);
    cursor = e.end;
  }
  out.append(base, cursor, base.size() - cursor);
  return out;
}

std::string revert_edits(const std::string& probe_text,
                         const std::vector<EditRecord>& edits) {
  std::string out;
  size_t cursor = 0;   // in probe_text
  size_t base_pos = 0; // in the reconstructed base
  for (const EditRecord& e : edits) {
    if (e.begin < base_pos) throw ParseError("edit spans overlap");
    size_t keep = e.begin - base_pos;
    if (cursor + keep > probe_text.size()) {
      throw ParseError("probe text shorter than its edits claim");
    }
    out.append(probe_text, cursor, keep);
    cursor += keep;
    if (probe_text.compare(cursor, e.new_surface.size(), e.new_surface) != 0) {
      throw ParseError("edit new_surface disagrees with probe text at offset " +
                       std::to_string(cursor));
    }
    out.append(e.old_surface);
    cursor += e.new_surface.size();
    base_pos = e.end;
  }
  out.append(probe_text, cursor, probe_text.size() - cursor);
  return out;
}

uint64_t derive_probe_seed(uint64_t master_seed, const std::string& hyp_id,
                           ReasoningType type, const std::string& submode,
                           size_t occurrence) {
  uint64_t h = fnv1a64(hyp_id);
  h = fnv1a64(std::string(reasoning_type_name(type)), h);
  h = fnv1a64(submode, h);
  h = mix_u64(h, master_seed);
  h = mix_u64(h, static_cast<uint64_t>(occurrence));
  return h;
}

GenerationConfig::GenerationConfig() { enabled.fill(true); }

std::map<std::pair<ReasoningType, bool>, size_t> ProbeSet::counts() const {
  std::map<std::pair<ReasoningType, bool>, size_t> out;
  for (const Probe& p : probes) ++out[{p.type, p.flip}];
  return out;
}

// ---------------------------------------------------------------------------
// Numeration: digits <-> words, every same-direction mention in one probe.

std::vector<Probe> gen_numeration(const Hypothesis& h, const Table&,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog&) {
  struct Target {
    size_t idx;
    bool to_words;
  };
  std::vector<Target> words_dir;
  std::vector<Target> digits_dir;
  for (size_t i = 0; i < h.mentions.size(); ++i) {
    const Mention& m = h.mentions[i];
    if (m.kind == MentionKind::kCardinalDigits) words_dir.push_back({i, true});
    if (m.kind == MentionKind::kCardinalWords) digits_dir.push_back({i, false});
  }
  if (words_dir.empty() && digits_dir.empty()) {
    throw NoApplicableMention("no cardinal mention to convert");
  }

  std::vector<Probe> out;
  bool flip = mode == ProbeMode::kFlip;
  size_t occ = 0;
  for (const std::vector<Target>* dir : {&words_dir, &digits_dir}) {
    if (dir->empty()) continue;
    const std::string submode = dir == &words_dir ? "to-words" : "to-digits";
    uint64_t seed =
        derive_probe_seed(cfg.master_seed, h.id, ReasoningType::kNumeration,
                          submode + (flip ? "/flip" : "/preserve"), occ);
    Rng rng(seed);
    Probe p = start_probe(h, ReasoningType::kNumeration, submode, flip, occ, seed);
    int capped = 0;
    for (const Target& tgt : *dir) {
      if (capped >= cfg.max_probes_per_hypothesis) break;
      const Mention& m = h.mentions[tgt.idx];
      NumericValue coeff = m.value.shifted(-m.multiplier_pow10);
      NumericValue repl = coeff;
      if (flip) {
        // Uniform on the coefficient's precision grid inside
        // [x - w*x, x + w*x], never value-equal to x. Zero gets 1..9.
        if (coeff.is_zero()) {
          repl = NumericValue(rng.between(1, 9));
        } else {
          int pm = static_cast<int>(cfg.flip_replacement_halfwidth * 1000.0);
          NumericValue lo = coeff.minus(coeff.abs().times_ratio(pm, 1000, 30));
          NumericValue hi = coeff.plus(coeff.abs().times_ratio(pm, 1000, 30));
          int exp = -coeff.frac_digits();
          repl = coeff;
          for (int tries = 0; tries < kResampleLimit && repl == coeff; ++tries) {
            repl = sample_on_grid(rng, lo, hi, exp);
          }
          if (repl == coeff) continue;
        }
      }
      const char* rule = flip ? "numeration-replace" : "numeration-convert";
      if (tgt.to_words) {
        std::string words = numeral_to_words(repl, spoken_style());
        if (m.multiplier_pow10 > 0) {
          p.edits.push_back(make_edit(h.text, m.num_begin, m.num_end, words, rule));
        } else {
          p.edits.push_back(make_edit(h.text, m.begin, m.end, words, rule));
        }
      } else {
        // Words have no multiplier span; render the full value as digits.
        NumericValue full = repl.shifted(m.multiplier_pow10);
        p.edits.push_back(make_edit(h.text, m.begin, m.end, full.to_string(), rule));
      }
      ++capped;
    }
    if (!p.edits.empty()) {
      finish_probe(p, h);
      out.push_back(std::move(p));
      ++occ;
    }
  }
  if (out.empty()) throw NoApplicableMention("no convertible cardinal survived");
  return out;
}

// ---------------------------------------------------------------------------
// Heterogeneous representations: dates, ordinals, percentages, currencies,
// large or scientific numbers re-rendered in a sibling format.

namespace {

enum class HetKind { kDate, kOrdinal, kPercent, kNotation };

std::optional<HetKind> het_kind(const Mention& m) {
  switch (m.kind) {
    case MentionKind::kDate:
      return HetKind::kDate;
    case MentionKind::kOrdinal:
      return HetKind::kOrdinal;
    case MentionKind::kPercentage:
      return HetKind::kPercent;
    case MentionKind::kCurrency:
      if (m.multiplier_pow10 != 0) return std::nullopt;
      return HetKind::kNotation;
    case MentionKind::kScientificNotation:
      return HetKind::kNotation;
    case MentionKind::kCardinalDigits:
      if (m.multiplier_pow10 != 0) return std::nullopt;
      if (m.value.abs() < NumericValue(1000000)) return std::nullopt;
      return HetKind::kNotation;
    default:
      return std::nullopt;
  }
}

const char* het_submode(HetKind k) {
  switch (k) {
    case HetKind::kDate:
      return "date";
    case HetKind::kOrdinal:
      return "ordinal";
    case HetKind::kPercent:
      return "percent";
    default:
      return "notation";
  }
}

}  // namespace

std::vector<Probe> gen_heterogeneous(const Hypothesis& h, const Table&,
                                     ProbeMode mode,
                                     const GenerationConfig& cfg,
                                     const UnitCatalog&) {
  std::vector<Probe> out;
  bool flip = mode == ProbeMode::kFlip;
  std::map<std::string, size_t> occ_by_submode;
  int produced = 0;
  bool saw_candidate = false;

  for (size_t i = 0; i < h.mentions.size(); ++i) {
    if (produced >= cfg.max_probes_per_hypothesis) break;
    const Mention& m = h.mentions[i];
    std::optional<HetKind> hk = het_kind(m);
    if (!hk) continue;
    saw_candidate = true;
    const std::string submode = het_submode(*hk);
    size_t occ = occ_by_submode[submode]++;
    uint64_t seed =
        derive_probe_seed(cfg.master_seed, h.id, ReasoningType::kHeterogeneous,
                          submode + (flip ? "/flip" : "/preserve"), occ);
    Rng rng(seed);
    Probe p = start_probe(h, ReasoningType::kHeterogeneous, submode, flip, occ, seed);
    const char* rule = flip ? "heterogeneous-replace" : "heterogeneous-reformat";

    if (*hk == HetKind::kDate) {
      Pattern target = Pattern::kNone;
      for (Pattern pat : renderable_date_patterns(m.date)) {
        if (pat != m.format.pattern) {
          target = pat;
          break;
        }
      }
      if (target == Pattern::kNone) continue;
      DateValue d = m.date;
      if (flip) {
        DateValue cand = d;
        for (int tries = 0; tries < kResampleLimit && cand == d; ++tries) {
          cand.year = rng.between(d.year - cfg.date_flip_year_window,
                                  d.year + cfg.date_flip_year_window);
          if (d.has_month()) cand.month = static_cast<int>(rng.between(1, 12));
          if (d.has_day()) {
            cand.day = static_cast<int>(
                rng.between(1, days_in_month(cand.year, cand.month)));
          }
        }
        if (cand == d) continue;
        d = cand;
      }
      p.edits.push_back(make_edit(h.text, m.begin, m.end, format_date(d, target), rule));
    } else if (*hk == HetKind::kOrdinal) {
      long long rank = floor_int(m.value).convert_to<long long>();
      long long out_rank = rank;
      if (flip) {
        long long lo = std::max<long long>(1, rank / 2);
        long long hi = rank + (rank + 1) / 2;
        if (hi <= lo) hi = lo + 1;
        out_rank = rank;
        for (int tries = 0; tries < kResampleLimit && out_rank == rank; ++tries) {
          out_rank = rng.between(lo, hi);
        }
        if (out_rank == rank) continue;
      }
      bool was_suffix = m.format.pattern == Pattern::kOrdinalSuffix;
      std::string s = was_suffix ? format_ordinal_word(out_rank)
                                 : format_ordinal_suffix(out_rank);
      p.edits.push_back(make_edit(h.text, m.begin, m.end, s, rule));
    } else if (*hk == HetKind::kPercent) {
      NumericValue v = m.value;
      if (flip) {
        int pm = static_cast<int>(cfg.flip_replacement_halfwidth * 1000.0);
        NumericValue lo = v.minus(v.abs().times_ratio(pm, 1000, 30));
        NumericValue hi = v.plus(v.abs().times_ratio(pm, 1000, 30));
        NumericValue cand = v;
        for (int tries = 0; tries < kResampleLimit && cand == v; ++tries) {
          cand = sample_on_grid(rng, lo, hi, -v.frac_digits());
        }
        if (cand == v) continue;
        v = cand;
      }
      bool was_sign = m.format.pattern == Pattern::kPercentSign;
      std::string s = was_sign ? render_percentage_word(v) : render_percentage_sign(v);
      p.edits.push_back(make_edit(h.text, m.begin, m.end, s, rule));
    } else {  // kNotation
      bool to_scientific = m.kind != MentionKind::kScientificNotation;
      NumericValue v = m.value;
      if (flip) {
        int pm = static_cast<int>(cfg.flip_replacement_halfwidth * 1000.0);
        NumericValue lo = v.minus(v.abs().times_ratio(pm, 1000, 30));
        NumericValue hi = v.plus(v.abs().times_ratio(pm, 1000, 30));
        NumericValue cand = v;
        for (int tries = 0; tries < kResampleLimit && cand == v; ++tries) {
          cand = sample_on_grid(rng, lo, hi, -v.frac_digits());
        }
        if (cand == v) continue;
        v = cand;
      }
      std::string s = to_scientific
                          ? format_scientific(v)
                          : render_digits(v, v.abs() >= NumericValue(10000));
      p.edits.push_back(make_edit(h.text, m.num_begin, m.num_end, s, rule));
    }
    finish_probe(p, h);
    out.push_back(std::move(p));
    ++produced;
  }
  if (!saw_candidate) {
    throw NoApplicableMention("no date, ordinal, percentage, currency, or "
                              "large-number mention");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negative numbers: "-n" <-> "minus n"/"negative n"; flips drop the sign.

std::vector<Probe> gen_negative(const Hypothesis& h, const Table&,
                                ProbeMode mode, const GenerationConfig& cfg,
                                const UnitCatalog&) {
  std::vector<Probe> out;
  bool flip = mode == ProbeMode::kFlip;
  size_t occ = 0;
  for (const Mention& m : h.mentions) {
    if (m.kind != MentionKind::kNegativeNumber) continue;
    if (static_cast<int>(occ) >= cfg.max_probes_per_hypothesis) break;
    std::string num = slice(h.text, m.num_begin, m.num_end);
    std::string low = lower(num);
    uint64_t seed =
        derive_probe_seed(cfg.master_seed, h.id, ReasoningType::kNegative,
                          flip ? "sign/flip" : "wordform/preserve", occ);
    Rng rng(seed);
    Probe p = start_probe(h, ReasoningType::kNegative,
                          flip ? "sign" : "wordform", flip, occ, seed);
    std::string repl;
    if (!num.empty() && num[0] == '-') {
      repl = flip ? num.substr(1)
                  : std::string(rng.next_bool() ? "minus " : "negative ") +
                        num.substr(1);
    } else if (starts_with(low, "minus ")) {
      repl = flip ? num.substr(6) : "negative " + num.substr(6);
    } else if (starts_with(low, "negative ")) {
      repl = flip ? num.substr(9) : "minus " + num.substr(9);
    } else {
      continue;
    }
    p.edits.push_back(make_edit(h.text, m.num_begin, m.num_end, repl,
                                flip ? "negative-dropsign" : "negative-wordform"));
    finish_probe(p, h);
    out.push_back(std::move(p));
    ++occ;
  }
  if (out.empty()) throw NoApplicableMention("no negative-number mention");
  return out;
}

// ---------------------------------------------------------------------------
// Scale: unit conversions (exact within a family, corrupted across systems)
// and unit mappings (alias swaps, wrong-family swaps).

namespace {

std::string render_measured(const std::string& digits, const UnitEntry& entry,
                            bool symbol, bool attached, bool plural) {
  if (symbol) return digits + (attached ? "" : " ") + symbol_alias(entry);
  return digits + " " + word_alias(entry, plural);
}

NumericValue round_significant(const NumericValue& v, int sig) {
  NumericValue g = from_grid(BigInt(1), v.magnitude_order() - (sig - 1));
  return v.round_to_multiple_of(g);
}

}  // namespace

std::vector<Probe> gen_scale(const Hypothesis& h, const Table&, ProbeMode mode,
                             const GenerationConfig& cfg,
                             const UnitCatalog& catalog) {
  std::vector<Probe> out;
  bool flip = mode == ProbeMode::kFlip;
  int produced = 0;
  size_t occ = 0;
  bool saw = false;
  for (const Mention& m : h.mentions) {
    if (m.kind != MentionKind::kMeasuredQuantity) continue;
    const UnitEntry* entry = catalog.find(m.unit);
    if (!entry) continue;
    saw = true;
    if (produced >= cfg.max_probes_per_hypothesis) break;
    std::string alias = surface_alias(h.text, m, *entry);
    bool sym = alias == symbol_alias(*entry);
    bool attached = m.end - alias.size() == m.num_end;
    std::string body = slice(h.text, m.begin, m.end - alias.size());
    while (!body.empty() && body.back() == ' ') body.pop_back();

    // conversion sub-mode
    {
      const std::string submode = "conversion";
      uint64_t seed = derive_probe_seed(
          cfg.master_seed, h.id, ReasoningType::kScale,
          submode + (flip ? "/flip" : "/preserve"), occ);
      Rng rng(seed);
      if (!flip) {
        std::optional<std::string> adj = catalog.adjacent_unit(entry->id, -1);
        if (adj) {
          bool exact = false;
          NumericValue conv = catalog.convert(m.value, entry->id, *adj, 15, &exact);
          if (exact) {
            const UnitEntry& ae = catalog.require(*adj);
            Probe p = start_probe(h, ReasoningType::kScale, submode, false, occ, seed);
            std::string digits = render_digits(conv, num_is_grouped(h.text, m));
            p.edits.push_back(make_edit(
                h.text, m.begin, m.end,
                render_measured(digits, ae, sym, attached, wants_plural(conv)),
                "scale-convert"));
            finish_probe(p, h);
            out.push_back(std::move(p));
            ++produced;
          }
        }
      } else {
        std::optional<std::string> cross = catalog.cross_system_unit(entry->id);
        if (cross) {
          const UnitEntry& ce = catalog.require(*cross);
          NumericValue truth = catalog.convert(m.value, entry->id, *cross, 15);
          NumericValue true_rounded = round_significant(truth, 2);
          NumericValue wrong = true_rounded;
          for (int tries = 0; tries < kResampleLimit; ++tries) {
            bool high = rng.next_bool();
            int pm = static_cast<int>(
                rng.between(high ? int64_t(cfg.scale_corrupt_hi_min * 1000)
                                 : int64_t(cfg.scale_corrupt_lo_min * 1000),
                            high ? int64_t(cfg.scale_corrupt_hi_max * 1000)
                                 : int64_t(cfg.scale_corrupt_lo_max * 1000)));
            wrong = round_significant(truth.times_ratio(pm, 1000, 30), 2);
            if (wrong != true_rounded && wrong != truth) break;
          }
          if (wrong != true_rounded && wrong != truth) {
            Probe p = start_probe(h, ReasoningType::kScale, submode, true, occ, seed);
            p.edits.push_back(make_edit(
                h.text, m.begin, m.end,
                render_measured(wrong.to_string(), ce, sym, attached,
                                wants_plural(wrong)),
                "scale-misconvert"));
            finish_probe(p, h);
            out.push_back(std::move(p));
            ++produced;
          }
        }
      }
    }

    // mapping sub-mode
    if (produced < cfg.max_probes_per_hypothesis) {
      const std::string submode = "mapping";
      uint64_t seed = derive_probe_seed(
          cfg.master_seed, h.id, ReasoningType::kScale,
          submode + (flip ? "/flip" : "/preserve"), occ);
      Rng rng(seed);
      if (!flip) {
        std::string target = sym ? word_alias(*entry, wants_plural(m.value))
                                 : symbol_alias(*entry);
        if (target != alias) {
          Probe p = start_probe(h, ReasoningType::kScale, submode, false, occ, seed);
          std::string sep = sym || !attached ? " " : "";
          (void)sep;
          p.edits.push_back(make_edit(h.text, m.begin, m.end,
                                      body + " " + target, "scale-alias"));
          finish_probe(p, h);
          out.push_back(std::move(p));
          ++produced;
        }
      } else {
        static const char* const kFamilies[] = {"length", "mass", "time",
                                                "volume", "speed"};
        std::vector<std::string> others;
        for (const char* f : kFamilies)
          if (entry->family != f) others.push_back(f);
        const std::string& family = others[rng.below(others.size())];
        const UnitEntry* base_unit = nullptr;
        for (const UnitEntry& e : catalog.entries()) {
          if (e.family == family && e.factor_num == e.factor_den) {
            base_unit = &e;
            break;
          }
        }
        if (base_unit) {
          Probe p = start_probe(h, ReasoningType::kScale, submode, true, occ, seed);
          p.edits.push_back(make_edit(
              h.text, m.begin, m.end,
              body + " " + word_alias(*base_unit, wants_plural(m.value)),
              "scale-unitswap"));
          finish_probe(p, h);
          out.push_back(std::move(p));
          ++produced;
        }
      }
    }
    ++occ;
  }
  if (!saw) throw NoApplicableMention("no measured quantity with a cataloged unit");
  return out;
}

// ---------------------------------------------------------------------------
// Comparison: signal word plus a threshold grounded against a table value.

std::vector<Probe> gen_comparison(const Hypothesis& h, const Table& t,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog& catalog) {
  std::optional<ComparisonGround> g = ground_comparison(h, t, catalog);
  if (!g) throw NoApplicableMention("no grounded comparison signal");
  const Mention& m = h.mentions[g->mention_idx];
  const NumericValue& x = m.value;
  const NumericValue& v = g->table_value;
  int exp = grid_exp(m);
  std::string old_word = slice(h.text, g->signal.begin, g->signal.end);

  std::vector<Probe> out;
  if (mode == ProbeMode::kPreserve) {
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kComparison,
                                      "preserve-number/preserve", 0);
    Rng rng(seed);
    NumericValue x2 = sample_threshold(rng, v, x, exp);
    Probe p = start_probe(h, ReasoningType::kComparison, "preserve-number",
                          false, 0, seed);
    p.edits.push_back(value_edit(h.text, m, x2, "comparison-threshold"));
    finish_probe(p, h);
    out.push_back(std::move(p));
  } else {
    {
      uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                        ReasoningType::kComparison,
                                        "flip-word/flip", 0);
      Probe p = start_probe(h, ReasoningType::kComparison, "flip-word", true, 0,
                            seed);
      p.edits.push_back(make_edit(h.text, g->signal.begin, g->signal.end,
                                  capitalize_like(old_word, g->signal.entry->opposite),
                                  "comparison-word"));
      finish_probe(p, h);
      out.push_back(std::move(p));
    }
    {
      uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                        ReasoningType::kComparison,
                                        "flip-both/flip", 0);
      Rng rng(seed);
      NumericValue x2 = sample_threshold(rng, v, x, exp);
      Probe p = start_probe(h, ReasoningType::kComparison, "flip-both", true, 0,
                            seed);
      p.edits.push_back(make_edit(h.text, g->signal.begin, g->signal.end,
                                  capitalize_like(old_word, g->signal.entry->opposite),
                                  "comparison-word"));
      p.edits.push_back(value_edit(h.text, m, x2, "comparison-threshold"));
      finish_probe(p, h);
      out.push_back(std::move(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation: round per magnitude tier and hedge, or mis-round for flips.

namespace {

bool already_hedged(const std::string& text, size_t begin) {
  static const char* const kHedges[] = {"about",  "approximately", "around",
                                        "roughly", "nearly",       "almost",
                                        "circa"};
  size_t from = begin > 20 ? begin - 20 : 0;
  std::string window = lower(text.substr(from, begin - from));
  for (const char* w : kHedges) {
    size_t pos = window.rfind(w);
    if (pos != std::string::npos && boundary_at(window, pos, std::strlen(w))) {
      return true;
    }
  }
  return false;
}

bool approximation_eligible(const Mention& m) {
  switch (m.kind) {
    case MentionKind::kDate:
    case MentionKind::kTime:
    case MentionKind::kOrdinal:
      return false;
    default:
      return m.value.abs() >= NumericValue(10);
  }
}

}  // namespace

std::vector<Probe> gen_approximation(const Hypothesis& h, const Table&,
                                     ProbeMode mode,
                                     const GenerationConfig& cfg,
                                     const UnitCatalog&) {
  std::vector<Probe> out;
  bool flip = mode == ProbeMode::kFlip;
  size_t occ = 0;
  int produced = 0;
  bool saw = false;
  for (const Mention& m : h.mentions) {
    if (!approximation_eligible(m)) continue;
    saw = true;
    if (produced >= cfg.max_probes_per_hypothesis) break;
    NumericValue g = approx_granularity(m.value, cfg);
    NumericValue rounded = m.value.round_to_multiple_of(g);
    size_t this_occ = occ++;
    if (rounded == m.value) continue;  // already round; nothing to hedge
    uint64_t seed = derive_probe_seed(
        cfg.master_seed, h.id, ReasoningType::kApproximation,
        flip ? "round/flip" : "round/preserve", this_occ);
    Rng rng(seed);
    NumericValue shown = rounded;
    if (flip) {
      NumericValue cand = rounded;
      for (int tries = 0; tries < kResampleLimit; ++tries) {
        auto steps = NumericValue(rng.between(1, cfg.approximation_max_steps));
        NumericValue delta = g.times(steps);
        cand = rng.next_bool() ? rounded.plus(delta) : rounded.minus(delta);
        if (cand != rounded && cand.sign() == m.value.sign() && !cand.is_zero()) break;
        cand = rounded.plus(delta);
      }
      if (cand == rounded || cand.is_zero()) continue;
      shown = cand;
    }
    std::string hedge = already_hedged(h.text, m.begin)
                            ? ""
                            : (rng.next_bool() ? "about " : "approximately ");
    NumericValue coeff = shown.shifted(-m.multiplier_pow10);
    std::string digits;
    if (m.format.pattern == Pattern::kCardinalWords) {
      digits = numeral_to_words(coeff, spoken_style());
    } else {
      digits = render_digits(coeff, num_is_grouped(h.text, m));
    }
    std::string rebuilt = hedge + slice(h.text, m.begin, m.num_begin) + digits +
                          slice(h.text, m.num_end, m.end);
    Probe p = start_probe(h, ReasoningType::kApproximation, "round", flip,
                          this_occ, seed);
    p.edits.push_back(make_edit(h.text, m.begin, m.end, rebuilt,
                                flip ? "approximation-misround"
                                     : "approximation-round"));
    finish_probe(p, h);
    out.push_back(std::move(p));
    ++produced;
  }
  if (!saw) throw NoApplicableMention("no mention with magnitude >= 10");
  return out;
}

// ---------------------------------------------------------------------------
// Range: n becomes "between a-b" with n inside; preserve only.

std::vector<Probe> gen_range(const Hypothesis& h, const Table&, ProbeMode mode,
                             const GenerationConfig& cfg, const UnitCatalog&) {
  if (mode == ProbeMode::kFlip) return {};
  std::vector<Probe> out;
  size_t occ = 0;
  int produced = 0;
  bool saw = false;
  for (const Mention& m : h.mentions) {
    switch (m.kind) {
      case MentionKind::kDate:
      case MentionKind::kTime:
      case MentionKind::kOrdinal:
      case MentionKind::kNegativeNumber:
        continue;
      default:
        break;
    }
    saw = true;
    if (produced >= cfg.max_probes_per_hypothesis) break;
    size_t this_occ = occ++;
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kRange,
                                      "bounds/preserve", this_occ);
    Rng rng(seed);
    NumericValue n = m.value;
    int exp = grid_exp(m);
    NumericValue g = from_grid(BigInt(1), exp);
    NumericValue r_lo, r_hi;
    if (n.abs() < NumericValue(10)) {
      r_lo = NumericValue(rng.between(cfg.range_small_radius_min,
                                      cfg.range_small_radius_max));
      r_hi = NumericValue(rng.between(cfg.range_small_radius_min,
                                      cfg.range_small_radius_max));
    } else {
      auto radius = [&]() {
        int pm = static_cast<int>(rng.between(
            int64_t(cfg.range_radius_pct_min * 1000),
            int64_t(cfg.range_radius_pct_max * 1000)));
        NumericValue r = n.abs().times_ratio(pm, 1000, 30).round_to_multiple_of(g);
        return r < g ? g : r;
      };
      r_lo = radius();
      r_hi = radius();
    }
    NumericValue a = n.minus(r_lo);
    NumericValue b = n.plus(r_hi);
    NumericValue ca = a.shifted(-m.multiplier_pow10);
    NumericValue cb = b.shifted(-m.multiplier_pow10);
    bool grouped = num_is_grouped(h.text, m);
    std::string sym = slice(h.text, m.begin, m.num_begin);
    std::string body = "between " + sym + render_digits(ca, grouped) + "-" +
                       sym + render_digits(cb, grouped);
    std::string rebuilt = body + slice(h.text, m.num_end, m.end);
    Probe p = start_probe(h, ReasoningType::kRange, "bounds", false, this_occ,
                          seed);
    p.edits.push_back(make_edit(h.text, m.begin, m.end, rebuilt, "range-bounds"));
    finish_probe(p, h);
    out.push_back(std::move(p));
    ++produced;
  }
  if (!saw) throw NoApplicableMention("no rangeable numeric mention");
  return out;
}

// ---------------------------------------------------------------------------
// Sorting: rank indicators against a numeric grid column.

std::vector<Probe> gen_sorting(const Hypothesis& h, const Table& t,
                               ProbeMode mode, const GenerationConfig& cfg,
                               const UnitCatalog& catalog) {
  std::optional<SortGround> g = ground_sorting(h, t, catalog);
  if (!g) throw NoApplicableMention("no rank indicator grounded to a grid column");
  long long len = static_cast<long long>(g->ranked.size());
  if (g->ind.rank > len) {
    throw NoApplicableMention("rank exceeds column length");
  }
  const Indicator& ind = g->ind;
  std::string old_ind = slice(h.text, ind.begin, ind.end);
  std::vector<Probe> out;

  if (mode == ProbeMode::kPreserve) {
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kSorting,
                                      "synonym/preserve", 0);
    std::string repl;
    if (ind.composite) {
      repl = render_rank_token(ind.rank, !ind.ord_is_suffix) + " " + ind.sup_lower;
    } else if (ind.dir != 0) {
      const char* const* set = ind.dir < 0 ? kDescWords : kAscWords;
      size_t n = ind.dir < 0 ? std::size(kDescWords) : std::size(kAscWords);
      repl = ind.sup_lower;
      for (size_t i = 0; i < n; ++i) {
        if (ind.sup_lower != set[i]) {
          repl = set[i];
          break;
        }
      }
    } else {
      repl = ind.rank == 1 ? "top" : render_rank_token(ind.rank, !ind.ord_is_suffix);
    }
    if (lower(repl) != lower(old_ind)) {
      Probe p = start_probe(h, ReasoningType::kSorting, "synonym", false, 0, seed);
      p.edits.push_back(make_edit(h.text, ind.begin, ind.end,
                                  capitalize_like(old_ind, repl), "sorting-synonym"));
      finish_probe(p, h);
      out.push_back(std::move(p));
    }
    return out;
  }

  // Flip: the claim's ground truth decides the new rank.
  std::optional<NumericValue> entity = g->entity_value;
  std::optional<NumericValue> linked;
  if (g->value_mention_idx) linked = h.mentions[*g->value_mention_idx].value;
  if (!entity && linked) entity = linked;
  if (!entity) throw NoApplicableMention("claim cannot be grounded to a row");
  long long true_rank = 0;
  for (long long i = 0; i < len; ++i) {
    if (g->ranked[i] == *entity) {
      true_rank = i + 1;
      break;
    }
  }
  if (true_rank == 0) throw NoApplicableMention("entity value missing from column");

  uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                    ReasoningType::kSorting, "rank/flip", 0);
  Rng rng(seed);
  long long k2 = 0;
  if (h.label == Label::kEntail) {
    if (ind.rank != true_rank) throw NoApplicableMention("base rank claim not verifiable");
    for (int tries = 0; tries < kResampleLimit; ++tries) {
      long long cand = rng.between(1, len);
      if (cand != ind.rank && g->ranked[cand - 1] != *entity) {
        k2 = cand;
        break;
      }
    }
  } else {
    // Correcting the rank flips a contradiction into an entailment.
    if (ind.rank == true_rank) throw NoApplicableMention("claim already true");
    k2 = true_rank;
  }
  if (k2 == 0) throw NoApplicableMention("no alternative rank available");

  Probe p = start_probe(h, ReasoningType::kSorting, "rank", true, 0, seed);
  std::string repl;
  if (ind.composite) {
    repl = render_rank_token(k2, ind.ord_is_suffix) + " " + ind.sup_lower;
    p.edits.push_back(make_edit(h.text, ind.begin, ind.end,
                                capitalize_like(old_ind, repl), "sorting-rank"));
  } else if (ind.dir != 0) {
    repl = render_rank_token(k2, false) + " " + ind.sup_lower;
    p.edits.push_back(make_edit(h.text, ind.begin, ind.end,
                                capitalize_like(old_ind, repl), "sorting-rank"));
  } else {
    repl = render_rank_token(k2, ind.ord_is_suffix);
    p.edits.push_back(make_edit(h.text, ind.begin, ind.end,
                                capitalize_like(old_ind, repl), "sorting-rank"));
  }
  if (linked) {
    const Mention& vm = h.mentions[*g->value_mention_idx];
    if (std::find(g->ranked.begin(), g->ranked.end(), vm.value) != g->ranked.end()) {
      p.edits.push_back(value_edit(h.text, vm, g->ranked[k2 - 1], "sorting-value"));
    }
  }
  finish_probe(p, h);
  out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic: the recorded derivation's result, exact or scaled away.

std::vector<Probe> gen_arithmetic(const Hypothesis& h, const Table&,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog&) {
  if (!h.arith) throw NoApplicableMention("no arithmetic derivation");
  const NumericValue& result = h.arith->result;
  const Mention* rm = nullptr;
  for (const Mention& m : h.mentions) {
    if (!m.is_date() && m.value == result) {
      rm = &m;
      break;
    }
  }
  if (!rm) throw NoApplicableMention("result value absent from text");

  std::vector<Probe> out;
  if (mode == ProbeMode::kPreserve) {
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kArithmetic,
                                      "exact/preserve", 0);
    Probe p = start_probe(h, ReasoningType::kArithmetic, "exact", false, 0, seed);
    p.text = h.text;  // identity: the text already carries the exact result
    out.push_back(std::move(p));
    return out;
  }

  uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                    ReasoningType::kArithmetic, "scaled/flip", 0);
  Rng rng(seed);
  int exp = grid_exp(*rm);
  NumericValue g = from_grid(BigInt(1), exp);
  NumericValue wrong = result;
  for (int tries = 0; tries < kResampleLimit && wrong == result; ++tries) {
    bool high = rng.next_bool();
    int pm = static_cast<int>(rng.between(
        high ? int64_t(cfg.arith_factor_hi_min * 1000)
             : int64_t(cfg.arith_factor_lo_min * 1000),
        high ? int64_t(cfg.arith_factor_hi_max * 1000)
             : int64_t(cfg.arith_factor_lo_max * 1000)));
    wrong = result.times_ratio(pm, 1000, 30).round_to_multiple_of(g);
  }
  if (wrong == result) throw NoApplicableMention("scaled result collapsed back");
  Probe p = start_probe(h, ReasoningType::kArithmetic, "scaled", true, 0, seed);
  p.edits.push_back(value_edit(h.text, *rm, wrong, "arithmetic-scaled"));
  finish_probe(p, h);
  out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Word problems: swap the recast answer for another value from its column.

std::vector<Probe> gen_wordproblem(const Hypothesis& h, const Table& t,
                                   ProbeMode mode, const GenerationConfig& cfg,
                                   const UnitCatalog& catalog) {
  if (mode == ProbeMode::kPreserve) {
    // The unmodified recast is itself the trivially-true preserve case.
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kWordProblem,
                                      "identity/preserve", 0);
    Probe p = start_probe(h, ReasoningType::kWordProblem, "identity", false, 0,
                          seed);
    p.text = h.text;
    return {std::move(p)};
  }

  for (const MentionLink& link : link_mentions(h, t, catalog)) {
    if (link.year_match || !link.unit_from.empty()) continue;
    const Mention& m = h.mentions[link.hyp_mention];
    if (m.is_date()) continue;
    NumericColumn col;
    try {
      col = extract_numeric_column(t, link.col);
    } catch (const Error&) {
      continue;
    }
    std::vector<NumericValue> candidates;
    for (const NumericValue& v : col.values) {
      if (v != m.value) candidates.push_back(v);
    }
    if (candidates.empty()) {
      throw NoApplicableMention("answer column holds a single value");
    }
    uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                      ReasoningType::kWordProblem,
                                      "column/flip", 0);
    Rng rng(seed);
    NumericValue repl = candidates[rng.below(candidates.size())];
    Probe p = start_probe(h, ReasoningType::kWordProblem, "column", true, 0, seed);
    p.edits.push_back(value_edit(h.text, m, repl, "wordproblem-swap"));
    finish_probe(p, h);
    return {std::move(p)};
  }
  throw NoApplicableMention("answer not linked to a numeric column");
}

// ---------------------------------------------------------------------------
// Counterfactual tables: swap same-kind cells within a column.

bool counterfactual_admissible(const Hypothesis& h) {
  return !h.mentions.empty();
}

namespace {

struct CellRef {
  size_t row;
  size_t col;
};

std::vector<size_t> swap_partners(const Table& t, size_t col, size_t row,
                                  const Mention& cm) {
  std::vector<size_t> rows;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r == row || col >= t.rows[r].size()) continue;
    for (const Mention& m2 : t.rows[r][col].mentions) {
      bool same_kind = m2.kind == cm.kind;
      bool differs = cm.is_date() ? m2.date != cm.date : m2.value != cm.value;
      if (same_kind && differs) {
        rows.push_back(r);
        break;
      }
    }
  }
  return rows;
}

Table swapped_table(const Table& t, const TableSwap& sw, const std::string& id,
                    const UnitCatalog& catalog) {
  Table nt = t;
  nt.id = id;
  std::swap(nt.rows[sw.row_a][sw.col_a].raw, nt.rows[sw.row_b][sw.col_b].raw);
  annotate(nt, catalog);
  return nt;
}

bool has_link_at(const std::vector<MentionLink>& links, size_t hyp_mention,
                 size_t row, size_t col) {
  for (const MentionLink& l : links) {
    if (l.hyp_mention == hyp_mention && l.row == row && l.col == col) return true;
  }
  return false;
}

}  // namespace

std::vector<Probe> gen_counterfactual(const Hypothesis& h, const Table& t,
                                      ProbeMode mode,
                                      const GenerationConfig& cfg,
                                      const UnitCatalog& catalog,
                                      std::vector<Table>* out_tables) {
  std::vector<MentionLink> links = link_mentions(h, t, catalog);
  if (mode == ProbeMode::kFlip) {
    if (links.empty()) throw NoApplicableMention("no grounded mention to unseat");
    for (const MentionLink& link : links) {
      const Mention& cm = t.at(link.row, link.col).mentions[link.cell_mention];
      std::vector<size_t> partners = swap_partners(t, link.col, link.row, cm);
      if (partners.empty()) continue;
      uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                        ReasoningType::kCounterfactual,
                                        "swap/flip", 0);
      Rng rng(seed);
      size_t partner = partners[rng.below(partners.size())];
      TableSwap sw{link.row, link.col, partner, link.col};
      std::string nid = t.id + "-cf-" + h.id + "-f0";
      Table nt = swapped_table(t, sw, nid, catalog);
      std::vector<MentionLink> relinked = link_mentions(h, nt, catalog);
      if (has_link_at(relinked, link.hyp_mention, link.row, link.col)) {
        continue;  // the swap failed to break the link; try the next anchor
      }
      Probe p = start_probe(h, ReasoningType::kCounterfactual, "swap", true, 0,
                            seed);
      p.text = h.text;
      p.table_ref = nid;
      p.table_swap = sw;
      out_tables->push_back(std::move(nt));
      return {std::move(p)};
    }
    throw NoApplicableMention("no same-kind swap partner in any linked column");
  }

  // Preserve: swap two same-kind cells the hypothesis does not touch. The
  // column multiset is unchanged, so rank and value claims keep their truth.
  std::vector<std::pair<TableSwap, int>> options;
  for (size_t c = 0; c < t.column_count(); ++c) {
    for (size_t r1 = 0; r1 < t.rows.size(); ++r1) {
      if (c >= t.rows[r1].size()) continue;
      bool r1_linked = false;
      for (const MentionLink& l : links)
        if (l.row == r1 && l.col == c) r1_linked = true;
      if (r1_linked) continue;
      for (const Mention& cm : t.rows[r1][c].mentions) {
        for (size_t r2 : swap_partners(t, c, r1, cm)) {
          if (r2 <= r1) continue;
          bool r2_linked = false;
          for (const MentionLink& l : links)
            if (l.row == r2 && l.col == c) r2_linked = true;
          if (!r2_linked) options.push_back({TableSwap{r1, c, r2, c}, 0});
        }
        break;
      }
    }
  }
  if (options.empty()) {
    throw NoApplicableMention("no untouched same-kind cell pair to swap");
  }
  uint64_t seed = derive_probe_seed(cfg.master_seed, h.id,
                                    ReasoningType::kCounterfactual,
                                    "swap-other/preserve", 0);
  Rng rng(seed);
  for (int tries = 0; tries < kResampleLimit; ++tries) {
    const TableSwap& sw = options[rng.below(options.size())].first;
    std::string nid = t.id + "-cf-" + h.id + "-p0";
    Table nt = swapped_table(t, sw, nid, catalog);
    std::vector<MentionLink> relinked = link_mentions(h, nt, catalog);
    bool same = relinked.size() == links.size();
    for (size_t i = 0; same && i < links.size(); ++i) {
      same = relinked[i].hyp_mention == links[i].hyp_mention &&
             relinked[i].row == links[i].row && relinked[i].col == links[i].col;
    }
    if (!same) continue;
    Probe p = start_probe(h, ReasoningType::kCounterfactual, "swap-other",
                          false, 0, seed);
    p.text = h.text;
    p.table_ref = nid;
    p.table_swap = sw;
    out_tables->push_back(std::move(nt));
    return {std::move(p)};
  }
  throw NoApplicableMention("every candidate swap disturbed the links");
}

// ---------------------------------------------------------------------------

ProbeSet generate_all(const Corpus& corpus, const GenerationConfig& cfg,
                      const UnitCatalog& catalog) {
  ProbeSet out;
  std::map<std::string, const Table*> tables;
  for (const Table& t : corpus.tables) tables[t.id] = &t;

  std::vector<const Hypothesis*> hyps;
  hyps.reserve(corpus.hypotheses.size());
  for (const Hypothesis& h : corpus.hypotheses) hyps.push_back(&h);
  std::sort(hyps.begin(), hyps.end(),
            [](const Hypothesis* a, const Hypothesis* b) { return a->id < b->id; });

  for (const Hypothesis* h : hyps) {
    auto it = tables.find(h->table_id);
    if (it == tables.end()) {
      out.skip_report.push_back(h->id + ": unknown table " + h->table_id);
      continue;
    }
    const Table& t = *it->second;
    for (ReasoningType type : all_reasoning_types()) {
      if (!cfg.enabled[static_cast<size_t>(type)]) continue;
      if (filter_candidates({*h}, type).empty()) continue;
      for (ProbeMode mode : {ProbeMode::kPreserve, ProbeMode::kFlip}) {
        if (mode == ProbeMode::kPreserve && !cfg.gen_preserve) continue;
        if (mode == ProbeMode::kFlip && !cfg.gen_flip) continue;
        try {
          std::vector<Probe> probes;
          switch (type) {
            case ReasoningType::kNumeration:
              probes = gen_numeration(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kHeterogeneous:
              probes = gen_heterogeneous(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kNegative:
              probes = gen_negative(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kScale:
              probes = gen_scale(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kComparison:
              probes = gen_comparison(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kApproximation:
              probes = gen_approximation(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kRange:
              probes = gen_range(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kSorting:
              probes = gen_sorting(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kArithmetic:
              probes = gen_arithmetic(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kWordProblem:
              probes = gen_wordproblem(*h, t, mode, cfg, catalog);
              break;
            case ReasoningType::kCounterfactual:
              if (!counterfactual_admissible(*h)) {
                throw NoApplicableMention("hypothesis carries no numeric mention");
              }
              probes = gen_counterfactual(*h, t, mode, cfg, catalog,
                                          &out.counterfactual_tables);
              break;
          }
          for (Probe& p : probes) out.probes.push_back(std::move(p));
        } catch (const Error& e) {
          out.skip_report.push_back(
              h->id + " " + reasoning_type_name(type) + "/" +
              (mode == ProbeMode::kPreserve ? "preserve" : "flip") + ": " +
              e.what());
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

njson config_to_json(const GenerationConfig& cfg) {
  njson j;
  j["master_seed"] = cfg.master_seed;
  njson enabled = njson::array();
  for (ReasoningType t : all_reasoning_types()) {
    if (cfg.enabled[static_cast<size_t>(t)]) enabled.push_back(reasoning_type_name(t));
  }
  j["enabled"] = enabled;
  j["gen_preserve"] = cfg.gen_preserve;
  j["gen_flip"] = cfg.gen_flip;
  j["flip_replacement_halfwidth"] = cfg.flip_replacement_halfwidth;
  j["range_small_radius_min"] = cfg.range_small_radius_min;
  j["range_small_radius_max"] = cfg.range_small_radius_max;
  j["range_radius_pct_min"] = cfg.range_radius_pct_min;
  j["range_radius_pct_max"] = cfg.range_radius_pct_max;
  j["approximation_max_steps"] = cfg.approximation_max_steps;
  njson tiers = njson::array();
  for (const ApproxTier& t : cfg.approximation_tiers) {
    tiers.push_back(njson{{"threshold", t.threshold.to_string()},
                          {"granularity_exp", t.granularity_exp}});
  }
  j["approximation_tiers"] = tiers;
  j["arith_factor_hi_min"] = cfg.arith_factor_hi_min;
  j["arith_factor_hi_max"] = cfg.arith_factor_hi_max;
  j["arith_factor_lo_min"] = cfg.arith_factor_lo_min;
  j["arith_factor_lo_max"] = cfg.arith_factor_lo_max;
  j["scale_corrupt_lo_min"] = cfg.scale_corrupt_lo_min;
  j["scale_corrupt_lo_max"] = cfg.scale_corrupt_lo_max;
  j["scale_corrupt_hi_min"] = cfg.scale_corrupt_hi_min;
  j["scale_corrupt_hi_max"] = cfg.scale_corrupt_hi_max;
  j["date_flip_year_window"] = cfg.date_flip_year_window;
  j["max_probes_per_hypothesis"] = cfg.max_probes_per_hypothesis;
  return j;
}

GenerationConfig config_from_json(const njson& j, const std::string& locus) {
  GenerationConfig cfg;
  try {
    cfg.master_seed = j.at("master_seed").get<uint64_t>();
    cfg.enabled.fill(false);
    for (const auto& name : j.at("enabled")) {
      cfg.enabled[static_cast<size_t>(
          reasoning_type_from_name(name.get<std::string>()))] = true;
    }
    if (j.contains("gen_preserve")) cfg.gen_preserve = j.at("gen_preserve").get<bool>();
    if (j.contains("gen_flip")) cfg.gen_flip = j.at("gen_flip").get<bool>();
    cfg.flip_replacement_halfwidth = j.at("flip_replacement_halfwidth").get<double>();
    cfg.range_small_radius_min = j.at("range_small_radius_min").get<int>();
    cfg.range_small_radius_max = j.at("range_small_radius_max").get<int>();
    cfg.range_radius_pct_min = j.at("range_radius_pct_min").get<double>();
    cfg.range_radius_pct_max = j.at("range_radius_pct_max").get<double>();
    cfg.approximation_max_steps = j.at("approximation_max_steps").get<int>();
    for (const auto& t : j.at("approximation_tiers")) {
      cfg.approximation_tiers.push_back(
          {NumericValue::parse(t.at("threshold").get<std::string>()),
           t.at("granularity_exp").get<int>()});
    }
    cfg.arith_factor_hi_min = j.at("arith_factor_hi_min").get<double>();
    cfg.arith_factor_hi_max = j.at("arith_factor_hi_max").get<double>();
    cfg.arith_factor_lo_min = j.at("arith_factor_lo_min").get<double>();
    cfg.arith_factor_lo_max = j.at("arith_factor_lo_max").get<double>();
    cfg.scale_corrupt_lo_min = j.at("scale_corrupt_lo_min").get<double>();
    cfg.scale_corrupt_lo_max = j.at("scale_corrupt_lo_max").get<double>();
    cfg.scale_corrupt_hi_min = j.at("scale_corrupt_hi_min").get<double>();
    cfg.scale_corrupt_hi_max = j.at("scale_corrupt_hi_max").get<double>();
    cfg.date_flip_year_window = j.at("date_flip_year_window").get<int>();
    cfg.max_probes_per_hypothesis = j.at("max_probes_per_hypothesis").get<int>();
  } catch (const njson::exception& e) {
    throw ParseError(locus + ": bad config record: " + e.what());
  }
  return cfg;
}

}  // namespace

void write_probes(std::ostream& os, const ProbeSet& set,
                  const GenerationConfig& cfg) {
  njson header;
  header["record"] = "header";
  header["artifact"] = "probes";
  header["version"] = kArtifactVersion;
  header["seed"] = cfg.master_seed;
  header["config"] = config_to_json(cfg);
  os << header.dump() << "\n";
  for (const Probe& p : set.probes) {
    njson j;
    j["record"] = "probe";
    j["probe_id"] = p.id;
    j["base_id"] = p.base_id;
    j["type"] = reasoning_type_name(p.type);
    j["level"] = reasoning_level_name(reasoning_level(p.type));
    j["flip"] = p.flip;
    j["expected_label"] = label_name(p.expected_label);
    if (p.table_ref.empty()) {
      j["text"] = p.text;
    } else {
      j["table_ref"] = p.table_ref;
    }
    njson edits = njson::array();
    for (const EditRecord& e : p.edits) {
      edits.push_back(njson{{"span", njson::array({e.begin, e.end})},
                            {"old", e.old_surface},
                            {"new", e.new_surface},
                            {"rule", e.rule}});
    }
    j["edits"] = edits;
    if (p.table_swap) {
      j["table_swap"] = njson{{"row_a", p.table_swap->row_a},
                              {"col_a", p.table_swap->col_a},
                              {"row_b", p.table_swap->row_b},
                              {"col_b", p.table_swap->col_b}};
    }
    j["seed"] = p.seed;
    os << j.dump() << "\n";
  }
}

ProbeFile load_probes(std::istream& in, const std::string& locus) {
  ProbeFile file;
  std::string line;
  size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = locus + ":" + std::to_string(lineno);
    njson j;
    try {
      j = njson::parse(line);
    } catch (const njson::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    try {
      std::string record = j.at("record").get<std::string>();
      if (record == "header") {
        if (j.at("artifact").get<std::string>() != "probes") {
          throw ParseError(where + ": not a probe artifact");
        }
        file.artifact_version = j.at("version").get<std::string>();
        file.config = config_from_json(j.at("config"), where);
        have_header = true;
      } else if (record == "probe") {
        if (!have_header) throw ParseError(where + ": probe before header");
        Probe p;
        p.id = j.at("probe_id").get<std::string>();
        p.base_id = j.at("base_id").get<std::string>();
        p.type = reasoning_type_from_name(j.at("type").get<std::string>());
        p.flip = j.at("flip").get<bool>();
        auto label = label_from_name(j.at("expected_label").get<std::string>());
        if (!label) throw ParseError(where + ": unknown label");
        p.expected_label = *label;
        if (j.contains("text")) p.text = j.at("text").get<std::string>();
        if (j.contains("table_ref")) p.table_ref = j.at("table_ref").get<std::string>();
        for (const auto& e : j.at("edits")) {
          EditRecord ed;
          ed.begin = e.at("span").at(0).get<size_t>();
          ed.end = e.at("span").at(1).get<size_t>();
          ed.old_surface = e.at("old").get<std::string>();
          ed.new_surface = e.at("new").get<std::string>();
          ed.rule = e.at("rule").get<std::string>();
          p.edits.push_back(std::move(ed));
        }
        if (j.contains("table_swap")) {
          const auto& s = j.at("table_swap");
          p.table_swap = TableSwap{
              s.at("row_a").get<size_t>(), s.at("col_a").get<size_t>(),
              s.at("row_b").get<size_t>(), s.at("col_b").get<size_t>()};
        }
        p.seed = j.at("seed").get<uint64_t>();
        file.set.probes.push_back(std::move(p));
      } else {
        throw ParseError(where + ": unknown record type " + record);
      }
    } catch (const njson::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError(locus + ": missing header record");
  return file;
}

void write_probe_stats(std::ostream& os, const ProbeSet& set,
                       const GenerationConfig& cfg) {
  os << "# artifact=probe-stats version=" << kArtifactVersion
     << " seed=" << cfg.master_seed << "\n";
  os << "type,count\n";
  auto counts = set.counts();
  for (ReasoningType t : all_reasoning_types()) {
    size_t n = 0;
    for (bool flip : {false, true}) {
      auto it = counts.find({t, flip});
      if (it != counts.end()) n += it->second;
    }
    os << reasoning_type_name(t) << "," << n << "\n";
  }
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

struct EditCheckContext {
  const Hypothesis* base;
  const Table* table;
  const UnitCatalog* catalog;
  const GenerationConfig* cfg;
};

const Mention* mention_covering(const Hypothesis& h, const EditRecord& e) {
  for (const Mention& m : h.mentions) {
    if (e.begin >= m.begin && e.end <= m.end) return &m;
  }
  return nullptr;
}

// Reconstructs the absolute value an edited numeric sub-span denotes,
// honoring the base mention's multiplier word.
NumericValue edited_full_value(const EditCheckContext& ctx, const EditRecord& e,
                               const std::string& surface) {
  NumericValue coeff = parse_value_surface(surface, *ctx.catalog);
  const Mention* m = mention_covering(*ctx.base, e);
  int mult = m ? m->multiplier_pow10 : 0;
  return coeff.shifted(mult);
}

std::string strip_hedge(const std::string& s) {
  std::string low = lower(s);
  for (const char* w : {"about ", "approximately "}) {
    if (starts_with(low, w)) return s.substr(std::string(w).size());
  }
  return s;
}

std::optional<std::pair<NumericValue, NumericValue>> parse_between(
    const std::string& s, const UnitCatalog& catalog) {
  std::string low = lower(s);
  if (!starts_with(low, "between ")) return std::nullopt;
  std::string rest = s.substr(8);
  size_t split = std::string::npos;
  for (size_t i = 1; i < rest.size(); ++i) {
    if (rest[i] == '-' && std::isdigit(static_cast<unsigned char>(rest[i - 1]))) {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return std::nullopt;
  try {
    return std::make_pair(parse_value_surface(rest.substr(0, split), catalog),
                          parse_value_surface(rest.substd::string::npos
                          ));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::string> validate_probes(const ProbeFile& file,
                                         const Corpus& corpus,
                                         const UnitCatalog& catalog) {
  std::vector<std::string> violations;
  std::map<std::string, const Hypothesis*> hyps;
  for (const Hypothesis& h : corpus.hypotheses) hyps[h.id] = &h;
  std::map<std::string, const Table*> tables;
  for (const Table& t : corpus.tables) tables[t.id] = &t;
  std::map<std::string, const Table*> cf_tables;
  for (const Table& t : file.set.counterfactual_tables) cf_tables[t.id] = &t;

  for (const Probe& p : file.set.probes) {
    auto flag = [&](const std::string& what) {
      violations.push_back("probe " + p.id + ": " + what);
    };
    auto hit = hyps.find(p.base_id);
    if (hit == hyps.end()) {
      flag("DanglingRef: unknown base id " + p.base_id);
      continue;
    }
    const Hypothesis& base = *hit->second;
    auto tit = tables.find(base.table_id);
    if (tit == tables.end()) {
      flag("DanglingRef: base table missing " + base.table_id);
      continue;
    }
    const Table& table = *tit->second;
    EditCheckContext ctx{&base, &table, &catalog, &file.config};

    Label expect = p.flip ? invert(base.label) : base.label;
    if (p.expected_label != expect) {
      flag("label algebra broken: expected " + std::string(label_name(expect)) +
           ", recorded " + label_name(p.expected_label));
    }

    if (p.table_ref.empty()) {
      try {
        std::string applied = apply_edits(base.text, p.edits);
        if (applied != p.text) flag("edits do not reproduce the probe text");
        if (revert_edits(p.text, p.edits) != base.text) {
          flag("edits do not revert to the base text");
        }
      } catch (const Error& e) {
        flag(std::string("edit application failed: ") + e.what());
        continue;
      }
    } else {
      auto cit = cf_tables.find(p.table_ref);
      if (cit == cf_tables.end()) {
        flag("DanglingRef: unknown counterfactual table " + p.table_ref);
        continue;
      }
      if (!p.table_swap) {
        flag("counterfactual probe lacks its table swap record");
        continue;
      }
      const TableSwap& sw = *p.table_swap;
      Table restored = *cit->second;
      if (sw.row_a >= restored.rows.size() || sw.row_b >= restored.rows.size() ||
          sw.col_a >= restored.rows[sw.row_a].size() ||
          sw.col_b >= restored.rows[sw.row_b].size()) {
        flag("table swap out of bounds");
        continue;
      }
      std::swap(restored.rows[sw.row_a][sw.col_a].raw,
                restored.rows[sw.row_b][sw.col_b].raw);
      bool same = restored.rows.size() == table.rows.size();
      for (size_t r = 0; same && r < table.rows.size(); ++r) {
        same = restored.rows[r].size() == table.rows[r].size();
        for (size_t c = 0; same && c < table.rows[r].size(); ++c) {
          same = restored.rows[r][c].raw == table.rows[r][c].raw;
        }
      }
      if (!same) flag("swapping back does not restore the base table");

      Table annotated = *cit->second;
      annotate(annotated, catalog);
      std::vector<MentionLink> before = link_mentions(base, table, catalog);
      std::vector<MentionLink> after = link_mentions(base, annotated, catalog);
      if (p.flip) {
        bool targeted = false;
        for (const MentionLink& l : before) {
          if ((l.row == sw.row_a && l.col == sw.col_a) ||
              (l.row == sw.row_b && l.col == sw.col_b)) {
            targeted = true;
            if (has_link_at(after, l.hyp_mention, l.row, l.col)) {
              flag("counterfactual swap left the targeted link intact");
            }
          }
        }
        if (!targeted) flag("counterfactual swap touches no linked cell");
      } else {
        bool same_links = before.size() == after.size();
        for (size_t i = 0; same_links && i < before.size(); ++i) {
          same_links = before[i].hyp_mention == after[i].hyp_mention &&
                       before[i].row == after[i].row &&
                       before[i].col == after[i].col;
        }
        if (!same_links) flag("preserving swap disturbed the links");
      }
    }

    for (const EditRecord& e : p.edits) {
      try {
        if (e.rule == "numeration-convert") {
          NumericValue a = parse_value_surface(e.old_surface, catalog);
          NumericValue b = parse_value_surface(e.new_surface, catalog);
          if (a != b) flag("preserve edit changed the value: " + e.new_surface);
        } else if (e.rule == "numeration-replace") {
          NumericValue a = edited_full_value(ctx, e, e.old_surface);
          NumericValue b = edited_full_value(ctx, e, e.new_surface);
          if (a == b) flag("flip edit kept the value");
          if (!a.is_zero()) {
            int pm = static_cast<int>(file.config.flip_replacement_halfwidth * 1000);
            NumericValue lo = a.minus(a.abs().times_ratio(pm, 1000, 30));
            NumericValue hi = a.plus(a.abs().times_ratio(pm, 1000, 30));
            if (b < lo || b > hi) flag("numeration flip outside the window");
          } else if (b < NumericValue(1) || b > NumericValue(9)) {
            flag("zero flip outside 1..9");
          }
        } else if (e.rule == "heterogeneous-reformat" ||
                   e.rule == "heterogeneous-replace") {
          bool must_differ = e.rule == "heterogeneous-replace";
          auto od = try_parse_date(e.old_surface);
          auto nd = try_parse_date(e.new_surface);
          if (od && nd) {
            if (must_differ ? *od == *nd : !(*od == *nd)) {
              flag("date edit has the wrong identity: " + e.new_surface);
            }
            if (must_differ &&
                std::llabs(nd->year - od->year) > file.config.date_flip_year_window) {
              flag("date flip outside the year window");
            }
          } else {
            NumericValue a = parse_value_surface(e.old_surface, catalog);
            NumericValue b = parse_value_surface(e.new_surface, catalog);
            if (must_differ ? a == b : a != b) {
              flag("representation edit has the wrong identity: " + e.new_surface);
            }
          }
        } else if (e.rule == "negative-wordform") {
          NumericValue a = parse_value_surface(e.old_surface, catalog);
          NumericValue b = parse_value_surface(e.new_surface, catalog);
          if (a != b) flag("negative wording changed the value");
        } else if (e.rule == "negative-dropsign") {
          NumericValue a = parse_value_surface(e.old_surface, catalog);
          NumericValue b = parse_value_surface(e.new_surface, catalog);
          if (b != a.negated()) flag("sign drop did not negate the value");
        } else if (e.rule == "scale-convert" || e.rule == "scale-misconvert" ||
                   e.rule == "scale-alias" || e.rule == "scale-unitswap") {
          std::vector<Mention> om = scan_mentions(e.old_surface, catalog);
          std::vector<Mention> nm = scan_mentions(e.new_surface, catalog);
          if (om.size() != 1 || nm.size() != 1 ||
              om[0].kind != MentionKind::kMeasuredQuantity ||
              nm[0].kind != MentionKind::kMeasuredQuantity) {
            flag("scale edit is not a measured quantity: " + e.new_surface);
            continue;
          }
          const UnitEntry& ou = catalog.require(om[0].unit);
          const UnitEntry& nu = catalog.require(nm[0].unit);
          if (e.rule == "scale-convert") {
            bool exact = false;
            NumericValue back =
                catalog.convert(nm[0].value, nu.id, ou.id, 15, &exact);
            if (!exact || back != om[0].value) {
              flag("unit conversion not value-preserving: " + e.new_surface);
            }
          } else if (e.rule == "scale-misconvert") {
            if (ou.family != nu.family) {
              flag("misconversion crossed families");
            } else {
              NumericValue back = catalog.convert(nm[0].value, nu.id, ou.id, 15);
              double ratio = back.to_double() / om[0].value.to_double();
              if (ratio > 0.96 && ratio < 1.04) {
                flag("misconversion too close to the truth");
              }
            }
          } else if (e.rule == "scale-alias") {
            if (ou.id != nu.id || om[0].value != nm[0].value) {
              flag("alias swap changed value or unit");
            }
          } else {
            if (ou.family == nu.family) flag("unit swap stayed in the family");
            if (om[0].value != nm[0].value) flag("unit swap changed the number");
          }
        } else if (e.rule == "comparison-word") {
          std::string a = lower(e.old_surface);
          std::string b = lower(e.new_surface);
          bool ok = false;
          for (const SignalEntry& s : kSignals) {
            if (a == s.word && b == s.opposite) ok = true;
          }
          if (!ok) flag("comparison words are not opposites: " + b);
        } else if (e.rule == "comparison-threshold") {
          auto g = ground_comparison(base, table, catalog);
          if (!g) {
            flag("comparison grounding vanished from the base");
            continue;
          }
          const Mention& m = base.mentions[g->mention_idx];
          NumericValue x = m.value;
          NumericValue x2 = edited_full_value(ctx, e, e.new_surface);
          const NumericValue& v = g->table_value;
          if (x2 == x) flag("threshold unchanged");
          if ((x < v) != (x2 < v)) flag("threshold changed sides");
          NumericValue margin = v.minus(x2).abs();
          NumericValue floor10 = v.minus(x).abs().times_ratio(1, 10, 30);
          if (margin < floor10) flag("threshold margin under 10% of the gap");
        } else if (e.rule == "approximation-round" ||
                   e.rule == "approximation-misround") {
          NumericValue shown =
              edited_full_value(ctx, e, strip_hedge(e.new_surface));
          const Mention* m = mention_covering(base, e);
          if (!m) {
            flag("approximation edit covers no mention");
            continue;
          }
          NumericValue g = approx_granularity(m->value, file.config);
          NumericValue correct = m->value.round_to_multiple_of(g);
          if (e.rule == "approximation-round") {
            if (shown != correct) flag("rounding disagrees with the tier table");
          } else {
            if (shown == correct) flag("misrounding equals the correct rounding");
            NumericValue diff = shown.minus(correct).abs();
            NumericValue steps = diff.divided_by(g, 15);
            if (!steps.is_integer() || steps < NumericValue(1) ||
                steps > NumericValue(file.config.approximation_max_steps)) {
              flag("misrounding not a whole granularity step away");
            }
          }
        } else if (e.rule == "range-bounds") {
          std::string surface = e.new_surface;
          const Mention* m = mention_covering(base, e);
          if (!m) {
            flag("range edit covers no mention");
            continue;
          }
          auto ab = parse_between(surface, catalog);
          if (!ab) {
            flag("range edit is not 'between a-b': " + surface);
            continue;
          }
          NumericValue lo = ab->first.shifted(m->multiplier_pow10);
          NumericValue hi = ab->second.shifted(m->multiplier_pow10);
          if (!(lo <= m->value && m->value <= hi)) {
            flag("base value escapes the range");
          }
          if (!(lo < hi)) flag("degenerate range bounds");
        } else if (e.rule == "sorting-rank" || e.rule == "sorting-synonym" ||
                   e.rule == "sorting-value") {
          // Handled probe-wide below; nothing per edit.
        } else if (e.rule == "arithmetic-scaled") {
          if (!base.arith) {
            flag("arithmetic flip without a derivation");
            continue;
          }
          NumericValue shown = edited_full_value(ctx, e, e.new_surface);
          if (shown == base.arith->result) flag("scaled result equals the truth");
          double ratio = shown.to_double() / base.arith->result.to_double();
          const GenerationConfig& c = file.config;
          bool in_lo = ratio >= c.arith_factor_lo_min - 0.02 &&
                       ratio <= c.arith_factor_lo_max + 0.02;
          bool in_hi = ratio >= c.arith_factor_hi_min - 0.02 &&
                       ratio <= c.arith_factor_hi_max + 0.02;
          if (!in_lo && !in_hi) flag("scaled result outside the factor bands");
        } else if (e.rule == "wordproblem-swap") {
          NumericValue shown = edited_full_value(ctx, e, e.new_surface);
          NumericValue old = edited_full_value(ctx, e, e.old_surface);
          if (shown == old) flag("word problem swap kept the value");
          bool found = false;
          for (size_t c = 0; c < table.column_count() && !found; ++c) {
            try {
              NumericColumn col = extract_numeric_column(table, c);
              for (const NumericValue& v : col.values) {
                if (v == shown) found = true;
              }
            } catch (const Error&) {
            }
          }
          if (!found) flag("replacement value absent from every column");
        } else {
          flag("unknown edit rule " + e.rule);
        }
      } catch (const Error& err) {
        flag("edit check failed (" + e.rule + "): " + err.what());
      }
    }

    // Sorting probes: brute-force the rank the probe claims.
    if (p.type == ReasoningType::kSorting && p.table_ref.empty()) {
      try {
        auto g = ground_sorting(base, table, catalog);
        if (!g) {
          flag("sorting grounding vanished from the base");
        } else {
          Hypothesis probed = base;
          probed.text = p.text;
          annotate(probed, catalog);
          std::optional<Indicator> ni = find_indicator(probed);
          if (!ni) {
            flag("probe text lost its rank indicator");
          } else {
            std::vector<NumericValue> ranked = rank_values(g->col, ni->dir);
            if (ni->rank > static_cast<long long>(ranked.size())) {
              flag("probe rank exceeds the column length");
            }
            if (p.flip) {
              if (ni->rank == g->ind.rank && ni->dir == g->ind.dir) {
                flag("sorting flip kept the rank");
              }
            } else {
              if (ni->rank != g->ind.rank || ni->dir != g->ind.dir) {
                flag("sorting synonym changed rank or direction");
              }
            }
            for (const EditRecord& e : p.edits) {
              if (e.rule == "sorting-value") {
                NumericValue shown = edited_full_value(ctx, e, e.new_surface);
                if (ni->rank <= static_cast<long long>(ranked.size()) &&
                    shown != ranked[ni->rank - 1]) {
                  flag("edited value disagrees with the claimed rank");
                }
              }
            }
          }
        }
      } catch (const Error& err) {
        flag(std::string("sorting check failed: ") + err.what());
      }
    }

    // Arithmetic preserve: the text must really carry op(operands).
    if (p.type == ReasoningType::kArithmetic && !p.flip) {
      if (!base.arith) {
        flag("arithmetic probe without a derivation");
      } else {
        bool found = false;
        for (const Mention& m : base.mentions) {
          if (!m.is_date() && m.value == base.arith->result) found = true;
        }
        if (!found) flag("exact result missing from the preserve text");
      }
    }
  }
  return violations;
}

}  // namespace numprobe
