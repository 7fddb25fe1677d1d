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

#include "numprobe/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "numprobe/errors.hpp"

namespace numprobe {

using nlohmann::json;

// Generated from resources/reference-tokens at configure time.
const char* builtin_reference_tokens_text();

const char* label_name(Label l) {
  return l == Label::kEntail ? "entail" : "contradict";
}

std::optional<Label> label_from_name(const std::string& name) {
  if (name == "entail") return Label::kEntail;
  if (name == "contradict") return Label::kContradict;
  return std::nullopt;
}

const char* arith_op_name(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "add";
    case ArithOp::kSubtract: return "subtract";
    case ArithOp::kMultiply: return "multiply";
    case ArithOp::kDivide: return "divide";
  }
  return "unknown";
}

std::optional<ArithOp> arith_op_from_name(const std::string& name) {
  if (name == "add") return ArithOp::kAdd;
  if (name == "subtract") return ArithOp::kSubtract;
  if (name == "multiply") return ArithOp::kMultiply;
  if (name == "divide") return ArithOp::kDivide;
  return std::nullopt;
}

size_t Table::column_count() const {
  if (orientation == Orientation::kEntityInfobox) return 2;
  if (!headers.empty()) return headers.size();
  return rows.empty() ? 0 : rows.front().size();
}

const Cell& Table::at(size_t row, size_t col) const {
  if (row >= rows.size() || col >= rows[row].size()) {
    throw OutOfRange("cell (" + std::to_string(row) + ", " +
                     std::to_string(col) + ") outside table " + id);
  }
  return rows[row][col];
}

namespace {

std::string lower_copy(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail_at(const std::string& path, size_t line,
                          const std::string& msg) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + msg);
}

std::string id_field(const json& j, const char* key, const std::string& path,
                     size_t line) {
  if (!j.contains(key)) fail_at(path, line, std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail_at(path, line, std::string("field '") + key + "' must be a string");
}

std::string string_field(const json& j, const char* key, const std::string& path,
                         size_t line) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    fail_at(path, line, std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

// Exact decimal out of a JSON number or string; nlohmann renders doubles
// with the shortest round-trip form, which parse() consumes verbatim.
NumericValue numeric_field(const json& v, const std::string& path, size_t line) {
  try {
    if (v.is_string()) return NumericValue::parse(v.get<std::string>());
    if (v.is_number()) return NumericValue::parse(v.dump());
  } catch (const ParseError& e) {
    fail_at(path, line, std::string("bad numeric value: ") + e.what());
  }
  fail_at(path, line, "expected a number");
}

ArithMetadata parse_derivation(const json& d, const Table& table,
                               const std::string& path, size_t line) {
  ArithMetadata meta;
  if (!d.is_object() || !d.contains("operands") || !d.contains("op") ||
      !d.contains("result")) {
    fail_at(path, line, "derivation needs operands, op, result");
  }
  std::optional<ArithOp> op = arith_op_from_name(string_field(d, "op", path, line));
  if (!op) fail_at(path, line, "unknown op '" + string_field(d, "op", path, line) + "'");
  meta.op = *op;
  if (!d.at("operands").is_array() || d.at("operands").size() < 2) {
    fail_at(path, line, "derivation needs at least two operands");
  }
  for (const json& o : d.at("operands")) {
    if (!o.is_array() || o.size() != 3) {
      fail_at(path, line, "operand must be [value, row, col]");
    }
    ArithOperand operand;
    operand.value = numeric_field(o.at(0), path, line);
    operand.row = o.at(1).get<size_t>();
    operand.col = o.at(2).get<size_t>();
    if (operand.row >= table.rows.size() ||
        operand.col >= table.column_count()) {
      fail_at(path, line, "operand coordinate outside table " + table.id);
    }
    meta.operands.push_back(std::move(operand));
  }
  meta.result = numeric_field(d.at("result"), path, line);

  // The derivation must actually hold; a wrong annotation would poison
  // every arithmetic probe built from it.
  NumericValue acc = meta.operands.front().value;
  bool exact = true;
  for (size_t i = 1; i < meta.operands.size(); ++i) {
    const NumericValue& rhs = meta.operands[i].value;
    switch (meta.op) {
      case ArithOp::kAdd: acc = acc.plus(rhs); break;
      case ArithOp::kSubtract: acc = acc.minus(rhs); break;
      case ArithOp::kMultiply: acc = acc.times(rhs); break;
      case ArithOp::kDivide: acc = acc.divided_by(rhs, 18, &exact); break;
    }
  }
  bool ok;
  if (meta.op == ArithOp::kDivide && !exact) {
    double want = meta.result.to_double();
    double got = acc.to_double();
    ok = want != 0.0 && std::abs(got - want) <= std::abs(want) * 1e-9;
  } else {
    ok = value_equal(acc, meta.result);
  }
  if (!ok) {
    fail_at(path, line, "derivation does not reproduce its result (computed " +
                            acc.to_string() + ", declared " +
                            meta.result.to_string() + ")");
  }
  return meta;
}

Table parse_table_json(const json& j, const std::string& path, size_t line) {
  if (!j.is_object()) fail_at(path, line, "table record must be an object");
  Table t;
  t.id = id_field(j, "id", path, line);
  if (j.contains("title") && !j.at("title").is_null()) {
    if (!j.at("title").is_string()) fail_at(path, line, "title must be a string");
    t.title = j.at("title").get<std::string>();
  }
  if (j.contains("headers")) {
    if (!j.at("headers").is_array()) fail_at(path, line, "headers must be an array");
    for (const json& h : j.at("headers")) {
      if (!h.is_string()) fail_at(path, line, "headers must be strings");
      t.headers.push_back(h.get<std::string>());
    }
  }
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    fail_at(path, line, "missing rows array");
  }
  for (const json& row : j.at("rows")) {
    if (!row.is_array()) fail_at(path, line, "row must be an array");
    std::vector<Cell> cells;
    for (const json& c : row) {
      Cell cell;
      if (c.is_string()) {
        cell.raw = c.get<std::string>();
      } else if (c.is_number()) {
        cell.raw = c.dump();
      } else {
        fail_at(path, line, "cell must be a string");
      }
      cells.push_back(std::move(cell));
    }
    t.rows.push_back(std::move(cells));
  }

  if (j.contains("orientation")) {
    std::string o = string_field(j, "orientation", path, line);
    if (o == "entity-infobox") {
      t.orientation = Orientation::kEntityInfobox;
    } else if (o == "relational-grid") {
      t.orientation = Orientation::kRelationalGrid;
    } else {
      fail_at(path, line, "unknown orientation '" + o + "'");
    }
  } else {
    t.orientation = t.headers.empty() ? Orientation::kEntityInfobox
                                      : Orientation::kRelationalGrid;
  }

  if (t.orientation == Orientation::kEntityInfobox) {
    for (const auto& row : t.rows) {
      if (row.size() != 2) {
        fail_at(path, line, "infobox rows of table " + t.id +
                                " must be (key, value) pairs");
      }
    }
  } else {
    size_t arity = t.headers.empty() ? (t.rows.empty() ? 0 : t.rows[0].size())
                                     : t.headers.size();
    for (const auto& row : t.rows) {
      if (row.size() != arity) {
        fail_at(path, line, "table " + t.id + " is not rectangular");
      }
    }
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_unique(std::set<std::string>& seen, const std::string& id,
                  const std::string& path, size_t line) {
  if (!seen.insert(id).second) fail_at(path, line, "duplicate id '" + id + "'");
}

const Table* find_table(const std::vector<Table>& tables, const std::string& id) {
  for (const Table& t : tables) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

// Calls fn(json, line_number) for every JSONL record in the file.
template <typename Fn>
void for_each_record(const std::string& path, Fn fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_at(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    fn(j, line_no);
  }
}

}  // namespace

std::vector<Table> load_tables(const std::string& path) {
  std::vector<Table> tables;
  std::set<std::string> seen;
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    // Whole-file JSON array; record index stands in for the line locus.
    json arr;
    try {
      arr = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(path + ": invalid JSON: " + e.what());
    }
    size_t index = 0;
    for (const json& j : arr) {
      ++index;
      Table t = parse_table_json(j, path, index);
      check_unique(seen, t.id, path, index);
      tables.push_back(std::move(t));
    }
  } else {
    for_each_record(path, [&](const json& j, size_t line) {
      Table t = parse_table_json(j, path, line);
      check_unique(seen, t.id, path, line);
      tables.push_back(std::move(t));
    });
  }
  return tables;
}

std::vector<Hypothesis> load_tnli(const std::string& path,
                                  const std::vector<Table>& tables) {
  std::vector<Hypothesis> hyps;
  std::set<std::string> seen;
  for_each_record(path, [&](const json& j, size_t line) {
    Hypothesis h;
    h.id = id_field(j, "id", path, line);
    check_unique(seen, h.id, path, line);
    h.table_id = id_field(j, "table_id", path, line);
    h.text = string_field(j, "hypothesis", path, line);
    std::string label = string_field(j, "label", path, line);
    std::optional<Label> l = label_from_name(label);
    if (!l) fail_at(path, line, "label must be entail or contradict, got '" + label + "'");
    h.label = *l;
    h.source = "tnli";
    const Table* t = find_table(tables, h.table_id);
    if (!t) {
      throw DanglingTableRef(path + ":" + std::to_string(line) +
                             ": hypothesis " + h.id +
                             " references unknown table " + h.table_id);
    }
    if (j.contains("derivation") && !j.at("derivation").is_null()) {
      h.arith = parse_derivation(j.at("derivation"), *t, path, line);
    }
    hyps.push_back(std::move(h));
  });
  return hyps;
}

std::vector<QaRecord> load_qa(const std::string& path,
                              const std::vector<Table>& tables) {
  std::vector<QaRecord> records;
  std::set<std::string> seen;
  for_each_record(path, [&](const json& j, size_t line) {
    QaRecord r;
    r.id = id_field(j, "id", path, line);
    check_unique(seen, r.id, path, line);
    r.table_id = id_field(j, "table_id", path, line);
    r.question = string_field(j, "question", path, line);
    r.answer = string_field(j, "answer", path, line);
    const Table* t = find_table(tables, r.table_id);
    if (!t) {
      throw DanglingTableRef(path + ":" + std::to_string(line) + ": question " +
                             r.id + " references unknown table " + r.table_id);
    }
    if (j.contains("derivation") && !j.at("derivation").is_null()) {
      r.derivation = parse_derivation(j.at("derivation"), *t, path, line);
    }
    records.push_back(std::move(r));
  });
  return records;
}

void annotate(Table& table, const UnitCatalog& catalog) {
  for (auto& row : table.rows) {
    for (Cell& cell : row) cell.mentions = scan_mentions(cell.raw, catalog);
  }
}

void annotate(Hypothesis& hyp, const UnitCatalog& catalog) {
  hyp.mentions = scan_mentions(hyp.text, catalog);
}

Corpus load_dataset(const std::string& in_path, const std::string& tables_path,
                    const std::string& format_tag, const UnitCatalog& catalog,
                    std::vector<std::string>* skipped_log) {
  Corpus corpus;
  corpus.tables = load_tables(tables_path);
  for (Table& t : corpus.tables) annotate(t, catalog);

  if (format_tag == "tnli") {
    corpus.hypotheses = load_tnli(in_path, corpus.tables);
  } else if (format_tag == "qa") {
    for (const QaRecord& r : load_qa(in_path, corpus.tables)) {
      Hypothesis h;
      try {
        h.text = recast_qa_to_nli(r.question, r.answer);
      } catch (const UnsupportedQuestionForm& e) {
        if (skipped_log) {
          skipped_log->push_back(r.id + ": " + e.what());
        }
        continue;
      }
      h.id = r.id;
      h.table_id = r.table_id;
      // Recast answers are the gold ones, so the sentences hold.
      h.label = Label::kEntail;
      h.source = "qa";
      h.arith = r.derivation;
      corpus.hypotheses.push_back(std::move(h));
    }
  } else {
    throw ParseError("unknown format tag '" + format_tag + "' (want tnli or qa)");
  }
  for (Hypothesis& h : corpus.hypotheses) annotate(h, catalog);
  return corpus;
}

void write_tables(std::ostream& out, const std::vector<Table>& tables) {
  for (const Table& t : tables) {
    json j;
    j["id"] = t.id;
    if (t.title) j["title"] = *t.title;
    j["headers"] = t.headers;
    json rows = json::array();
    for (const auto& row : t.rows) {
      json cells = json::array();
      for (const Cell& c : row) cells.push_back(c.raw);
      rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    j["orientation"] = t.orientation == Orientation::kEntityInfobox
                           ? "entity-infobox"
                           : "relational-grid";
    out << j.dump() << "\n";
  }
}

void write_tnli(std::ostream& out, const std::vector<Hypothesis>& hyps) {
  for (const Hypothesis& h : hyps) {
    json j;
    j["id"] = h.id;
    j["table_id"] = h.table_id;
    j["hypothesis"] = h.text;
    j["label"] = label_name(h.label);
    out << j.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// QA -> NLI recasting.

namespace {

const std::set<std::string>& be_aux() {
  static const std::set<std::string> s{"is", "are", "was", "were"};
  return s;
}
const std::set<std::string>& do_aux() {
  static const std::set<std::string> s{"do", "does", "did"};
  return s;
}
const std::set<std::string>& have_aux() {
  static const std::set<std::string> s{"has", "have", "had"};
  return s;
}
const std::set<std::string>& modal_aux() {
  static const std::set<std::string> s{"can",   "could", "will", "would",
                                       "should", "may",  "might", "must"};
  return s;
}
bool is_aux(const std::string& t) {
  return be_aux().count(t) || do_aux().count(t) || have_aux().count(t) ||
         modal_aux().count(t);
}

const std::set<std::string>& determiners() {
  static const std::set<std::string> s{"the",  "a",    "an",    "his",  "her",
                                       "its",  "their", "this", "that",
                                       "these", "those"};
  return s;
}

struct VerbForms {
  std::string past;
  std::string participle;
};

const std::map<std::string, VerbForms>& irregular_verbs() {
  static const std::map<std::string, VerbForms> m{
      {"win", {"won", "won"}},       {"run", {"ran", "run"}},
      {"make", {"made", "made"}},    {"take", {"took", "taken"}},
      {"have", {"had", "had"}},      {"get", {"got", "got"}},
      {"go", {"went", "gone"}},      {"come", {"came", "come"}},
      {"sell", {"sold", "sold"}},    {"buy", {"bought", "bought"}},
      {"give", {"gave", "given"}},   {"spend", {"spent", "spent"}},
      {"pay", {"paid", "paid"}},     {"hold", {"held", "held"}},
      {"lose", {"lost", "lost"}},    {"begin", {"began", "begun"}},
      {"cost", {"cost", "cost"}},    {"beat", {"beat", "beaten"}},
      {"set", {"set", "set"}},       {"hit", {"hit", "hit"}},
      {"lead", {"led", "led"}},      {"leave", {"left", "left"}},
      {"find", {"found", "found"}},  {"write", {"wrote", "written"}},
      {"break", {"broke", "broken"}},{"bring", {"brought", "brought"}},
      {"grow", {"grew", "grown"}},   {"know", {"knew", "known"}},
      {"throw", {"threw", "thrown"}},{"fall", {"fell", "fallen"}},
      {"rise", {"rose", "risen"}},   {"drive", {"drove", "driven"}},
      {"become", {"became", "become"}}, {"meet", {"met", "met"}},
      {"put", {"put", "put"}},       {"see", {"saw", "seen"}},
      {"do", {"did", "done"}},       {"choose", {"chose", "chosen"}},
      {"speak", {"spoke", "spoken"}},{"wear", {"wore", "worn"}},
  };
  return m;
}

// Doubling and other spellings the plain +ed rule gets wrong.
const std::map<std::string, std::string>& past_overrides() {
  static const std::map<std::string, std::string> m{
      {"star", "starred"}, {"plan", "planned"}, {"stop", "stopped"},
      {"drop", "dropped"}, {"net", "netted"},   {"top", "topped"},
  };
  return m;
}

const std::set<std::string>& regular_verbs() {
  static const std::set<std::string> s{
      "direct",  "release", "gross",   "earn",    "premiere", "star",
      "open",    "close",   "play",    "score",   "last",     "rank",
      "record",  "produce", "act",     "live",    "move",     "work",
      "study",   "visit",   "travel",  "walk",    "watch",    "finish",
      "start",   "end",     "stay",    "train",   "sign",     "join",
      "retire",  "debut",   "appear",  "perform", "receive",  "gain",
      "turn",    "reach",   "marry",   "happen",  "occur",    "collect",
      "measure", "weigh",   "span",    "cover",   "serve",    "host",
      "feature", "launch",  "attract", "total",   "average",  "raise",
      "return",  "save",    "borrow",  "own",     "need",     "use",
      "remain",  "plant",   "pick",    "read",    "add",      "plan",
      "stop",    "drop",    "top",     "net",     "complete", "deliver",
  };
  return s;
}

bool is_known_verb(const std::string& lower) {
  return irregular_verbs().count(lower) || regular_verbs().count(lower);
}

bool ends_with(const std::string& s, const char* suffix) {
  size_t n = std::char_traits<char>::length(suffix);
  return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string past_tense(const std::string& base) {
  auto irr = irregular_verbs().find(base);
  if (irr != irregular_verbs().end()) return irr->second.past;
  auto over = past_overrides().find(base);
  if (over != past_overrides().end()) return over->second;
  if (ends_with(base, "e")) return base + "d";
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ied";
  }
  return base + "ed";
}

std::string third_person(const std::string& base) {
  if (ends_with(base, "s") || ends_with(base, "x") || ends_with(base, "z") ||
      ends_with(base, "ch") || ends_with(base, "sh") || ends_with(base, "o")) {
    return base + "es";
  }
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ies";
  }
  return base + "s";
}

std::string conjugate_for_aux(const std::string& base, const std::string& aux) {
  if (aux == "did") return past_tense(base);
  if (aux == "does") return third_person(base);
  return base;  // "do"
}

// Token shapes a predicate can start with after a be/have/modal auxiliary.
bool looks_like_participle(const std::string& lower) {
  for (const auto& [base, forms] : irregular_verbs()) {
    if (lower == forms.participle || lower == forms.past) return true;
  }
  return (ends_with(lower, "ed") || ends_with(lower, "ing")) && lower.size() >= 4;
}

bool predicate_marker(const std::vector<std::string>& toks, size_t i) {
  static const std::set<std::string> words{
      "between", "in",      "on",      "at",      "over",    "under",
      "above",   "below",   "more",    "less",    "fewer",   "greater",
      "higher",  "lower",   "longer",  "shorter", "older",   "younger",
      "taller",  "heavier", "lighter", "equal",   "worth",   "about",
      "approximately", "around", "roughly", "nearly", "almost", "not",
      "than",    "still",   "currently", "be",    "been",    "being",
      "also",    "already", "now",     "born"};
  std::string t = lower_copy(toks[i]);
  if (words.count(t)) return true;
  if (!t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) ||
                     t[0] == '$' || t[0] == '-' ||
                     t.compare(0, 2, "\xc2\xa3") == 0 ||
                     t.compare(0, 3, "\xe2\x82\xac") == 0)) {
    return true;
  }
  if (looks_like_participle(t)) {
    // "the running time" keeps -ing words inside the subject; a participle
    // right after a determiner is attributive, not a predicate.
    std::string prev = lower_copy(toks[i - 1]);
    return !determiners().count(prev);
  }
  return false;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> slice(const std::vector<std::string>& v, size_t from,
                               size_t to = std::string::npos) {
  if (to == std::string::npos || to > v.size()) to = v.size();
  if (from >= to) return {};
  return std::vector<std::string>(v.begin() + from, v.begin() + to);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

void note(RecastTrace* trace, std::string step) {
  if (trace) trace->steps.push_back(std::move(step));
}

[[noreturn]] void unsupported(const std::string& why) {
  throw UnsupportedQuestionForm(why);
}

// Splits "<aux> SUBJECT PREDICATE" where the caller already consumed the
// auxiliary. Falls back to a one-token predicate when no marker is found.
std::pair<std::vector<std::string>, std::vector<std::string>> split_subject(
    const std::vector<std::string>& rest) {
  if (rest.size() < 2) unsupported("auxiliary question too short to de-invert");
  for (size_t i = 1; i < rest.size(); ++i) {
    if (predicate_marker(rest, i)) return {slice(rest, 0, i), slice(rest, i)};
  }
  return {slice(rest, 0, rest.size() - 1), slice(rest, rest.size() - 1)};
}

struct DoSplit {
  std::vector<std::string> subject;
  std::string verb;  // base form, lowercased
  std::vector<std::string> tail;
};

DoSplit split_do_clause(const std::vector<std::string>& rest) {
  for (size_t i = 1; i < rest.size(); ++i) {
    if (is_known_verb(lower_copy(rest[i]))) {
      return {slice(rest, 0, i), lower_copy(rest[i]), slice(rest, i + 1)};
    }
  }
  unsupported("cannot locate the main verb after do-auxiliary");
}

std::string finish_sentence(std::vector<std::string> tokens,
                            RecastTrace* trace) {
  std::string s = join(tokens);
  if (s.empty()) unsupported("recast produced an empty sentence");
  while (!s.empty() && (s.back() == '?' || s.back() == ' ')) s.pop_back();
  if (s.empty()) unsupported("recast produced an empty sentence");
  if (s.back() != '.') s += '.';
  if (std::islower(static_cast<unsigned char>(s[0]))) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  note(trace, "terminal '?' replaced by '.'");
  return s;
}

std::string polarity(const std::string& answer) {
  std::string a = lower_copy(answer);
  while (!a.empty() && (a.back() == '.' || a.back() == ' ')) a.pop_back();
  return a;
}

}  // namespace

std::string recast_qa_to_nli(const std::string& question,
                             const std::string& answer, RecastTrace* trace) {
  if (trace) {
    trace->rule.clear();
    trace->steps.clear();
  }
  std::string q = question;
  while (!q.empty() && (q.back() == '?' || q.back() == ' ' || q.back() == '.')) {
    q.pop_back();
  }
  std::vector<std::string> toks = split_ws(q);
  if (toks.empty()) unsupported("empty question");
  std::string head = lower_copy(toks[0]);

  auto set_rule = [&](const char* r) {
    if (trace) trace->rule = r;
    note(trace, std::string("matched template ") + r);
  };

  // --- wh templates ------------------------------------------------------
  if (head == "who" || head == "what") {
    std::vector<std::string> rest = slice(toks, 1);
    if (rest.empty()) unsupported("bare wh-word");
    std::string first = lower_copy(rest[0]);
    set_rule(head == "who" ? "who" : "what");
    if (be_aux().count(first)) {
      // "Who was the director of X" -> "the director of X was <answer>".
      note(trace, "copula question: wh-phrase replaced by answer after '" +
                      first + "'");
      std::vector<std::string> out = slice(rest, 1);
      out.push_back(first);
      out.push_back(answer);
      return finish_sentence(std::move(out), trace);
    }
    if (do_aux().count(first)) {
      DoSplit ds = split_do_clause(slice(rest, 1));
      note(trace, "do-inversion undone, verb '" + ds.verb + "' -> '" +
                      conjugate_for_aux(ds.verb, first) + "'");
      std::vector<std::string> out = ds.subject;
      out.push_back(conjugate_for_aux(ds.verb, first));
      out.push_back(answer);
      for (auto& t : ds.tail) out.push_back(std::move(t));
      return finish_sentence(std::move(out), trace);
    }
    // Subject question: "Who directed Hulk" -> "<answer> directed Hulk".
    note(trace, "subject question: wh-word replaced by answer '" + answer + "'");
    std::vector<std::string> out{answer};
    for (auto& t : rest) out.push_back(std::move(t));
    return finish_sentence(std::move(out), trace);
  }

  if (head == "when" || head == "where") {
    std::vector<std::string> rest = slice(toks, 1);
    if (rest.empty()) unsupported("bare wh-word");
    std::string first = lower_copy(rest[0]);
    set_rule(head == "when" ? "when" : "where");
    if (be_aux().count(first)) {
      auto [subj, pred] = split_subject(slice(rest, 1));
      note(trace, "auxiliary '" + first + "' moved after subject '" +
                      join(subj) + "'");
      std::vector<std::string> out = subj;
      out.push_back(first);
      for (auto& t : pred) out.push_back(std::move(t));
      out.push_back(answer);
      return finish_sentence(std::move(out), trace);
    }
    if (do_aux().count(first)) {
      DoSplit ds = split_do_clause(slice(rest, 1));
      note(trace, "do-inversion undone, verb '" + ds.verb + "' -> '" +
                      conjugate_for_aux(ds.verb, first) + "'");
      std::vector<std::string> out = ds.subject;
      out.push_back(conjugate_for_aux(ds.verb, first));
      for (auto& t : ds.tail) out.push_back(std::move(t));
      out.push_back(answer);
      return finish_sentence(std::move(out), trace);
    }
    unsupported("when/where question without a recognized auxiliary");
  }

  if (head == "which") {
    std::vector<std::string> rest = slice(toks, 1);
    if (rest.size() < 2) unsupported("which-question too short");
    set_rule("which");
    for (size_t i = 1; i < rest.size(); ++i) {
      std::string t = lower_copy(rest[i]);
      if (do_aux().count(t)) {
        DoSplit ds = split_do_clause(slice(rest, i + 1));
        note(trace, "object question: answer placed after verb '" + ds.verb + "'");
        std::vector<std::string> out = ds.subject;
        out.push_back(conjugate_for_aux(ds.verb, t));
        out.push_back(answer);
        for (auto& tt : ds.tail) out.push_back(std::move(tt));
        return finish_sentence(std::move(out), trace);
      }
      if (is_aux(t)) {
        note(trace, "wh-noun-phrase '" + join(slice(rest, 0, i)) +
                        "' replaced by answer");
        std::vector<std::string> out{answer};
        for (auto& tt : slice(rest, i)) out.push_back(std::move(tt));
        return finish_sentence(std::move(out), trace);
      }
      if (is_known_verb(t) || looks_like_participle(t)) {
        note(trace, "subject question: wh-noun-phrase replaced by answer");
        std::vector<std::string> out{answer};
        for (auto& tt : slice(rest, i)) out.push_back(std::move(tt));
        return finish_sentence(std::move(out), trace);
      }
    }
    unsupported("which-question without auxiliary or known verb");
  }

  if (head == "how" && toks.size() >= 3) {
    std::string qty = lower_copy(toks[1]);
    if (qty == "many" || qty == "much") {
      set_rule(qty == "many" ? "how-many" : "how-much");
      size_t aux_at = 0;
      for (size_t i = 2; i < toks.size(); ++i) {
        if (is_aux(lower_copy(toks[i]))) {
          aux_at = i;
          break;
        }
      }
      if (aux_at == 0) unsupported("how-" + qty + " without an auxiliary");
      std::vector<std::string> np = slice(toks, 2, aux_at);
      std::string aux = lower_copy(toks[aux_at]);
      std::vector<std::string> rem = slice(toks, aux_at + 1);
      if (rem.empty()) unsupported("how-" + qty + " question too short");
      if (be_aux().count(aux)) {
        bool np_subject = !np.empty() && !determiners().count(lower_copy(rem[0]));
        if (np_subject) {
          // "How many awards are on the list" -> "<answer> awards are ...".
          note(trace, "quantity subject: answer prefixes '" + join(np) + "'");
          std::vector<std::string> out{answer};
          for (auto& t : np) out.push_back(std::move(t));
          out.push_back(aux);
          for (auto& t : rem) out.push_back(std::move(t));
          return finish_sentence(std::move(out), trace);
        }
        // "How many minutes is the movie" -> "the movie is <answer> minutes".
        note(trace, "copula question: measure placed after '" + aux + "'");
        std::vector<std::string> out = rem;
        out.push_back(aux);
        out.push_back(answer);
        for (auto& t : np) out.push_back(std::move(t));
        return finish_sentence(std::move(out), trace);
      }
      if (do_aux().count(aux)) {
        DoSplit ds = split_do_clause(rem);
        note(trace, "do-inversion undone, verb '" + ds.verb + "' -> '" +
                        conjugate_for_aux(ds.verb, aux) + "'");
        std::vector<std::string> out = ds.subject;
        out.push_back(conjugate_for_aux(ds.verb, aux));
        out.push_back(answer);
        for (auto& t : np) out.push_back(std::move(t));
        for (auto& t : ds.tail) out.push_back(std::move(t));
        return finish_sentence(std::move(out), trace);
      }
      unsupported("how-" + qty + " with unsupported auxiliary '" + aux + "'");
    }
  }

  // --- yes/no template ----------------------------------------------------
  if (is_aux(head)) {
    std::string pol = polarity(answer);
    if (pol != "yes" && pol != "no") {
      unsupported("yes/no question with non-polar answer '" + answer + "'");
    }
    set_rule("yes-no");
    std::vector<std::string> rest = slice(toks, 1);
    if (do_aux().count(head)) {
      DoSplit ds = split_do_clause(rest);
      std::vector<std::string> out = ds.subject;
      if (pol == "yes") {
        note(trace, "affirmative: verb '" + ds.verb + "' -> '" +
                        conjugate_for_aux(ds.verb, head) + "'");
        out.push_back(conjugate_for_aux(ds.verb, head));
      } else {
        note(trace, "negated: '" + head + " not " + ds.verb + "'");
        out.push_back(head);
        out.push_back("not");
        out.push_back(ds.verb);
      }
      for (auto& t : ds.tail) out.push_back(std::move(t));
      return finish_sentence(std::move(out), trace);
    }
    auto [subj, pred] = split_subject(rest);
    note(trace, "auxiliary '" + head + "' moved after subject '" + join(subj) +
                    "'");
    note(trace, pol == "yes" ? "polarity yes keeps predicate affirmative"
                             : "polarity no inserts 'not'");
    std::vector<std::string> out = subj;
    out.push_back(head);
    if (pol == "no") out.push_back("not");
    for (auto& t : pred) out.push_back(std::move(t));
    return finish_sentence(std::move(out), trace);
  }

  unsupported("no template matches question head '" + head + "'");
}

// ---------------------------------------------------------------------------
// Mention linking.

namespace {

bool relative_gap_within(const NumericValue& a, const NumericValue& b,
                         double tolerance) {
  if (b.is_zero()) return false;
  bool exact = true;
  NumericValue gap = a.minus(b).abs().divided_by(b.abs(), 9, &exact);
  return gap.to_double() <= tolerance;
}

// Matching tiers, strongest first. kNone means no link.
enum class LinkTier { kNone, kExact, kYear, kApproximate };

LinkTier classify_pair(const Mention& hm, const Mention& cm,
                       const UnitCatalog& catalog, MentionLink* link) {
  if (hm.is_date() && cm.is_date()) {
    return hm.date == cm.date ? LinkTier::kExact : LinkTier::kNone;
  }
  if (!hm.is_date() && cm.is_date()) {
    // A bare year like "1986" scans as digits; it matches a full date on
    // the year field alone.
    if (hm.value.is_integer() && hm.value.frac_digits() == 0) {
      double v = hm.value.to_double();
      if (v >= 1000 && v <= 9999 && static_cast<int>(v) == cm.date.year) {
        link->year_match = true;
        return LinkTier::kYear;
      }
    }
    return LinkTier::kNone;
  }
  if (hm.is_date()) return LinkTier::kNone;

  const std::string& hu = hm.unit;
  const std::string& cu = cm.unit;
  if (!hu.empty() && !cu.empty() && hu != cu) {
    const UnitEntry* from = catalog.find(hu);
    const UnitEntry* to = catalog.find(cu);
    if (!from || !to || from->family != to->family) return LinkTier::kNone;
    NumericValue converted = catalog.convert(hm.value, hu, cu, 15);
    if (value_equal(converted, cm.value)) {
      link->unit_from = hu;
      link->unit_to = cu;
      return LinkTier::kExact;
    }
    if (relative_gap_within(converted, cm.value, 0.15)) {
      link->unit_from = hu;
      link->unit_to = cu;
      link->approximate = true;
      return LinkTier::kApproximate;
    }
    return LinkTier::kNone;
  }
  if (value_equal(hm.value, cm.value)) return LinkTier::kExact;
  if (relative_gap_within(hm.value, cm.value, 0.15)) {
    link->approximate = true;
    return LinkTier::kApproximate;
  }
  return LinkTier::kNone;
}

}  // namespace

std::vector<MentionLink> link_mentions(const Hypothesis& hyp, const Table& table,
                                       const UnitCatalog& catalog) {
  std::vector<MentionLink> links;
  for (size_t mi = 0; mi < hyp.mentions.size(); ++mi) {
    MentionLink best;
    LinkTier best_tier = LinkTier::kNone;
    for (size_t r = 0; r < table.rows.size() && best_tier != LinkTier::kExact;
         ++r) {
      for (size_t c = 0; c < table.rows[r].size(); ++c) {
        const Cell& cell = table.rows[r][c];
        for (size_t ci = 0; ci < cell.mentions.size(); ++ci) {
          MentionLink candidate;
          candidate.hyp_mention = mi;
          candidate.row = r;
          candidate.col = c;
          candidate.cell_mention = ci;
          LinkTier tier =
              classify_pair(hyp.mentions[mi], cell.mentions[ci], catalog,
                            &candidate);
          if (tier == LinkTier::kNone) continue;
          // Row-major greedy: a stronger tier wins, first found stays.
          if (best_tier == LinkTier::kNone ||
              static_cast<int>(tier) < static_cast<int>(best_tier)) {
            best = candidate;
            best_tier = tier;
            if (best_tier == LinkTier::kExact) break;
          }
        }
        if (best_tier == LinkTier::kExact) break;
      }
    }
    if (best_tier != LinkTier::kNone) links.push_back(best);
  }
  return links;
}

NumericColumn extract_numeric_column(const Table& table, size_t column) {
  if (column >= table.column_count()) {
    throw OutOfRange("column " + std::to_string(column) + " outside table " +
                     table.id);
  }
  NumericColumn out;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const Cell& cell = table.rows[r][column];
    if (cell.mentions.size() == 1 && !cell.mentions[0].is_date()) {
      out.values.push_back(cell.mentions[0].value);
      out.value_rows.push_back(r);
    } else {
      out.skipped_rows.push_back(r);
    }
  }
  if (out.values.empty()) {
    throw NoNumericCells("column " + std::to_string(column) + " of table " +
                         table.id + " has no numeric cells");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference tokens and candidate filtering.

namespace {

std::string normalize_ws(const std::string& s) {
  std::string out;
  bool in_space = true;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space && !out.empty()) out += ' ';
      in_space = true;
    } else {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool contains_token(const std::string& text, const std::string& token) {
  size_t pos = 0;
  while ((pos = text.find(token, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !word_char(text[pos - 1]);
    size_t end = pos + token.size();
    bool right_ok = end >= text.size() || !word_char(text[end]);
    if (left_ok && right_ok) return true;
    pos += 1;
  }
  return false;
}

void parse_trigger_line(const std::string& raw, TypeTriggers* into,
                        const std::string& where) {
  std::string line = normalize_ws(raw);
  if (line.empty() || raw[raw.find_first_not_of(" \t")] == '#') return;
  if (line[0] == '@') {
    if (line == "@arith") {
      into->arith = true;
    } else if (line == "@mention any-numeric" || line == "@any-numeric") {
      into->any_numeric = true;
    } else if (line.rfind("@mention ", 0) == 0) {
      try {
        into->mention_kinds.push_back(mention_kind_from_name(line.substr(9)));
      } catch (const ParseError& e) {
        throw CatalogError(where + ": " + e.what());
      }
    } else {
      throw CatalogError(where + ": unknown directive '" + line + "'");
    }
    return;
  }
  into->tokens.push_back(line);
}

}  // namespace

const ReferenceTokens& ReferenceTokens::builtin() {
  static const ReferenceTokens tokens =
      parse_combined(builtin_reference_tokens_text());
  return tokens;
}

ReferenceTokens ReferenceTokens::parse_combined(const std::string& text) {
  ReferenceTokens out;
  std::istringstream in(text);
  std::string line;
  TypeTriggers* current = nullptr;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string where = "reference tokens line " + std::to_string(line_no);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    size_t last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.front() == '[') {
      if (body.back() != ']') throw CatalogError(where + ": unterminated section");
      std::string name = body.substr(1, body.size() - 2);
      std::optional<ReasoningType> type = reasoning_type_from_name(name);
      if (!type) throw CatalogError(where + ": unknown reasoning type '" + name + "'");
      current = &out.by_type_[static_cast<size_t>(*type)];
      continue;
    }
    if (!current) throw CatalogError(where + ": token before any [section]");
    parse_trigger_line(body, current, where);
  }
  return out;
}

ReferenceTokens ReferenceTokens::load_directory(const std::string& dir) {
  ReferenceTokens out;
  for (ReasoningType type : all_reasoning_types()) {
    std::string path =
        dir + "/" + reasoning_type_name(type) + ".tokens";
    std::ifstream in(path);
    if (!in) throw CatalogError("missing reference token file " + path);
    std::string line;
    size_t line_no = 0;
    TypeTriggers* into = &out.by_type_[static_cast<size_t>(type)];
    while (std::getline(in, line)) {
      ++line_no;
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      size_t last = line.find_last_not_of(" \t\r");
      parse_trigger_line(line.substr(first, last - first + 1), into,
                         path + ":" + std::to_string(line_no));
    }
  }
  return out;
}

const TypeTriggers& ReferenceTokens::for_type(ReasoningType type) const {
  return by_type_[static_cast<size_t>(type)];
}

std::vector<Hypothesis> filter_candidates(const std::vector<Hypothesis>& hyps,
                                          ReasoningType type,
                                          const ReferenceTokens& tokens) {
  const TypeTriggers& triggers = tokens.for_type(type);
  std::vector<Hypothesis> out;
  for (const Hypothesis& h : hyps) {
    bool hit = false;
    if (triggers.arith && h.arith) hit = true;
    if (!hit && triggers.any_numeric) {
      for (const Mention& m : h.mentions) {
        if (!m.is_date()) {
          hit = true;
          break;
        }
      }
    }
    if (!hit && !triggers.mention_kinds.empty()) {
      for (const Mention& m : h.mentions) {
        if (std::find(triggers.mention_kinds.begin(),
                      triggers.mention_kinds.end(),
                      m.kind) != triggers.mention_kinds.end()) {
          hit = true;
          break;
        }
      }
    }
    if (!hit && !triggers.tokens.empty()) {
      std::string text = normalize_ws(h.text);
      for (const std::string& token : triggers.tokens) {
        if (contains_token(text, token)) {
          hit = true;
          break;
        }
      }
    }
    if (hit) out.push_back(h);
  }
  return out;
}

}  // namespace numprobe
