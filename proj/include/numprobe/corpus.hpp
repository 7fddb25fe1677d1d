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

#ifndef NUMPROBE_CORPUS_HPP_
#define NUMPROBE_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "numprobe/numeric_value.hpp"
#include "numprobe/scan.hpp"
#include "numprobe/taxonomy.hpp"
#include "numprobe/units.hpp"

namespace numprobe {

enum class Orientation { kEntityInfobox, kRelationalGrid };
enum class Label { kEntail, kContradict };
enum class ArithOp { kAdd, kSubtract, kMultiply, kDivide };

const char* label_name(Label l);
std::optional<Label> label_from_name(const std::string& name);
const char* arith_op_name(ArithOp op);
std::optional<ArithOp> arith_op_from_name(const std::string& name);

struct Cell {
  std::string raw;
  // Derived from raw via scan_mentions; filled once by annotate() so the
  // loaded corpus stays read-only afterwards.
  std::vector<Mention> mentions;
};

struct Table {
  std::string id;
  std::optional<std::string> title;
  Orientation orientation = Orientation::kRelationalGrid;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  // Arity of every row. Infoboxes are (key, value) pairs, so 2.
  size_t column_count() const;
  const Cell& at(size_t row, size_t col) const;
};

struct ArithOperand {
  NumericValue value;
  size_t row = 0;
  size_t col = 0;
};

// Carried over from QA derivations: which cells combine, how, and to what.
struct ArithMetadata {
  std::vector<ArithOperand> operands;
  ArithOp op = ArithOp::kAdd;
  NumericValue result;
};

struct Hypothesis {
  std::string id;
  std::string text;
  std::string table_id;
  Label label = Label::kEntail;
  std::string source;
  std::optional<ArithMetadata> arith;
  std::vector<Mention> mentions;  // filled by annotate()
};

struct QaRecord {
  std::string id;
  std::string table_id;
  std::string question;
  std::string answer;
  std::optional<ArithMetadata> derivation;
};

// One hypothesis mention tied to one table cell mention. Values are equal,
// equal after the recorded unit conversion, equal on calendar fields, or
// (flagged) within 15% of each other.
struct MentionLink {
  size_t hyp_mention = 0;
  size_t row = 0;
  size_t col = 0;
  size_t cell_mention = 0;
  bool approximate = false;
  // A bare year in the hypothesis matched the year field of a cell date.
  bool year_match = false;
  std::string unit_from;  // set when a conversion was applied
  std::string unit_to;
};

struct Corpus {
  std::vector<Table> tables;
  std::vector<Hypothesis> hypotheses;
};

struct RecastTrace {
  std::string rule;  // which of the eight templates fired
  std::vector<std::string> steps;
};

// Values of the cells in one column whose sole mention is numeric, in row
// order. Rows that do not qualify are listed in skipped_rows.
struct NumericColumn {
  std::vector<NumericValue> values;
  std::vector<size_t> value_rows;
  std::vector<size_t> skipped_rows;
};

// Triggers that qualify a hypothesis as a base candidate for one reasoning
// type: literal tokens (word-boundary, case-insensitive, may contain
// spaces) and structural tests over its scanned mentions.
struct TypeTriggers {
  std::vector<std::string> tokens;
  std::vector<MentionKind> mention_kinds;
  bool any_numeric = false;  // any non-date mention qualifies
  bool arith = false;        // attached arithmetic metadata qualifies
};

class ReferenceTokens {
 public:
  // Compiled-in copy of the resource files under resources/reference-tokens.
  static const ReferenceTokens& builtin();
  // Loads <type>.tokens for every reasoning type from a directory.
  static ReferenceTokens load_directory(const std::string& dir);
  // Parses the combined form: "[type-name]" section headers, one token or
  // @directive per line, '#' comments.
  static ReferenceTokens parse_combined(const std::string& text);

  const TypeTriggers& for_type(ReasoningType type) const;

 private:
  std::array<TypeTriggers, kReasoningTypeCount> by_type_;
};

// Loaders. All throw ParseError with a "path:line" locus on malformed
// input and DanglingTableRef when a record names an unknown table.
std::vector<Table> load_tables(const std::string& path);
std::vector<Hypothesis> load_tnli(const std::string& path,
                                  const std::vector<Table>& tables);
std::vector<QaRecord> load_qa(const std::string& path,
                              const std::vector<Table>& tables);

// Loads tables plus hypotheses ("tnli") or QA records recast to hypotheses
// ("qa"), scans all cell and hypothesis text, and validates cross
// references. Unsupported QA forms are recorded in skipped_log and
// dropped, never fatal.
Corpus load_dataset(const std::string& in_path, const std::string& tables_path,
                    const std::string& format_tag, const UnitCatalog& catalog,
                    std::vector<std::string>* skipped_log = nullptr);

void annotate(Table& table, const UnitCatalog& catalog);
void annotate(Hypothesis& hyp, const UnitCatalog& catalog);

// Re-serialization, bit-exact per the ingestion format docs.
void write_tables(std::ostream& out, const std::vector<Table>& tables);
void write_tnli(std::ostream& out, const std::vector<Hypothesis>& hyps);

// Turns a QA pair into a declarative sentence carrying the answer.
// Throws UnsupportedQuestionForm when no template fires.
std::string recast_qa_to_nli(const std::string& question,
                             const std::string& answer,
                             RecastTrace* trace = nullptr);

// Greedy, unit-aware value matching of hypothesis mentions against cell
// mentions; at most one link per hypothesis mention.
std::vector<MentionLink> link_mentions(const Hypothesis& hyp, const Table& table,
                                       const UnitCatalog& catalog);

// Throws NoNumericCells when no cell in the column qualifies, OutOfRange
// when the column index exceeds the table arity.
NumericColumn extract_numeric_column(const Table& table, size_t column);

std::vector<Hypothesis> filter_candidates(
    const std::vector<Hypothesis>& hyps, ReasoningType type,
    const ReferenceTokens& tokens = ReferenceTokens::builtin());

}  // namespace numprobe

#endif  // NUMPROBE_CORPUS_HPP_
