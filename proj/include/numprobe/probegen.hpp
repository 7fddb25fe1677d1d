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

#ifndef NUMPROBE_PROBEGEN_HPP_
#define NUMPROBE_PROBEGEN_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numprobe/corpus.hpp"
#include "numprobe/numeric_value.hpp"
#include "numprobe/taxonomy.hpp"
#include "numprobe/units.hpp"

namespace numprobe {

// Version stamp written into every output header record.
inline constexpr char kArtifactVersion[] = "1.0.0";

// Default master seed. A fixed constant, never wall-clock, so two runs with
// no explicit --seed still agree byte for byte.
inline constexpr uint64_t kDefaultMasterSeed = 1729;

enum class ProbeMode { kPreserve, kFlip };

// One text rewrite. Spans index into the BASE hypothesis text; old_surface
// must equal that substring. Edits within a probe are disjoint and sorted,
// which makes the rewrite reversible byte for byte.
struct EditRecord {
  size_t begin = 0;
  size_t end = 0;
  std::string old_surface;
  std::string new_surface;
  std::string rule;
};

// Applies edits left to right. Throws ParseError if spans overlap, run out
// of order, or old_surface disagrees with the base text.
std::string apply_edits(const std::string& base,
                        const std::vector<EditRecord>& edits);

// Inverse of apply_edits: maps a probe text back to its base text.
std::string revert_edits(const std::string& probe_text,
                         const std::vector<EditRecord>& edits);

// Cell swap behind a counterfactual table. Swapping the same pair again
// restores the original table.
struct TableSwap {
  size_t row_a = 0;
  size_t col_a = 0;
  size_t row_b = 0;
  size_t col_b = 0;
};

struct Probe {
  std::string id;
  std::string base_id;
  ReasoningType type = ReasoningType::kNumeration;
  bool flip = false;
  Label expected_label = Label::kEntail;
  std::string text;       // counterfactual probes keep the base text
  std::string table_ref;  // counterfactual table id, empty otherwise
  std::vector<EditRecord> edits;
  std::optional<TableSwap> table_swap;
  uint64_t seed = 0;  // derived stream seed this probe consumed
};

// Rounding tier used by the approximation generator: magnitudes below
// threshold round to 10^granularity_exp. Values beyond the last tier round
// to three significant digits.
struct ApproxTier {
  NumericValue threshold;
  int granularity_exp = 1;
};

struct GenerationConfig {
  GenerationConfig();

  uint64_t master_seed = kDefaultMasterSeed;
  std::array<bool, kReasoningTypeCount> enabled;  // all true by default

  // Flip replacements for plain values sample [x-w*x, x+w*x].
  double flip_replacement_halfwidth = 0.5;

  // Range radii: integers for small n, a precision-rounded percentage of n
  // otherwise.
  int range_small_radius_min = 1;
  int range_small_radius_max = 5;
  double range_radius_pct_min = 0.10;
  double range_radius_pct_max = 0.50;

  // Approximation flips move 1..approximation_max_steps granularity steps
  // away from the correct rounding.
  int approximation_max_steps = 3;
  std::vector<ApproxTier> approximation_tiers;  // empty = builtin tiers

  // Arithmetic flips scale the true result by a factor drawn from
  // [lo_min, lo_max] or [hi_min, hi_max], half chosen per probe.
  double arith_factor_hi_min = 1.05;
  double arith_factor_hi_max = 1.20;
  double arith_factor_lo_min = 0.80;
  double arith_factor_lo_max = 0.95;

  // Scale conversion flips corrupt the true conversion by a factor from
  // [0.5, 0.9] or [1.1, 1.5].
  double scale_corrupt_lo_min = 0.50;
  double scale_corrupt_lo_max = 0.90;
  double scale_corrupt_hi_min = 1.10;
  double scale_corrupt_hi_max = 1.50;

  // Heterogeneous date flips stay within this many years of the original.
  int date_flip_year_window = 15;

  // Cap per generator invocation; mentions are taken left to right.
  int max_probes_per_hypothesis = 4;
};

struct ProbeSet {
  std::vector<Probe> probes;
  std::vector<Table> counterfactual_tables;
  // "hyp_id type/mode: reason" lines for hypotheses a generator declined.
  std::vector<std::string> skip_report;

  std::map<std::pair<ReasoningType, bool>, size_t> counts() const;
};

// Per-probe RNG stream. Depends only on the master seed and the probe's
// coordinates, so corpus iteration order can never leak into the output.
uint64_t derive_probe_seed(uint64_t master_seed, const std::string& hyp_id,
                           ReasoningType type, const std::string& submode,
                           size_t occurrence);

// Generators. Each returns the probes it can derive from one hypothesis in
// the requested mode and throws NoApplicableMention when the hypothesis
// lacks the type's trigger. Probes come back fully formed: id, edits,
// expected label, and consumed seed.
std::vector<Probe> gen_numeration(const Hypothesis& h, const Table& t,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog& catalog);
std::vector<Probe> gen_heterogeneous(const Hypothesis& h, const Table& t,
                                     ProbeMode mode,
                                     const GenerationConfig& cfg,
                                     const UnitCatalog& catalog);
std::vector<Probe> gen_negative(const Hypothesis& h, const Table& t,
                                ProbeMode mode, const GenerationConfig& cfg,
                                const UnitCatalog& catalog);
std::vector<Probe> gen_scale(const Hypothesis& h, const Table& t,
                             ProbeMode mode, const GenerationConfig& cfg,
                             const UnitCatalog& catalog);
std::vector<Probe> gen_comparison(const Hypothesis& h, const Table& t,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog& catalog);
std::vector<Probe> gen_approximation(const Hypothesis& h, const Table& t,
                                     ProbeMode mode,
                                     const GenerationConfig& cfg,
                                     const UnitCatalog& catalog);
// Range probes exist only in preserve form; flip mode returns nothing.
std::vector<Probe> gen_range(const Hypothesis& h, const Table& t,
                             ProbeMode mode, const GenerationConfig& cfg,
                             const UnitCatalog& catalog);
std::vector<Probe> gen_sorting(const Hypothesis& h, const Table& t,
                               ProbeMode mode, const GenerationConfig& cfg,
                               const UnitCatalog& catalog);
std::vector<Probe> gen_arithmetic(const Hypothesis& h, const Table& t,
                                  ProbeMode mode, const GenerationConfig& cfg,
                                  const UnitCatalog& catalog);
std::vector<Probe> gen_wordproblem(const Hypothesis& h, const Table& t,
                                   ProbeMode mode, const GenerationConfig& cfg,
                                   const UnitCatalog& catalog);
// Counterfactual probes edit the table, not the text. Each probe appends
// one table to out_tables and references it by id.
std::vector<Probe> gen_counterfactual(const Hypothesis& h, const Table& t,
                                      ProbeMode mode,
                                      const GenerationConfig& cfg,
                                      const UnitCatalog& catalog,
                                      std::vector<Table>* out_tables);

// Admission rule for external counterfactual candidates: the hypothesis
// must carry at least one numeric mention.
bool counterfactual_admissible(const Hypothesis& h);

// Runs every enabled generator over every hypothesis, hypothesis ids in
// sorted order. Per-item failures go to the skip report; this never throws
// for a bad item, only for a broken corpus (e.g. dangling table ref).
ProbeSet generate_all(const Corpus& corpus, const GenerationConfig& cfg,
                      const UnitCatalog& catalog);

struct ProbeFile {
  std::string artifact_version;
  GenerationConfig config;
  ProbeSet set;
};

// JSONL, one header record then one record per probe. Counterfactual tables
// are not written here; callers put them in a sibling table file.
void write_probes(std::ostream& os, const ProbeSet& set,
                  const GenerationConfig& cfg);
ProbeFile load_probes(std::istream& in, const std::string& locus = "probes");

// Two-column CSV (type,count) behind a comment header record.
void write_probe_stats(std::ostream& os, const ProbeSet& set,
                       const GenerationConfig& cfg);

// Re-checks every generation invariant a probe file claims: base ids
// resolve, label algebra holds, edits revert byte for byte, preserve edits
// keep the mention's value, flip edits change it, per-rule bounds hold, and
// counterfactual swaps break the link they target. Returns one line per
// violation; empty means the file is sound.
std::vector<std::string> validate_probes(const ProbeFile& file,
                                         const Corpus& corpus,
                                         const UnitCatalog& catalog);

}  // namespace numprobe

#endif  // NUMPROBE_PROBEGEN_HPP_
