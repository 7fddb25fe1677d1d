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

#include "numprobe/taxonomy.hpp"

namespace numprobe {

const char* reasoning_type_name(ReasoningType type) {
  switch (type) {
    case ReasoningType::kNumeration: return "numeration";
    case ReasoningType::kHeterogeneous: return "heterogeneous";
    case ReasoningType::kNegative: return "negative";
    case ReasoningType::kScale: return "scale";
    case ReasoningType::kComparison: return "comparison";
    case ReasoningType::kApproximation: return "approximation";
    case ReasoningType::kRange: return "range";
    case ReasoningType::kSorting: return "sorting";
    case ReasoningType::kArithmetic: return "arithmetic";
    case ReasoningType::kWordProblem: return "word-problem";
    case ReasoningType::kCounterfactual: return "counterfactual";
  }
  return "unknown";
}

std::optional<ReasoningType> reasoning_type_from_name(std::string_view name) {
  for (ReasoningType t : all_reasoning_types()) {
    if (name == reasoning_type_name(t)) return t;
  }
  // Accepted spelling variants seen in dataset configs.
  if (name == "wordproblem" || name == "word_problem") {
    return ReasoningType::kWordProblem;
  }
  return std::nullopt;
}

ReasoningLevel reasoning_level(ReasoningType type) {
  switch (type) {
    case ReasoningType::kNumeration:
    case ReasoningType::kHeterogeneous:
    case ReasoningType::kNegative:
      return ReasoningLevel::kRepresentation;
    case ReasoningType::kScale:
    case ReasoningType::kComparison:
    case ReasoningType::kApproximation:
    case ReasoningType::kRange:
      return ReasoningLevel::kNumberSense;
    case ReasoningType::kSorting:
    case ReasoningType::kArithmetic:
      return ReasoningLevel::kManipulation;
    case ReasoningType::kWordProblem:
    case ReasoningType::kCounterfactual:
      return ReasoningLevel::kComplexReasoning;
  }
  return ReasoningLevel::kRepresentation;
}

const char* reasoning_level_name(ReasoningLevel level) {
  switch (level) {
    case ReasoningLevel::kRepresentation: return "representation";
    case ReasoningLevel::kNumberSense: return "number-sense";
    case ReasoningLevel::kManipulation: return "manipulation";
    case ReasoningLevel::kComplexReasoning: return "complex-reasoning";
  }
  return "unknown";
}

}  // namespace numprobe
