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

#ifndef NUMPROBE_TAXONOMY_HPP_
#define NUMPROBE_TAXONOMY_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace numprobe {

// The eleven reasoning types probes are generated for, grouped in four
// levels of increasing complexity.
enum class ReasoningType {
  kNumeration,
  kHeterogeneous,
  kNegative,
  kScale,
  kComparison,
  kApproximation,
  kRange,
  kSorting,
  kArithmetic,
  kWordProblem,
  kCounterfactual,
};

inline constexpr int kReasoningTypeCount = 11;

enum class ReasoningLevel {
  kRepresentation,   // R1: numeration, heterogeneous, negative
  kNumberSense,      // R2: scale, comparison, approximation, range
  kManipulation,     // R3: sorting, arithmetic
  kComplexReasoning, // R4: word problems, counterfactual
};

constexpr std::array<ReasoningType, kReasoningTypeCount> all_reasoning_types() {
  return {ReasoningType::kNumeration,     ReasoningType::kHeterogeneous,
          ReasoningType::kNegative,       ReasoningType::kScale,
          ReasoningType::kComparison,     ReasoningType::kApproximation,
          ReasoningType::kRange,          ReasoningType::kSorting,
          ReasoningType::kArithmetic,     ReasoningType::kWordProblem,
          ReasoningType::kCounterfactual};
}

const char* reasoning_type_name(ReasoningType type);
std::optional<ReasoningType> reasoning_type_from_name(std::string_view name);

ReasoningLevel reasoning_level(ReasoningType type);
const char* reasoning_level_name(ReasoningLevel level);

}  // namespace numprobe

#endif  // NUMPROBE_TAXONOMY_HPP_
