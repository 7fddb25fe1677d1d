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

#ifndef NUMPROBE_ERRORS_HPP_
#define NUMPROBE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace numprobe {

// Base for all library errors. `code()` is a stable machine-readable
// identifier; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define NUMPROBE_DEFINE_ERROR(NAME)                            \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& message)                  \
        : Error(#NAME, message) {}                             \
  }

NUMPROBE_DEFINE_ERROR(NotANumberPhrase);
NUMPROBE_DEFINE_ERROR(OutOfRange);
NUMPROBE_DEFINE_ERROR(InvalidDate);
NUMPROBE_DEFINE_ERROR(NotScientific);
NUMPROBE_DEFINE_ERROR(NotAnOrdinal);
NUMPROBE_DEFINE_ERROR(NotAPercentage);
NUMPROBE_DEFINE_ERROR(NotACurrency);
NUMPROBE_DEFINE_ERROR(DimensionMismatch);
NUMPROBE_DEFINE_ERROR(UnknownUnit);
NUMPROBE_DEFINE_ERROR(CatalogError);
NUMPROBE_DEFINE_ERROR(ParseError);
NUMPROBE_DEFINE_ERROR(DanglingTableRef);
NUMPROBE_DEFINE_ERROR(DanglingRef);
NUMPROBE_DEFINE_ERROR(UnsupportedQuestionForm);
NUMPROBE_DEFINE_ERROR(NoApplicableMention);
NUMPROBE_DEFINE_ERROR(NoNumericCells);
NUMPROBE_DEFINE_ERROR(DuplicatePrediction);
NUMPROBE_DEFINE_ERROR(EmptyGoldSet);
NUMPROBE_DEFINE_ERROR(MissingBaseline);
NUMPROBE_DEFINE_ERROR(InsufficientShots);
NUMPROBE_DEFINE_ERROR(IoError);

#undef NUMPROBE_DEFINE_ERROR

}  // namespace numprobe

#endif  // NUMPROBE_ERRORS_HPP_
