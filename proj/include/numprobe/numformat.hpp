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

#ifndef NUMPROBE_NUMFORMAT_HPP_
#define NUMPROBE_NUMFORMAT_HPP_

#include <string>

#include "numprobe/numeric_value.hpp"

namespace numprobe {

// Any e-notation ("2.5e3", "1E-2"). Throws NotScientific.
NumericValue parse_scientific(const std::string& surface);

// Engineering normalization: coefficient in [1, 1000), exponent a multiple
// of three. 116111561 -> "116.111561e6"; 0 -> "0e0".
std::string format_scientific(const NumericValue& v);

// "35%" or "35 percent" -> 35. Throws NotAPercentage.
NumericValue parse_percentage(const std::string& surface);
std::string render_percentage_sign(const NumericValue& v);  // -> "35%"
std::string render_percentage_word(const NumericValue& v);  // -> "35 percent"

// Tiered rounding, half away from zero:
//   |v| < 10^3 -> nearest 10      |v| < 10^5 -> nearest 100
//   |v| < 10^7 -> nearest 1000    else       -> 3 significant digits
NumericValue round_magnitude(const NumericValue& v);

}  // namespace numprobe

#endif  // NUMPROBE_NUMFORMAT_HPP_
