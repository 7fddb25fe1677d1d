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

#ifndef NUMPROBE_NUMERIC_VALUE_HPP_
#define NUMPROBE_NUMERIC_VALUE_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace numprobe {

using BigInt = boost::multiprecision::cpp_int;

// Decimal digit string -> BigInt. cpp_int's own string constructor follows
// C++ literal rules, so a leading zero would flip it into octal; this one
// is always base 10. Throws ParseError on non-digits.
BigInt bigint_from_digits(const std::string& digits);

// Exact sign/coefficient/exponent decimal: value = sign * digits * 10^scale_exp.
//
// The representation is kept canonical (no trailing zero digits in the
// coefficient unless the value is zero), so two NumericValues compare equal
// exactly when they denote the same quantity: 1.850 == 1.85.
class NumericValue {
 public:
  NumericValue() = default;
  NumericValue(long long v);  // NOLINT: implicit by design, ints are values

  // Accepts [+-]?digits[.digits][(e|E)[+-]digits]. Grouping commas are not
  // accepted here; strip them upstream.
  static NumericValue parse(const std::string& text);

  // Quantize a double onto the decimal grid with `frac_digits` fractional
  // digits (round half away from zero).
  static NumericValue from_double(double v, int frac_digits);

  static NumericValue from_parts(bool negative, BigInt coefficient,
                                 int32_t scale_exp);

  bool negative() const { return negative_; }
  const BigInt& coefficient() const { return coefficient_; }
  int32_t scale_exp() const { return scale_exp_; }

  bool is_zero() const { return coefficient_ == 0; }
  bool is_integer() const { return scale_exp_ >= 0 || coefficient_ == 0; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  // Number of fractional digits in the canonical rendering (0 for integers).
  int frac_digits() const { return scale_exp_ < 0 ? -scale_exp_ : 0; }

  // floor(log10(|value|)); value must be nonzero.
  int magnitude_order() const;

  NumericValue negated() const;
  NumericValue abs() const;

  NumericValue plus(const NumericValue& o) const;
  NumericValue minus(const NumericValue& o) const;
  NumericValue times(const NumericValue& o) const;

  // Division rounded (half away from zero) to `max_sig` significant digits
  // when it does not terminate earlier; `exact` reports termination.
  NumericValue divided_by(const NumericValue& o, int max_sig,
                          bool* exact = nullptr) const;

  // value * (num / den), exact numerator product, division as divided_by.
  NumericValue times_ratio(const BigInt& num, const BigInt& den, int max_sig,
                           bool* exact = nullptr) const;

  // Multiply by 10^k (exact).
  NumericValue shifted(int k) const;

  // Nearest multiple of `granularity` (> 0), half away from zero.
  NumericValue round_to_multiple_of(const NumericValue& granularity) const;

  // Round to `frac_digits` fractional digits, half away from zero.
  NumericValue round_to_frac_digits(int frac_digits) const;

  // -1 / 0 / +1 comparison of values.
  int compare(const NumericValue& o) const;

  bool operator==(const NumericValue& o) const {
    return negative_ == o.negative_ && scale_exp_ == o.scale_exp_ &&
           coefficient_ == o.coefficient_;
  }
  bool operator!=(const NumericValue& o) const { return !(*this == o); }
  bool operator<(const NumericValue& o) const { return compare(o) < 0; }
  bool operator<=(const NumericValue& o) const { return compare(o) <= 0; }
  bool operator>(const NumericValue& o) const { return compare(o) > 0; }
  bool operator>=(const NumericValue& o) const { return compare(o) >= 0; }

  double to_double() const;

  // Plain positional rendering, e.g. "-12.5", "1850", "0.007".
  std::string to_string() const;

  // Positional rendering with thousands separators in the integer part.
  std::string to_grouped_string() const;

 private:
  void canonicalize();

  bool negative_ = false;
  BigInt coefficient_ = 0;  // always >= 0
  int32_t scale_exp_ = 0;
};

// Value equality across representations (alias for operator== on canonical
// forms; reads better at call sites that compare parsed surfaces).
inline bool value_equal(const NumericValue& a, const NumericValue& b) {
  return a == b;
}

}  // namespace numprobe

#endif  // NUMPROBE_NUMERIC_VALUE_HPP_
