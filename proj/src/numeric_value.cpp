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

#include "numprobe/numeric_value.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "numprobe/errors.hpp"

namespace numprobe {

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

int decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  return static_cast<int>(v.str().size());
}

}  // namespace

BigInt bigint_from_digits(const std::string& digits) {
  size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  std::string trimmed = digits.substr(i);
  if (trimmed.empty() ||
      !std::all_of(trimmed.begin(), trimmed.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      })) {
    throw ParseError("not a digit string: \"" + digits + "\"");
  }
  return BigInt(trimmed);
}

NumericValue::NumericValue(long long v) {
  negative_ = v < 0;
  coefficient_ = negative_ ? -BigInt(v) : BigInt(v);
  scale_exp_ = 0;
  canonicalize();
}

void NumericValue::canonicalize() {
  if (coefficient_ == 0) {
    negative_ = false;
    scale_exp_ = 0;
    return;
  }
  while (coefficient_ % 10 == 0) {
    coefficient_ /= 10;
    ++scale_exp_;
  }
}

NumericValue NumericValue::from_parts(bool negative, BigInt coefficient,
                                      int32_t scale_exp) {
  NumericValue v;
  v.negative_ = negative;
  v.coefficient_ = std::move(coefficient);
  v.scale_exp_ = scale_exp;
  if (v.coefficient_ < 0) {
    v.coefficient_ = -v.coefficient_;
    v.negative_ = !v.negative_;
  }
  v.canonicalize();
  return v;
}

NumericValue NumericValue::parse(const std::string& text) {
  size_t i = 0;
  const size_t n = text.size();
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  size_t int_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i]);
    ++i;
    ++int_digits;
  }
  size_t frac_digits = 0;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i]);
      ++i;
      ++frac_digits;
    }
  }
  if (digits.empty() || (int_digits == 0 && frac_digits == 0)) {
    throw ParseError("not a decimal literal: \"" + text + "\"");
  }
  long exp = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("malformed exponent in \"" + text + "\"");
    }
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exp = exp * 10 + (text[i] - '0');
      if (exp > 100000) throw ParseError("exponent overflow in \"" + text + "\"");
      ++i;
    }
    if (eneg) exp = -exp;
  }
  if (i != n) throw ParseError("trailing characters in \"" + text + "\"");
  return from_parts(neg, bigint_from_digits(digits),
                    static_cast<int32_t>(exp - static_cast<long>(frac_digits)));
}

NumericValue NumericValue::from_double(double v, int frac_digits) {
  if (!std::isfinite(v)) throw OutOfRange("non-finite double");
  if (frac_digits < 0) frac_digits = 0;
  // Print guard digits, then round on the exact decimal: printf itself
  // rounds half to even, which is not this library's tie rule.
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.*f", frac_digits + 9, v);
  return parse(buf).round_to_frac_digits(frac_digits);
}

int NumericValue::magnitude_order() const {
  if (is_zero()) throw OutOfRange("magnitude_order of zero");
  return decimal_digits(coefficient_) - 1 + scale_exp_;
}

NumericValue NumericValue::negated() const {
  if (is_zero()) return *this;
  NumericValue v = *this;
  v.negative_ = !v.negative_;
  return v;
}

NumericValue NumericValue::abs() const {
  NumericValue v = *this;
  v.negative_ = false;
  return v;
}

NumericValue NumericValue::plus(const NumericValue& o) const {
  int32_t exp = std::min(scale_exp_, o.scale_exp_);
  BigInt a = coefficient_ * pow10(scale_exp_ - exp);
  BigInt b = o.coefficient_ * pow10(o.scale_exp_ - exp);
  if (negative_) a = -a;
  if (o.negative_) b = -b;
  return from_parts(false, a + b, exp);
}

NumericValue NumericValue::minus(const NumericValue& o) const {
  return plus(o.negated());
}

NumericValue NumericValue::times(const NumericValue& o) const {
  return from_parts(negative_ != o.negative_, coefficient_ * o.coefficient_,
                    scale_exp_ + o.scale_exp_);
}

NumericValue NumericValue::divided_by(const NumericValue& o, int max_sig,
                                      bool* exact) const {
  if (o.is_zero()) throw OutOfRange("division by zero");
  NumericValue q = times_ratio(
      BigInt(1), o.negative_ ? BigInt(-o.coefficient_) : o.coefficient_,
      max_sig, exact);
  return q.shifted(-o.scale_exp_);
}

NumericValue NumericValue::times_ratio(const BigInt& num, const BigInt& den,
                                       int max_sig, bool* exact) const {
  if (den == 0) throw OutOfRange("zero denominator");
  BigInt n = coefficient_ * num;
  BigInt d = den;
  bool neg = negative_;
  if (n < 0) {
    n = -n;
    neg = !neg;
  }
  if (d < 0) {
    d = -d;
    neg = !neg;
  }
  if (exact) *exact = true;
  if (n == 0) return NumericValue();
  int32_t exp = scale_exp_;
  BigInt q = n / d;
  BigInt r = n % d;
  if (r == 0) return from_parts(neg, q, exp);
  // Long-divide fractional digits until the remainder clears or the
  // significant-digit budget runs out, then round half away from zero.
  int sig = q == 0 ? 0 : decimal_digits(q);
  while (r != 0 && sig < max_sig) {
    n *= 10;
    --exp;
    q = n / d;
    r = n % d;
    sig = q == 0 ? 0 : decimal_digits(q);
  }
  if (r != 0) {
    if (exact) *exact = false;
    if (r * 2 >= d) q += 1;
  }
  return from_parts(neg, q, exp);
}

NumericValue NumericValue::shifted(int k) const {
  if (is_zero()) return *this;
  return from_parts(negative_, coefficient_, scale_exp_ + k);
}

NumericValue NumericValue::round_to_multiple_of(
    const NumericValue& granularity) const {
  if (granularity.sign() <= 0) throw OutOfRange("granularity must be positive");
  // q = round(this / g) as an exact integer decision, then q * g.
  int32_t exp = std::min(scale_exp_, granularity.scale_exp_);
  BigInt a = coefficient_ * pow10(scale_exp_ - exp);
  BigInt g = granularity.coefficient_ * pow10(granularity.scale_exp_ - exp);
  BigInt q = a / g;
  BigInt r = a % g;
  if (r * 2 >= g) q += 1;
  return from_parts(negative_, q * g, exp);
}

NumericValue NumericValue::round_to_frac_digits(int frac_digits) const {
  if (frac_digits < 0) frac_digits = 0;
  if (scale_exp_ >= -frac_digits) return *this;
  int drop = -scale_exp_ - frac_digits;
  BigInt p = pow10(drop);
  BigInt q = coefficient_ / p;
  BigInt r = coefficient_ % p;
  if (r * 2 >= p) q += 1;
  return from_parts(negative_, q, -frac_digits);
}

int NumericValue::compare(const NumericValue& o) const {
  if (sign() != o.sign()) return sign() < o.sign() ? -1 : 1;
  if (is_zero()) return 0;
  int32_t exp = std::min(scale_exp_, o.scale_exp_);
  BigInt a = coefficient_ * pow10(scale_exp_ - exp);
  BigInt b = o.coefficient_ * pow10(o.scale_exp_ - exp);
  int mag = a == b ? 0 : (a < b ? -1 : 1);
  return negative_ ? -mag : mag;
}

double NumericValue::to_double() const {
  std::string s = coefficient_.str() + "e" + std::to_string(scale_exp_);
  double v = std::strtod(s.c_str(), nullptr);
  return negative_ ? -v : v;
}

std::string NumericValue::to_string() const {
  std::string digits = coefficient_.str();
  std::string out;
  if (negative_) out.push_back('-');
  if (scale_exp_ >= 0) {
    out += digits;
    out.append(static_cast<size_t>(scale_exp_), '0');
    return out;
  }
  size_t frac = static_cast<size_t>(-scale_exp_);
  if (digits.size() > frac) {
    out += digits.substr(0, digits.size() - frac);
    out.push_back('.');
    out += digits.substr(digits.size() - frac);
  } else {
    out += "0.";
    out.append(frac - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string NumericValue::to_grouped_string() const {
  std::string plain = to_string();
  size_t start = plain[0] == '-' ? 1 : 0;
  size_t dot = plain.find('.');
  size_t int_end = dot == std::string::npos ? plain.size() : dot;
  std::string grouped = plain.substr(0, start);
  size_t len = int_end - start;
  for (size_t i = 0; i < len; ++i) {
    if (i > 0 && (len - i) % 3 == 0) grouped.push_back(',');
    grouped.push_back(plain[start + i]);
  }
  grouped += plain.substr(int_end);
  return grouped;
}

}  // namespace numprobe
