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

#include <string>

#include "doctest.h"
#include "numprobe/errors.hpp"
#include "numprobe/rng.hpp"

using numprobe::NumericValue;

namespace {
NumericValue nv(const std::string& s) { return NumericValue::parse(s); }
}  // namespace

TEST_CASE("parse and canonical rendering") {
  CHECK(nv("0").to_string() == "0");
  CHECK(nv("-0").to_string() == "0");
  CHECK(nv("007").to_string() == "7");
  CHECK(nv("1.850").to_string() == "1.85");
  CHECK(nv("1.850") == nv("1.85"));
  CHECK(nv("-12.5").to_string() == "-12.5");
  CHECK(nv("0.007").to_string() == "0.007");
  CHECK(nv("2.5e3").to_string() == "2500");
  CHECK(nv("116.111561e6").to_string() == "116111561");
  CHECK(nv("5e-3").to_string() == "0.005");
  CHECK(nv("1e0").to_string() == "1");
  CHECK_THROWS_AS(nv("abc"), numprobe::ParseError);
  CHECK_THROWS_AS(nv(""), numprobe::ParseError);
  CHECK_THROWS_AS(nv("1.2.3"), numprobe::ParseError);
}

TEST_CASE("arithmetic is exact") {
  // Runtime column delta from the example infobox pair.
  CHECK(nv("245.4").minus(nv("137")).to_string() == "108.4");
  CHECK(nv("245.4").minus(nv("137")) == nv("108.4"));
  CHECK(nv("0.1").plus(nv("0.2")).to_string() == "0.3");
  CHECK(nv("1.85").times(nv("100")).to_string() == "185");
  CHECK(nv("-5").times(nv("1000000")).to_string() == "-5000000");
  CHECK(nv("1").divided_by(nv("8"), 12).to_string() == "0.125");
  bool exact = true;
  NumericValue third = nv("1").divided_by(nv("3"), 6, &exact);
  CHECK(!exact);
  CHECK(third.to_string() == "0.333333");
  NumericValue eighth = nv("1").divided_by(nv("8"), 12, &exact);
  CHECK(exact);
  CHECK(eighth == nv("0.125"));
  CHECK(nv("7").divided_by(nv("-2"), 12).to_string() == "-3.5");
}

TEST_CASE("times_ratio carries unit conversions") {
  // meters -> centimeters is *100/1.
  CHECK(nv("1.85").times_ratio(numprobe::BigInt(100), numprobe::BigInt(1), 12)
            .to_string() == "185");
  // meters -> feet is *1250/381; 12 significant digits.
  bool exact = true;
  NumericValue ft =
      nv("1.85").times_ratio(numprobe::BigInt(1250), numprobe::BigInt(381), 12,
                             &exact);
  CHECK(!exact);
  double err = ft.to_double() - 6.0695538057742782;
  CHECK(err < 1e-9);
  CHECK(err > -1e-9);
}

TEST_CASE("rounding half away from zero") {
  CHECK(nv("135").round_to_multiple_of(nv("10")).to_string() == "140");
  CHECK(nv("-135").round_to_multiple_of(nv("10")).to_string() == "-140");
  CHECK(nv("134.9").round_to_multiple_of(nv("10")).to_string() == "130");
  CHECK(nv("116111561").round_to_multiple_of(nv("1000000")).to_string() ==
        "116000000");
  CHECK(nv("2.345").round_to_frac_digits(2).to_string() == "2.35");
  CHECK(nv("-2.345").round_to_frac_digits(2).to_string() == "-2.35");
  CHECK(nv("2.0").round_to_frac_digits(2).to_string() == "2");
}

TEST_CASE("comparisons and magnitude") {
  CHECK(nv("1.85") < nv("2"));
  CHECK(nv("-3") < nv("0.5"));
  CHECK(nv("100") > nv("99.999"));
  CHECK(nv("116111561").magnitude_order() == 8);
  CHECK(nv("999").magnitude_order() == 2);
  CHECK(nv("1000").magnitude_order() == 3);
  CHECK(nv("0.5").magnitude_order() == -1);
  CHECK(nv("0.007").magnitude_order() == -3);
}

TEST_CASE("grouped rendering") {
  CHECK(nv("116111561").to_grouped_string() == "116,111,561");
  CHECK(nv("116000000").to_grouped_string() == "116,000,000");
  CHECK(nv("-1234.56").to_grouped_string() == "-1,234.56");
  CHECK(nv("999").to_grouped_string() == "999");
  CHECK(nv("1000").to_grouped_string() == "1,000");
}

TEST_CASE("from_double quantizes") {
  CHECK(NumericValue::from_double(6.0695538057742782, 2).to_string() == "6.07");
  CHECK(NumericValue::from_double(-0.125, 2).to_string() == "-0.13");
  CHECK(NumericValue::from_double(37.0, 0).to_string() == "37");
}

TEST_CASE("parse and to_string round-trip under random values") {
  numprobe::Rng rng(0x5eed);
  for (int i = 0; i < 2000; ++i) {
    long long int_part = rng.between(-1000000000000LL, 1000000000000LL);
    int frac = static_cast<int>(rng.below(4));
    std::string s = std::to_string(int_part);
    if (frac > 0) {
      s += ".";
      for (int d = 0; d < frac; ++d) {
        s += static_cast<char>('0' + rng.below(10));
      }
    }
    NumericValue v = nv(s);
    CHECK(nv(v.to_string()) == v);
    CHECK(v.negated().negated() == v);
    CHECK(v.plus(v.negated()).is_zero());
  }
}
