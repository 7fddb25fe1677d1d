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

#include "numprobe/numformat.hpp"

#include "doctest.h"
#include "numprobe/errors.hpp"
#include "numprobe/rng.hpp"

using numprobe::NumericValue;

namespace {
NumericValue nv(const std::string& s) { return NumericValue::parse(s); }
}  // namespace

TEST_CASE("scientific notation") {
  CHECK(numprobe::parse_scientific("1e0") == nv("1"));
  CHECK(numprobe::parse_scientific("2.5e3") == nv("2500"));
  CHECK(numprobe::parse_scientific("-2.5E-2") == nv("-0.025"));
  CHECK_THROWS_AS(numprobe::parse_scientific("25"), numprobe::NotScientific);
  CHECK_THROWS_AS(numprobe::parse_scientific("2.5e"), numprobe::NotScientific);
  CHECK_THROWS_AS(numprobe::parse_scientific("e3"), numprobe::NotScientific);

  CHECK(numprobe::format_scientific(nv("116111561")) == "116.111561e6");
  CHECK(numprobe::format_scientific(nv("0")) == "0e0");
  CHECK(numprobe::format_scientific(nv("1")) == "1e0");
  CHECK(numprobe::format_scientific(nv("2500")) == "2.5e3");
  CHECK(numprobe::format_scientific(nv("-2500")) == "-2.5e3");
  CHECK(numprobe::format_scientific(nv("0.5")) == "500e-3");
  CHECK(numprobe::format_scientific(nv("999")) == "999e0");
  CHECK(numprobe::format_scientific(nv("1000")) == "1e3");
}

TEST_CASE("scientific round trip keeps the coefficient window") {
  numprobe::Rng rng(0x5c1);
  for (int i = 0; i < 2000; ++i) {
    long long raw = rng.between(-1000000000000LL, 1000000000000LL);
    NumericValue v = nv(std::to_string(raw));
    std::string s = numprobe::format_scientific(v);
    CHECK(numprobe::parse_scientific(s) == v);
    if (!v.is_zero()) {
      NumericValue coeff = nv(s.substr(0, s.find('e')));
      CHECK(coeff.abs() >= nv("1"));
      CHECK(coeff.abs() < nv("1000"));
      int exp = std::stoi(s.substr(s.find('e') + 1));
      CHECK(exp % 3 == 0);
    }
  }
}

TEST_CASE("percentages") {
  CHECK(numprobe::parse_percentage("35%") == nv("35"));
  CHECK(numprobe::parse_percentage("13.1%") == nv("13.1"));
  CHECK(numprobe::parse_percentage("35 percent") == nv("35"));
  CHECK(numprobe::parse_percentage("35 per cent") == nv("35"));
  CHECK_THROWS_AS(numprobe::parse_percentage("35"), numprobe::NotAPercentage);
  CHECK_THROWS_AS(numprobe::parse_percentage("x%"), numprobe::NotAPercentage);
  CHECK(numprobe::render_percentage_sign(nv("35")) == "35%");
  CHECK(numprobe::render_percentage_word(nv("35")) == "35 percent");
  CHECK(numprobe::render_percentage_word(nv("13.1")) == "13.1 percent");
}

TEST_CASE("round_magnitude tier anchors") {
  CHECK(numprobe::round_magnitude(nv("116111561")) == nv("116000000"));
  CHECK(numprobe::round_magnitude(nv("0")) == nv("0"));
  CHECK(numprobe::round_magnitude(nv("138")) == nv("140"));
  CHECK(numprobe::round_magnitude(nv("37")) == nv("40"));
  CHECK(numprobe::round_magnitude(nv("-138")) == nv("-140"));
  // Tier edges.
  CHECK(numprobe::round_magnitude(nv("999")) == nv("1000"));       // tens
  CHECK(numprobe::round_magnitude(nv("1001")) == nv("1000"));      // hundreds
  CHECK(numprobe::round_magnitude(nv("99949")) == nv("99900"));    // hundreds
  CHECK(numprobe::round_magnitude(nv("100049")) == nv("100000"));  // thousands
  CHECK(numprobe::round_magnitude(nv("9999499")) == nv("9999000"));
  // >= 10^7 keeps three significant digits.
  CHECK(numprobe::round_magnitude(nv("10049999")) == nv("10000000"));
  CHECK(numprobe::round_magnitude(nv("10050000")) == nv("10100000"));
}

TEST_CASE("round_magnitude against a brute-force oracle") {
  // Independent oracle for the first tier: pick the multiple of ten with
  // the smallest distance, preferring the larger magnitude on ties.
  for (int v = -2000; v <= 2000; ++v) {
    if (v <= -1000 || v >= 1000) continue;
    int best = 0;
    long long best_dist = 1LL << 60;
    for (int m = -2010; m <= 2010; m += 10) {
      long long dist = std::llabs(static_cast<long long>(v) - m);
      bool closer = dist < best_dist ||
                    (dist == best_dist && std::llabs(m) > std::llabs(best));
      if (closer) {
        best = m;
        best_dist = dist;
      }
    }
    CHECK(numprobe::round_magnitude(nv(std::to_string(v))) ==
          nv(std::to_string(best)));
  }
}
