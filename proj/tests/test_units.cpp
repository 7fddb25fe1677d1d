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

#include "numprobe/units.hpp"

#include <cmath>

#include "doctest.h"
#include "numprobe/errors.hpp"

using numprobe::NumericValue;
using numprobe::UnitCatalog;

namespace {
NumericValue nv(const std::string& s) { return NumericValue::parse(s); }
}  // namespace

TEST_CASE("catalog lookup and aliases") {
  UnitCatalog cat = UnitCatalog::builtin();
  CHECK(cat.version() == 1);
  CHECK(cat.require("m").id == "meter");
  CHECK(cat.require("metres").id == "meter");
  CHECK(cat.require("Meters").id == "meter");  // word aliases fold case
  CHECK(cat.find("M") == nullptr);             // symbols do not
  CHECK(cat.require("$").id == "usd");
  CHECK(cat.require("dollars").id == "usd");
  CHECK(cat.require("pounds").family == "mass");  // not sterling
  CHECK(cat.require("pounds sterling").id == "gbp");
  CHECK_THROWS_AS(cat.require("parsec"), numprobe::UnknownUnit);
}

TEST_CASE("conversions") {
  UnitCatalog cat = UnitCatalog::builtin();
  CHECK(cat.convert(nv("1.85"), "meter", "centimeter") == nv("185"));
  CHECK(cat.convert(nv("1"), "kilometer", "meter") == nv("1000"));
  CHECK(cat.convert(nv("2"), "hour", "minute") == nv("120"));
  CHECK(cat.convert(nv("138"), "minute", "hour").to_double() ==
        doctest::Approx(2.3).epsilon(1e-9));

  bool exact = false;
  NumericValue ft = cat.convert(nv("1.85"), "meter", "foot", 12, &exact);
  CHECK(!exact);
  CHECK(std::abs(ft.to_double() - 6.07) <= 0.005);

  CHECK_THROWS_AS(cat.convert(nv("1"), "meter", "kilogram"),
                  numprobe::DimensionMismatch);
  CHECK_THROWS_AS(cat.convert(nv("1"), "usd", "eur"),
                  numprobe::DimensionMismatch);
}

TEST_CASE("conversion composes within 1e-9 relative error") {
  UnitCatalog cat = UnitCatalog::builtin();
  const char* chain[] = {"millimeter", "centimeter", "meter", "kilometer",
                         "inch",       "foot",       "yard",  "mile"};
  NumericValue v = nv("1.85");
  for (const char* a : chain) {
    for (const char* b : chain) {
      for (const char* c : chain) {
        NumericValue direct = cat.convert(v, a, c);
        NumericValue hop = cat.convert(cat.convert(v, a, b), b, c);
        double rel = std::abs(hop.to_double() - direct.to_double()) /
                     std::max(1e-30, std::abs(direct.to_double()));
        CHECK(rel <= 1e-9);
      }
    }
  }
  // Power-of-ten factors round-trip exactly.
  CHECK(cat.convert(cat.convert(v, "meter", "centimeter"), "centimeter",
                    "meter") == v);
}

TEST_CASE("adjacency and cross-system counterparts") {
  UnitCatalog cat = UnitCatalog::builtin();
  CHECK(cat.adjacent_unit("meter", -1) == std::string("centimeter"));
  CHECK(cat.adjacent_unit("meter", +1) == std::string("kilometer"));
  CHECK(cat.adjacent_unit("millimeter", -1) == std::string("centimeter"));
  CHECK(cat.adjacent_unit("hour", -1) == std::string("minute"));
  CHECK(cat.adjacent_unit("usd") == std::nullopt);
  CHECK(cat.cross_system_unit("meter") == std::string("foot"));
  CHECK(cat.cross_system_unit("kilogram") == std::string("pound"));
  CHECK(cat.cross_system_unit("second") == std::nullopt);
}

TEST_CASE("file catalog matches the builtin") {
  UnitCatalog file_cat = UnitCatalog::load(
      std::string(NUMPROBE_SOURCE_DIR) + "/resources/units.catalog");
  UnitCatalog builtin_cat = UnitCatalog::builtin();
  REQUIRE(file_cat.entries().size() == builtin_cat.entries().size());
  for (size_t i = 0; i < file_cat.entries().size(); ++i) {
    const auto& a = file_cat.entries()[i];
    const auto& b = builtin_cat.entries()[i];
    CHECK(a.id == b.id);
    CHECK(a.family == b.family);
    CHECK(a.system == b.system);
    CHECK(a.factor_num == b.factor_num);
    CHECK(a.factor_den == b.factor_den);
    CHECK(a.aliases == b.aliases);
    CHECK(a.counterpart == b.counterpart);
  }
}

TEST_CASE("malformed catalogs are rejected") {
  CHECK_THROWS_AS(UnitCatalog::load("/nonexistent/units.catalog"),
                  numprobe::CatalogError);
  CHECK_THROWS_AS(UnitCatalog::parse_text("version=99\n"),
                  numprobe::CatalogError);
  CHECK_THROWS_AS(UnitCatalog::parse_text("version=1\nunit.x.family=length\n"),
                  numprobe::CatalogError);
  CHECK_THROWS_AS(UnitCatalog::parse_text("version=1\nnot a key value line\n"),
                  numprobe::CatalogError);
}
