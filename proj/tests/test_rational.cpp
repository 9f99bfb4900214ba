// Copyright 2026 The clumin authors
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

#include <doctest.h>

#include <limits>

#include "clumin/errors.hpp"
#include "clumin/rational.hpp"

using namespace clumin;

TEST_SUITE("rational") {

TEST_CASE("normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(5, -3).denominator() == 3);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    Rational sum(0);
    for (int i = 0; i < 10; ++i) sum += Rational(1, 10);
    CHECK(sum == Rational(1));
}

TEST_CASE("exact comparison") {
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    // near-equal fractions a float comparison would merge
    CHECK(Rational(333333333333333333, 1000000000000000000) <
          Rational(333333333333333334, 1000000000000000000));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational::parse(Rational(-9, 2).str()) == Rational(-9, 2));

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("overflow is reported, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(big), OverflowError);
    CHECK_THROWS_AS(Rational(big) * Rational(2), OverflowError);
    // large but representable results still work
    CHECK(Rational(big) + Rational(-big) == Rational(0));
    CHECK(Rational(big - 1, 2) * Rational(2) == Rational(big - 1));
    CHECK(Rational(big, 2) + Rational(big, 2) == Rational(big));
}

TEST_CASE("zero denominators") {
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

}  // TEST_SUITE
