// Copyright 2026 The zetalab Authors
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

#include "oracles.hpp"

#include "zetalab/error.hpp"
#include "zetalab/exact.hpp"

#include <doctest.h>

using namespace zetalab;

TEST_CASE("bernoulli small values")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == ExactRational(1, 6));
    CHECK(bernoulli(12) == ExactRational(-691, 2730));
}

TEST_CASE("bernoulli matches Akiyama-Tanigawa for even m <= 60")
{
    for (int m = 0; m <= 60; m += 2) {
        CAPTURE(m);
        CHECK(bernoulli(m) == oracle::bernoulli(m));
    }
}

TEST_CASE("bernoulli rejects odd and negative m")
{
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("bernoulli cache is consistent when filled out of order")
{
    const ExactRational b40 = bernoulli(40);
    CHECK(bernoulli(20) == oracle::bernoulli(20));
    CHECK(bernoulli(40) == b40);
}

TEST_CASE("euler numbers")
{
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    for (int m = 0; m <= 40; m += 2) {
        CAPTURE(m);
        CHECK(euler_number(m) == oracle::euler_number(m));
    }
    CHECK_THROWS_AS(euler_number(5), DomainError);
}

TEST_CASE("binomial and factorial")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == ExactInteger("2432902008176640000"));
    for (unsigned n = 0; n <= 40; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == oracle::pascal(n, k));
        }
    }
    CHECK_THROWS_AS(binomial(3, 4), DomainError);
}

TEST_CASE("rational construction and parsing")
{
    CHECK(make_rational(6, -4) == ExactRational(-3, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(parse_rational("355/113") == ExactRational(355, 113));
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("10/4") == ExactRational(5, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}
