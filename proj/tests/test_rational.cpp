// Copyright 2026 The pptseq Authors
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

#include <doctest.h>

#include <random>
#include <string>

#include "pptseq/errors.hpp"
#include "pptseq/rational.hpp"

using pptseq::Rational;

TEST_CASE("decimal rendering keeps 12 significant digits")
{
    CHECK(Rational(36, 1).to_decimal() == "36.0000000000");
    CHECK(Rational(72, 2).to_decimal() == "36.0000000000");
    CHECK(Rational(11, 2).to_decimal() == "5.50000000000");
    CHECK(Rational(1, 3).to_decimal() == "0.333333333333");
    CHECK(Rational(2, 3).to_decimal() == "0.666666666667");
    CHECK(Rational(0, 7).to_decimal() == "0.00000000000");
    CHECK(Rational(1, 1000).to_decimal() == "0.00100000000000");
    CHECK(Rational(742, 4448).to_decimal() == "0.166816546763");
    CHECK(Rational(123456789012345, 1).to_decimal() == "123456789012000");
    CHECK(Rational(1234567890123456, 1000).to_decimal() == "1234567890120");
}

TEST_CASE("rounding carries across digit boundaries")
{
    CHECK(Rational(9999999999995, 10000000000000).to_decimal() == "1.00000000000");
    CHECK(Rational(9999999999995, 10).to_decimal() == "1000000000000");
    CHECK(Rational(999999999999, 10).to_decimal() == "99999999999.9");
    CHECK(Rational(99999999999995, 10000000000000).to_decimal() == "10.0000000000");
    CHECK(Rational(999999999999995, 10000000000000000).to_decimal() == "0.100000000000");
    CHECK(Rational(5, 1).to_decimal(1) == "5");
    CHECK(Rational(96, 10).to_decimal(1) == "10");
    CHECK(Rational(0, 1).to_decimal(1) == "0");
}

TEST_CASE("huge numerators and denominators")
{
    const std::uint64_t max = ~std::uint64_t{0};
    CHECK(Rational(max, 1).to_decimal() == "18446744073700000000");
    CHECK(Rational(1, max).to_decimal() == "0.0000000000000000000542101086243");
    CHECK(Rational(max, max).to_decimal() == "1.00000000000");
}

TEST_CASE("comparison is by value")
{
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(10, 2) > Rational(9, 2));
    CHECK(Rational(7, 4).to_double() == doctest::Approx(1.75));
    CHECK_THROWS_AS(Rational(1, 0), pptseq::DomainError);
    CHECK_THROWS_AS(Rational(1, 1).to_decimal(0), pptseq::DomainError);
}

TEST_CASE("rendered decimals agree with floating point")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20000; ++trial) {
        const std::uint64_t num = rng() >> (rng() % 64);
        const std::uint64_t den = (rng() >> (rng() % 64)) | 1;
        const Rational value(num, den);
        const std::string text = value.to_decimal();

        std::size_t significant = 0;
        bool started = false;
        for (const char ch : text) {
            if (ch == '.') {
                continue;
            }
            started = started || ch != '0';
            significant += started ? 1 : 0;
        }
        if (num != 0) {
            // Integer results wider than 12 digits are zero-padded.
            REQUIRE((significant == 12 || (text.find('.') == std::string::npos && significant >= 12)));
            const double parsed = std::stod(text);
            REQUIRE(parsed == doctest::Approx(value.to_double()).epsilon(1e-11));
        }
    }
}
