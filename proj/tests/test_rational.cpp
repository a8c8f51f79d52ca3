// Copyright 2026 The lazygeo Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"

#include "test_support.hpp"

using namespace lazygeo;
using testsupport::random_double;

TEST_CASE("exact conversion from double") {
    CHECK(BigRational(0.5).to_string() == "1/2");
    CHECK(BigRational(-3.0).to_string() == "-3/1");
    CHECK(BigRational(0.0).to_string() == "0/1");

    // The binary64 nearest one tenth decodes to 3602879701896397 / 2^55:
    // ldexp(0.1, 55) must be that integer, and the conversion must match.
    const double scaled = std::ldexp(0.1, 55);
    CHECK(scaled == 3602879701896397.0);
    CHECK(BigRational(0.1) == BigRational(BigInt("3602879701896397"), BigInt("36028797018963968")));
    CHECK(BigRational(0.1).to_string() == "3602879701896397/36028797018963968");

    CHECK_THROWS_AS(BigRational(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(BigRational(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("canonical form") {
    CHECK(BigRational(2, 4).to_string() == "1/2");
    CHECK(BigRational(-2, 4).to_string() == "-1/2");
    CHECK(BigRational(2, -4).to_string() == "-1/2");  // denominator made positive
    CHECK(BigRational(0, 7).to_string() == "0/1");
    CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
    CHECK(BigRational(1, 3) * BigRational(3) == BigRational(1));
    CHECK((BigRational(1, 3) - BigRational(1, 3)).to_string() == "0/1");

    // gcd(|num|, den) == 1 after arithmetic
    const BigRational r = BigRational(6, 8) * BigRational(4, 9);
    CHECK(BigInt::gcd(r.numerator(), r.denominator()) == BigInt(1));
    CHECK(r.denominator().sign() == 1);
}

TEST_CASE("signs") {
    CHECK(BigRational(0, 1).sign() == 0);
    CHECK(BigRational(-2, 7).sign() == -1);
    CHECK(BigRational("10000000000000000000000000000000000000000/3").sign() == 1);
    CHECK(sign(BigRational(-5)) == -1);
    CHECK(compare(BigRational(1, 3), BigRational(1, 2)) == -1);
    CHECK(compare(BigRational(1, 3), BigRational(2, 6)) == 0);
}

TEST_CASE("string round trips") {
    CHECK(BigRational("22/7").to_string() == "22/7");
    CHECK(BigRational("-22/7") == BigRational(-22, 7));
    CHECK(BigRational("5") == BigRational(5));
    CHECK(BigRational("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(BigRational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational("1/0"), std::invalid_argument);
}

TEST_CASE("division by zero is a hard error") {
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK_THROWS_AS(BigRational(0, 0), std::domain_error);
}

TEST_CASE("field axioms on random small rationals") {
    Rand48 rng(11);
    auto random_rational = [&rng]() {
        const long num = long(rng.next() * 2001.0) - 1000;
        const long den = 1 + long(rng.next() * 999.0);
        return BigRational(num, den);
    };
    for (int i = 0; i < 2000; ++i) {
        const BigRational a = random_rational();
        const BigRational b = random_rational();
        const BigRational c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == BigRational(0));
        if (!a.is_zero()) {
            CHECK(a / a == BigRational(1));
            CHECK(b / a * a == b);
        }
    }
}

TEST_CASE("to_interval brackets tightly") {
    SUBCASE("representable values collapse to singletons") {
        CHECK(BigRational(1, 2).to_interval() == Interval(0.5));
        CHECK(BigRational(0).to_interval() == Interval(0.0));
        CHECK(BigRational(-7, 4).to_interval() == Interval(-1.75));
    }
    SUBCASE("one third sits between adjacent doubles") {
        const BigRational third(1, 3);
        const Interval iv = third.to_interval();
        CHECK(BigRational(iv.inf()) < third);
        CHECK(third < BigRational(iv.sup()));
        CHECK(iv.sup() == next_up(iv.inf()));
    }
    SUBCASE("round trip through doubles is the identity") {
        Rand48 rng(3);
        for (int i = 0; i < 5000; ++i) {
            const double x = random_double(rng);
            const Interval iv = BigRational(x).to_interval();
            CHECK(iv == Interval(x));
        }
    }
    SUBCASE("containment for random quotients") {
        Rand48 rng(4);
        for (int i = 0; i < 5000; ++i) {
            const double a = random_double(rng);
            const double b = random_double(rng);
            if (b == 0.0) continue;
            const BigRational q = BigRational(a) / BigRational(b);
            const Interval iv = q.to_interval();
            CHECK(testsupport::interval_contains(iv, q));
            if (iv.inf() != iv.sup() && std::isfinite(iv.inf()) && std::isfinite(iv.sup())) {
                CHECK(iv.sup() == next_up(iv.inf()));
            }
        }
    }
    SUBCASE("magnitudes beyond double range") {
        const BigRational big(std::string("1") + std::string(400, '0'));  // 10^400
        const Interval iv = big.to_interval();
        CHECK(iv.sup() == std::numeric_limits<double>::infinity());
        CHECK(iv.inf() == std::numeric_limits<double>::max());
        const Interval neg = (-big).to_interval();
        CHECK(neg.inf() == -std::numeric_limits<double>::infinity());
        CHECK(neg.sup() == -std::numeric_limits<double>::max());
    }
}

TEST_CASE("interval sign agreement") {
    Rand48 rng(5);
    for (int i = 0; i < 5000; ++i) {
        const double x = random_double(rng);
        const double y = random_double(rng);
        const BigRational exact = BigRational(x) - BigRational(y);
        const Certainty c = sign_certainty(Interval(x) - Interval(y));
        if (is_certain(c)) CHECK(static_cast<int>(c) == exact.sign());
    }
}

TEST_CASE("exact op counting") {
    stats::reset();
    const BigRational a(3, 7), b(2, 5);
    (void)(a + b);
    (void)(a * b);
    CHECK(stats::exact_ops() == 2);
    (void)BigRational(0.25);  // conversions are not arithmetic
    CHECK(stats::exact_ops() == 2);
    stats::reset();
    CHECK(stats::exact_ops() == 0);
}
