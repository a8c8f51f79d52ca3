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
#include <limits>

#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"

#include "test_support.hpp"

using namespace lazygeo;
using testsupport::interval_contains;
using testsupport::random_double;

namespace {

Interval apply_op(int op, const Interval& a, const Interval& b) {
    switch (op) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return a / b;
    }
}

BigRational apply_op(int op, const BigRational& a, const BigRational& b) {
    switch (op) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return a / b;
    }
}

}  // namespace

TEST_CASE("singleton construction") {
    CHECK(Interval(1.5).inf() == 1.5);
    CHECK(Interval(1.5).sup() == 1.5);
    CHECK(Interval(0.0) == Interval(0.0, 0.0));
    // 0.1 means the stored double, which is exact.
    CHECK(Interval(0.1).is_singleton());
    CHECK(Interval(0.1).inf() == 0.1);

    CHECK_THROWS_AS(Interval(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(Interval(std::nan("")), std::invalid_argument);
}

TEST_CASE("addition stays within two ulps of the true endpoints") {
    const Interval r = Interval(1.0, 2.0) + Interval(3.0, 4.0);
    CHECK(r.inf() <= 4.0);
    CHECK(r.sup() >= 6.0);
    CHECK(r.inf() >= next_down(4.0));
    CHECK(r.sup() <= next_up(6.0));
}

TEST_CASE("exact endpoint arithmetic is not widened") {
    // Small-integer endpoints: every bound operation is exact.
    const Interval r = Interval(-1.0, 2.0) * Interval(3.0, 4.0);
    CHECK(r == Interval(-4.0, 8.0));
    const Interval s = Interval(1.0, 2.0) + Interval(3.0, 4.0);
    CHECK(s == Interval(4.0, 6.0));
}

TEST_CASE("division brackets one third strictly") {
    const Interval r = Interval(1.0) / Interval(3.0);
    const BigRational third = BigRational(1) / BigRational(3);
    CHECK(BigRational(r.inf()) < third);
    CHECK(third < BigRational(r.sup()));
    CHECK(r.sup() <= next_up(next_up(r.inf())));
}

TEST_CASE("division by a zero-containing interval signals uncertainty") {
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), UncertainComparison);
    CHECK_THROWS_AS(Interval(1.0) / Interval(0.0), UncertainComparison);
    CHECK_THROWS_AS(Interval(1.0) / Interval(0.0, 5.0), UncertainComparison);
}

TEST_CASE("sign certainty") {
    CHECK(sign_certainty(Interval(1e-300, 2e-300)) == Certainty::Positive);
    CHECK(sign_certainty(Interval(0.0)) == Certainty::Zero);
    CHECK(sign_certainty(Interval(-1.0, 1.0)) == Certainty::Uncertain);
    CHECK(sign_certainty(Interval(0.0, 1.0)) == Certainty::Uncertain);
    CHECK(sign_certainty(Interval(-2.0, -1e-320)) == Certainty::Negative);

    CHECK(sign(Interval(2.0, 3.0)) == 1);
    CHECK_THROWS_AS(sign(Interval(-1.0, 1.0)), UncertainComparison);
}

TEST_CASE("comparison certainty, including touching intervals") {
    CHECK(compare_certainty(Interval(1.0, 2.0), Interval(3.0, 4.0)) == Certainty::Negative);
    CHECK(compare_certainty(Interval(2.0), Interval(2.0)) == Certainty::Zero);
    CHECK(compare_certainty(Interval(1.0, 3.0), Interval(2.0, 4.0)) == Certainty::Uncertain);
    // Touching at one bound stays undecided unless both are singletons.
    CHECK(compare_certainty(Interval(1.0, 2.0), Interval(2.0, 3.0)) == Certainty::Uncertain);
    CHECK(compare_certainty(Interval(2.0), Interval(2.0, 3.0)) == Certainty::Uncertain);
    CHECK(compare(Interval(5.0, 6.0), Interval(1.0, 2.0)) == 1);
}

TEST_CASE("inclusion property over random doubles") {
    Rand48 rng(2026);
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const double x = random_double(rng);
        const double y = random_double(rng);
        const int op = int(rng.next() * 4.0);
        const Interval a(x), b(y);
        Interval r;
        try {
            r = apply_op(op, a, b);
        } catch (const UncertainComparison&) {
            continue;  // zero divisor
        }
        const BigRational exact = apply_op(op, BigRational(x), BigRational(y));
        ++checked;
        REQUIRE(interval_contains(r, exact));
    }
    CHECK(checked > 15000);
}

TEST_CASE("inclusion through short random expression chains") {
    Rand48 rng(7);
    for (int trial = 0; trial < 4000; ++trial) {
        Interval iv(random_double(rng));
        BigRational ex(iv.inf());
        for (int step = 0; step < 6; ++step) {
            const double y = random_double(rng);
            const int op = int(rng.next() * 4.0);
            try {
                iv = apply_op(op, iv, Interval(y));
            } catch (const UncertainComparison&) {
                continue;
            }
            ex = apply_op(op, ex, BigRational(y));
            REQUIRE(interval_contains(iv, ex));
        }
    }
}

TEST_CASE("monotone containment up to one widening step") {
    Rand48 rng(99);
    for (int trial = 0; trial < 5000; ++trial) {
        const double x = random_double(rng);
        const double y = random_double(rng);
        const double px = std::fabs(random_double(rng));
        const double py = std::fabs(random_double(rng));
        const Interval a(x), b(y);
        const Interval a2(detail::sub_lo(x, px), detail::add_hi(x, px));
        const Interval b2(detail::sub_lo(y, py), detail::add_hi(y, py));
        const int op = int(rng.next() * 4.0);
        Interval small, big;
        try {
            small = apply_op(op, a, b);
            big = apply_op(op, a2, b2);
        } catch (const UncertainComparison&) {
            continue;
        }
        const Interval slack(next_down(big.inf()), next_up(big.sup()));
        REQUIRE(small.subset_of(slack));
    }
}

TEST_CASE("decided signs never contradict a contained value") {
    Rand48 rng(123);
    for (int trial = 0; trial < 5000; ++trial) {
        const double x = random_double(rng);
        const double y = random_double(rng);
        const Interval iv(std::fmin(x, y), std::fmax(x, y));
        const Certainty c = sign_certainty(iv);
        if (!is_certain(c)) continue;
        for (double v : {iv.inf(), iv.sup(), iv.inf() + (iv.sup() - iv.inf()) / 2}) {
            if (!std::isfinite(v) || !iv.contains(v)) continue;
            const int s = BigRational(v).sign();
            if (c == Certainty::Zero) CHECK(s == 0);
            if (c == Certainty::Positive) CHECK(s > 0);
            if (c == Certainty::Negative) CHECK(s < 0);
        }
    }
}

TEST_CASE("overflow widens to infinity without NaN") {
    const double huge = std::numeric_limits<double>::max();
    const double inf = std::numeric_limits<double>::infinity();
    const Interval r = Interval(huge) + Interval(huge);
    CHECK(r.inf() == huge);
    CHECK(r.sup() == inf);

    const Interval m = Interval(huge) * Interval(0.0, 1.0);
    CHECK(m == Interval(0.0, huge));

    // An infinite bound meeting a zero bound must not leak NaN.
    const Interval z = r * Interval(0.0, 1.0);
    CHECK(!(z.inf() != z.inf()));
    CHECK(!(z.sup() != z.sup()));
    CHECK(z.contains(0.0));
    CHECK(z.sup() == inf);

    const Interval n = r - r;
    CHECK(!(n.inf() != n.inf()));
    CHECK(!(n.sup() != n.sup()));
    CHECK(n.contains(0.0));
}
