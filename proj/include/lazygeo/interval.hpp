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

#pragma once

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <stdexcept>

namespace lazygeo {

/// Signal thrown when an interval computation is too imprecise to decide a
/// comparison (or to rule zero out of a divisor).  Callers that own an exact
/// fallback catch it and redo the computation exactly.
class UncertainComparison : public std::exception {
public:
    const char* what() const noexcept override {
        return "interval too wide to certify the comparison";
    }
};

/// Three-valued sign/order result, plus the undecided case.
enum class Certainty : int {
    Negative = -1,
    Zero = 0,
    Positive = 1,
    Uncertain = 2,
};

constexpr bool is_certain(Certainty c) noexcept { return c != Certainty::Uncertain; }

/// Next representable double above x.  +inf is a fixed point; zeros step to
/// the smallest subnormal.
inline double next_up(double x) noexcept {
    if (x == std::numeric_limits<double>::infinity()) return x;
    if (x == 0.0) return std::numeric_limits<double>::denorm_min();
    auto b = std::bit_cast<std::uint64_t>(x);
    b += (x > 0.0) ? 1u : std::uint64_t(-1);
    return std::bit_cast<double>(b);
}

/// Next representable double below x (mirror of next_up).
inline double next_down(double x) noexcept {
    if (x == -std::numeric_limits<double>::infinity()) return x;
    if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
    auto b = std::bit_cast<std::uint64_t>(x);
    b += (x > 0.0) ? std::uint64_t(-1) : 1u;
    return std::bit_cast<double>(b);
}

namespace detail {

// Endpoint arithmetic: round to nearest, then widen outward by one step
// unless the operation is provably exact.  The addition test is Knuth's
// 2Sum condition: if both round trips hold, the error term of 2Sum is zero,
// hence the rounded sum is the true sum.  Products and quotients are checked
// with an fma residual.
inline double add_lo(double x, double y) noexcept {
    const double r = x + y;
    return (r - x == y && r - y == x) ? r : next_down(r);
}
inline double add_hi(double x, double y) noexcept {
    const double r = x + y;
    return (r - x == y && r - y == x) ? r : next_up(r);
}
inline double sub_lo(double x, double y) noexcept {
    const double r = x - y;
    return (x - r == y && r + y == x) ? r : next_down(r);
}
inline double sub_hi(double x, double y) noexcept {
    const double r = x - y;
    return (x - r == y && r + y == x) ? r : next_up(r);
}
// A product of 53-bit significands has at most 106 significant bits, so a
// nonzero rounding residual of r = fl(x*y) is at least 2^(exp(r) - 105).
// fma resolves residuals down to 2^-1074; certifying exactness through it is
// therefore only sound when |r| >= 2^-969.  Below that, widen.
inline bool mul_is_exact(double x, double y, double r) noexcept {
    if (x == 0.0 || y == 0.0) return true;
    if (std::fabs(r) < 0x1p-969) return false;
    return std::fma(x, y, -r) == 0.0;
}
// A zero operand pins the product of every contained real to exactly zero,
// even against an infinite bound (where x * y would be NaN).
inline double mul_lo(double x, double y) noexcept {
    if (x == 0.0 || y == 0.0) return 0.0;
    const double r = x * y;
    return mul_is_exact(x, y, r) ? r : next_down(r);
}
inline double mul_hi(double x, double y) noexcept {
    if (x == 0.0 || y == 0.0) return 0.0;
    const double r = x * y;
    return mul_is_exact(x, y, r) ? r : next_up(r);
}
// Quotient exactness reduces to product exactness: x/y == r iff r*y == x.
inline bool div_is_exact(double x, double y, double r) noexcept {
    const double p = r * y;
    return p == x && mul_is_exact(r, y, p);
}
inline double div_lo(double x, double y) noexcept {
    const double r = x / y;
    return div_is_exact(x, y, r) ? r : next_down(r);
}
inline double div_hi(double x, double y) noexcept {
    const double r = x / y;
    return div_is_exact(x, y, r) ? r : next_up(r);
}

}  // namespace detail

/// A pair of binary64 bounds guaranteed to contain one exact real value.
/// Bounds may be infinite; they are never NaN.  All arithmetic preserves the
/// inclusion property: the exact result of op applied to any reals contained
/// in the operands is contained in the result.
class Interval {
public:
    Interval() noexcept : inf_(0.0), sup_(0.0) {}

    /// Singleton interval [x, x].  A double input is an exact value.
    explicit Interval(double x) : inf_(x), sup_(x) {
        if (!std::isfinite(x)) throw std::invalid_argument("Interval: non-finite input");
    }

    Interval(double lo, double hi) noexcept : inf_(lo), sup_(hi) {
        assert(!(lo != lo) && !(hi != hi) && lo <= hi);
    }

    double inf() const noexcept { return inf_; }
    double sup() const noexcept { return sup_; }

    bool is_singleton() const noexcept { return inf_ == sup_; }
    bool contains_zero() const noexcept { return inf_ <= 0.0 && sup_ >= 0.0; }
    bool contains(double x) const noexcept { return inf_ <= x && x <= sup_; }

    /// Containment as sets of reals.
    bool subset_of(const Interval& o) const noexcept {
        return o.inf_ <= inf_ && sup_ <= o.sup_;
    }

private:
    double inf_;
    double sup_;
};

inline Interval operator-(const Interval& a) noexcept {
    return Interval(-a.sup(), -a.inf());
}

inline Interval operator+(const Interval& a, const Interval& b) noexcept {
    return Interval(detail::add_lo(a.inf(), b.inf()), detail::add_hi(a.sup(), b.sup()));
}

inline Interval operator-(const Interval& a, const Interval& b) noexcept {
    return Interval(detail::sub_lo(a.inf(), b.sup()), detail::sub_hi(a.sup(), b.inf()));
}

inline Interval operator*(const Interval& a, const Interval& b) noexcept {
    using namespace detail;
    const double al = a.inf(), ah = a.sup(), bl = b.inf(), bh = b.sup();
    if (al >= 0.0) {                                      // a >= 0
        if (bl >= 0.0) return Interval(mul_lo(al, bl), mul_hi(ah, bh));
        if (bh <= 0.0) return Interval(mul_lo(ah, bl), mul_hi(al, bh));
        return Interval(mul_lo(ah, bl), mul_hi(ah, bh));  // b straddles 0
    }
    if (ah <= 0.0) {                                      // a <= 0
        if (bl >= 0.0) return Interval(mul_lo(al, bh), mul_hi(ah, bl));
        if (bh <= 0.0) return Interval(mul_lo(ah, bh), mul_hi(al, bl));
        return Interval(mul_lo(al, bh), mul_hi(al, bl));
    }
    // a straddles 0
    if (bl >= 0.0) return Interval(mul_lo(al, bh), mul_hi(ah, bh));
    if (bh <= 0.0) return Interval(mul_lo(ah, bl), mul_hi(al, bl));
    return Interval(std::fmin(mul_lo(al, bh), mul_lo(ah, bl)),
                    std::fmax(mul_hi(al, bl), mul_hi(ah, bh)));
}

/// Division signals uncertainty whenever the divisor cannot be bounded away
/// from zero; an infinite quotient interval would only poison every
/// comparison downstream, while the signal routes to an exact fallback.
inline Interval operator/(const Interval& a, const Interval& b) {
    using namespace detail;
    if (b.contains_zero()) throw UncertainComparison{};
    const double al = a.inf(), ah = a.sup(), bl = b.inf(), bh = b.sup();
    if (bl > 0.0) {
        if (al >= 0.0) return Interval(div_lo(al, bh), div_hi(ah, bl));
        if (ah <= 0.0) return Interval(div_lo(al, bl), div_hi(ah, bh));
        return Interval(div_lo(al, bl), div_hi(ah, bl));
    }
    // b < 0
    if (al >= 0.0) return Interval(div_lo(ah, bh), div_hi(al, bl));
    if (ah <= 0.0) return Interval(div_lo(ah, bl), div_hi(al, bh));
    return Interval(div_lo(ah, bh), div_hi(al, bh));
}

inline bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.inf() == b.inf() && a.sup() == b.sup();
}

/// Sign of every real in the interval, or Uncertain when the interval does
/// not determine it.  Zero is only certified for the singleton [0, 0].
inline Certainty sign_certainty(const Interval& a) noexcept {
    if (a.inf() > 0.0) return Certainty::Positive;
    if (a.sup() < 0.0) return Certainty::Negative;
    if (a.inf() == 0.0 && a.sup() == 0.0) return Certainty::Zero;
    return Certainty::Uncertain;
}

/// Order of the contained reals.  Touching intervals (a.sup == b.inf) stay
/// Uncertain unless both are the same singleton.
inline Certainty compare_certainty(const Interval& a, const Interval& b) noexcept {
    if (a.sup() < b.inf()) return Certainty::Negative;
    if (a.inf() > b.sup()) return Certainty::Positive;
    if (a.is_singleton() && b.is_singleton() && a.inf() == b.inf()) return Certainty::Zero;
    return Certainty::Uncertain;
}

/// Decided sign as an int, with the uncertainty signal when undecided.
inline int sign(const Interval& a) {
    const Certainty c = sign_certainty(a);
    if (!is_certain(c)) throw UncertainComparison{};
    return static_cast<int>(c);
}

inline int compare(const Interval& a, const Interval& b) {
    const Certainty c = compare_certainty(a, b);
    if (!is_certain(c)) throw UncertainComparison{};
    return static_cast<int>(c);
}

}  // namespace lazygeo
