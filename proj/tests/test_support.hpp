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

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lazygeo/bench.hpp"
#include "lazygeo/cartesian.hpp"
#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"

// Shared generators and independent oracles.  Oracles deliberately use
// different formulas/groupings than the library so they exercise a second
// route to the same mathematical value.

namespace lazygeo::testsupport {

using RatPoint = Point2<BigRational>;
using RatSegment = Segment2<BigRational>;

inline RatPoint to_rat(const Point2<double>& p) {
    return {BigRational(p.x), BigRational(p.y)};
}
inline RatSegment to_rat(const Segment2<double>& s) {
    return {to_rat(s.source), to_rat(s.target)};
}

/// Finite random double drawn from mixed regimes: uniform [0,1), small
/// integers, large/small binary exponents down to subnormals.
inline double random_double(Rand48& rng) {
    const double u = rng.next();
    const int regime = int(rng.next() * 6.0);
    switch (regime) {
        case 0: return u;
        case 1: return -u;
        case 2: return std::floor(u * 64.0) - 32.0;
        case 3: return std::ldexp(2.0 * u - 1.0, int(rng.next() * 120.0) - 60);
        case 4: return std::ldexp(2.0 * u - 1.0, 500 + int(rng.next() * 499.0));
        default: {
            // Near or inside the subnormal range.
            const double tiny = std::ldexp(2.0 * u - 1.0, -(1000 + int(rng.next() * 80.0)));
            return tiny;
        }
    }
}

/// True containment of an exact rational in an interval, honoring infinite
/// bounds.
inline bool interval_contains(const Interval& iv, const BigRational& q) {
    const bool lo_ok = iv.inf() == -std::numeric_limits<double>::infinity() ||
                       !(q < BigRational(iv.inf()));
    const bool hi_ok = iv.sup() == std::numeric_limits<double>::infinity() ||
                       !(BigRational(iv.sup()) < q);
    return lo_ok && hi_ok;
}

/// Orientation determinant via the 3x3 first-column expansion (different
/// grouping than the kernel's 2x2 form).
inline BigRational orientation_oracle(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    return (q.x * r.y - q.y * r.x) - (p.x * r.y - p.y * r.x) + (p.x * q.y - p.y * q.x);
}

/// In-circle sign via the lifted determinant with rows (q-p, r-p, t-p);
/// that form is negative for t inside the CCW circle, so negate.
inline int side_of_circle_oracle(const RatPoint& p, const RatPoint& q, const RatPoint& r,
                                 const RatPoint& t) {
    const BigRational ax = q.x - p.x, ay = q.y - p.y;
    const BigRational bx = r.x - p.x, by = r.y - p.y;
    const BigRational cx = t.x - p.x, cy = t.y - p.y;
    const BigRational al = ax * ax + ay * ay;
    const BigRational bl = bx * bx + by * by;
    const BigRational cl = cx * cx + cy * cy;
    const BigRational det =
        ax * (by * cl - bl * cy) - ay * (bx * cl - bl * cx) + al * (bx * cy - by * cx);
    return -det.sign();
}

/// Circumcenter by solving the perpendicular-bisector linear system with
/// Cramer's rule (the kernel uses a direct closed form instead).
inline RatPoint circumcenter_oracle(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    const BigRational two(2);
    const BigRational a11 = two * (q.x - p.x), a12 = two * (q.y - p.y);
    const BigRational a21 = two * (r.x - p.x), a22 = two * (r.y - p.y);
    const BigRational b1 = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y;
    const BigRational b2 = r.x * r.x + r.y * r.y - p.x * p.x - p.y * p.y;
    const BigRational det = a11 * a22 - a12 * a21;
    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

inline BigRational squared_distance(const RatPoint& a, const RatPoint& b) {
    const BigRational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Whether an exact point lies on an exact segment (membership test used to
/// validate intersection results).
inline bool on_segment_oracle(const RatPoint& pt, const RatSegment& s) {
    if (orientation_oracle(s.source, s.target, pt).sign() != 0) return false;
    const auto in_range = [](const BigRational& v, const BigRational& a, const BigRational& b) {
        return (a < b) ? !(v < a) && !(b < v) : !(v < b) && !(a < v);
    };
    return in_range(pt.x, s.source.x, s.target.x) && in_range(pt.y, s.source.y, s.target.y);
}

inline Point2<double> random_unit_point(Rand48& rng) {
    return {rng.next(), rng.next()};
}

}  // namespace lazygeo::testsupport
