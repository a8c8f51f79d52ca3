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

#include <algorithm>
#include <cassert>
#include <utility>
#include <variant>

#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"

// A 2D Cartesian kernel generic over the coordinate number type NT.
// Every operation is a pure function of its inputs and branches only through
// sign()/compare(), so each number type keeps its own failure semantics:
// double is fast and unchecked, Interval throws UncertainComparison when a
// decision cannot be certified, BigRational is exact, and LazyNumber (see
// lazy_number.hpp) resolves uncertainty internally.

namespace lazygeo {

inline int sign(double x) noexcept { return x > 0.0 ? 1 : x < 0.0 ? -1 : 0; }
inline int compare(double a, double b) noexcept { return a < b ? -1 : a > b ? 1 : 0; }

enum class Orientation : int {
    Negative = -1,  // right turn
    Zero = 0,       // collinear
    Positive = 1,   // left turn
};

template <typename NT>
struct Point2 {
    NT x;
    NT y;
};

template <typename NT>
struct Segment2 {
    Point2<NT> source;
    Point2<NT> target;
};

/// The line {(x, y) : a*x + b*y + c = 0}, with (a, b) != (0, 0).
template <typename NT>
struct Line2 {
    NT a;
    NT b;
    NT c;
};

struct Bbox2 {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    friend Bbox2 hull(const Bbox2& p, const Bbox2& q) noexcept {
        return {std::min(p.xmin, q.xmin), std::min(p.ymin, q.ymin),
                std::max(p.xmax, q.xmax), std::max(p.ymax, q.ymax)};
    }
    friend bool operator==(const Bbox2& p, const Bbox2& q) noexcept {
        return p.xmin == q.xmin && p.ymin == q.ymin && p.xmax == q.xmax && p.ymax == q.ymax;
    }
};

/// Result of intersecting two segments: empty, a single point, or a
/// (non-degenerate) overlap segment.
template <typename NT>
class Intersection2 {
public:
    enum class Kind { Empty, Point, Segment };

    Intersection2() = default;
    static Intersection2 empty() { return Intersection2(); }
    static Intersection2 point(Point2<NT> p) { return Intersection2(std::move(p)); }
    static Intersection2 segment(Segment2<NT> s) { return Intersection2(std::move(s)); }

    Kind kind() const noexcept { return static_cast<Kind>(v_.index()); }
    bool is_empty() const noexcept { return kind() == Kind::Empty; }

    const Point2<NT>& point() const {
        assert(kind() == Kind::Point);
        return std::get<1>(v_);
    }
    const Segment2<NT>& segment() const {
        assert(kind() == Kind::Segment);
        return std::get<2>(v_);
    }

private:
    explicit Intersection2(Point2<NT> p) : v_(std::move(p)) {}
    explicit Intersection2(Segment2<NT> s) : v_(std::move(s)) {}

    std::variant<std::monostate, Point2<NT>, Segment2<NT>> v_;
};

// ---------------------------------------------------------------------------
// Predicates

/// Sign of det(q - p, r - p): the turn direction of the path p -> q -> r.
template <typename NT>
Orientation orientation(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r) {
    const NT det = (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
    return static_cast<Orientation>(sign(det));
}

template <typename NT>
int compare_x(const Point2<NT>& p, const Point2<NT>& q) {
    return compare(p.x, q.x);
}

template <typename NT>
int compare_y(const Point2<NT>& p, const Point2<NT>& q) {
    return compare(p.y, q.y);
}

/// +1 when t lies inside the circle through p, q, r taken in counterclockwise
/// order, 0 on the circle, -1 outside; signs flip for clockwise p, q, r.
template <typename NT>
int side_of_oriented_circle(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r,
                            const Point2<NT>& t) {
    const NT px = p.x - t.x, py = p.y - t.y;
    const NT qx = q.x - t.x, qy = q.y - t.y;
    const NT rx = r.x - t.x, ry = r.y - t.y;
    const NT pl = px * px + py * py;
    const NT ql = qx * qx + qy * qy;
    const NT rl = rx * rx + ry * ry;
    const NT det = px * (qy * rl - ql * ry) - py * (qx * rl - ql * rx) + pl * (qx * ry - qy * rx);
    return sign(det);
}

// ---------------------------------------------------------------------------
// Constructions

template <typename NT>
Point2<NT> midpoint(const Point2<NT>& p, const Point2<NT>& q) {
    const NT two(2);
    return {(p.x + q.x) / two, (p.y + q.y) / two};
}

/// The point equidistant from p, q, r (the perpendicular bisector crossing).
/// Requires p, q, r non-collinear; under Interval an undecided denominator
/// raises the uncertainty signal, under an exact type collinear input is a
/// division by zero.
template <typename NT>
Point2<NT> circumcenter(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r) {
    const NT qx = q.x - p.x, qy = q.y - p.y;
    const NT rx = r.x - p.x, ry = r.y - p.y;
    const NT ql = qx * qx + qy * qy;
    const NT rl = rx * rx + ry * ry;
    const NT den = (qx * ry - rx * qy) * NT(2);
    return {p.x + (ry * ql - qy * rl) / den, p.y + (qx * rl - rx * ql) / den};
}

/// Vertical projection of p onto the non-vertical line a*x + b*y + c = 0.
template <typename NT>
Point2<NT> vertical_projection(const Point2<NT>& p, const Line2<NT>& l) {
    return {p.x, -(l.a * p.x + l.c) / l.b};
}

namespace detail {

// Whether pt, already known collinear with seg's endpoints, lies between
// them.  Decided purely by coordinate comparisons.
template <typename NT>
bool collinear_point_on_segment(const Point2<NT>& pt, const Segment2<NT>& seg) {
    const int cx = compare_x(seg.source, seg.target);
    if (cx != 0) {
        const int c1 = compare_x(seg.source, pt);
        const int c2 = compare_x(pt, seg.target);
        return cx < 0 ? (c1 <= 0 && c2 <= 0) : (c1 >= 0 && c2 >= 0);
    }
    const int cy = compare_y(seg.source, seg.target);
    if (cy != 0) {
        const int c1 = compare_y(seg.source, pt);
        const int c2 = compare_y(pt, seg.target);
        return cy < 0 ? (c1 <= 0 && c2 <= 0) : (c1 >= 0 && c2 >= 0);
    }
    // Degenerate segment: pt is on it iff it coincides with the endpoint.
    return compare_x(pt, seg.source) == 0 && compare_y(pt, seg.source) == 0;
}

template <typename NT>
bool points_equal(const Point2<NT>& p, const Point2<NT>& q) {
    return compare(p.x, q.x) == 0 && compare(p.y, q.y) == 0;
}

// Crossing point of the segments' support lines, valid when the crossing is
// proper (denominator certified nonzero by the orientation tests).
template <typename NT>
Point2<NT> crossing_point(const Segment2<NT>& s1, const Segment2<NT>& s2) {
    const NT dx1 = s1.target.x - s1.source.x;
    const NT dy1 = s1.target.y - s1.source.y;
    const NT dx2 = s2.target.x - s2.source.x;
    const NT dy2 = s2.target.y - s2.source.y;
    const NT den = dx1 * dy2 - dy1 * dx2;
    const NT num = (s2.source.x - s1.source.x) * dy2 - (s2.source.y - s1.source.y) * dx2;
    const NT t = num / den;
    return {s1.source.x + t * dx1, s1.source.y + t * dy1};
}

// Collinear overlap along the dominant axis of the common support line.
// key() picks the coordinate used for 1D ordering.
template <typename NT, typename Key>
Intersection2<NT> collinear_overlap(const Segment2<NT>& s1, const Segment2<NT>& s2, Key key) {
    Point2<NT> a = s1.source, b = s1.target;
    Point2<NT> c = s2.source, d = s2.target;
    if (compare(key(a), key(b)) > 0) std::swap(a, b);
    if (compare(key(c), key(d)) > 0) std::swap(c, d);
    const Point2<NT>& lo = compare(key(a), key(c)) >= 0 ? a : c;
    const Point2<NT>& hi = compare(key(b), key(d)) <= 0 ? b : d;
    const int c_lo_hi = compare(key(lo), key(hi));
    if (c_lo_hi > 0) return Intersection2<NT>::empty();
    if (c_lo_hi == 0) return Intersection2<NT>::point(lo);
    return Intersection2<NT>::segment({lo, hi});
}

}  // namespace detail

/// Exact case analysis of segment intersection, branching only on
/// orientations and coordinate comparisons.  Touching contacts return the
/// touching endpoint (the value the parametric solution takes there); proper
/// crossings return the parametric crossing point; collinear overlaps of
/// positive length return a segment.
template <typename NT>
Intersection2<NT> intersect_segments(const Segment2<NT>& s1, const Segment2<NT>& s2) {
    using detail::collinear_point_on_segment;
    using detail::points_equal;

    const bool s1_degenerate = points_equal(s1.source, s1.target);
    const bool s2_degenerate = points_equal(s2.source, s2.target);
    if (s1_degenerate && s2_degenerate) {
        return points_equal(s1.source, s2.source) ? Intersection2<NT>::point(s1.source)
                                                  : Intersection2<NT>::empty();
    }
    if (s1_degenerate) {
        return orientation(s2.source, s2.target, s1.source) == Orientation::Zero &&
                       collinear_point_on_segment(s1.source, s2)
                   ? Intersection2<NT>::point(s1.source)
                   : Intersection2<NT>::empty();
    }
    if (s2_degenerate) {
        return orientation(s1.source, s1.target, s2.source) == Orientation::Zero &&
                       collinear_point_on_segment(s2.source, s1)
                   ? Intersection2<NT>::point(s2.source)
                   : Intersection2<NT>::empty();
    }

    const int o1 = static_cast<int>(orientation(s1.source, s1.target, s2.source));
    const int o2 = static_cast<int>(orientation(s1.source, s1.target, s2.target));

    if (o1 == 0 && o2 == 0) {
        // Common support line; reduce to 1D overlap along its dominant axis.
        if (compare_x(s1.source, s1.target) != 0) {
            return detail::collinear_overlap(s1, s2, [](const Point2<NT>& p) { return p.x; });
        }
        return detail::collinear_overlap(s1, s2, [](const Point2<NT>& p) { return p.y; });
    }
    if (o1 == 0) {
        return collinear_point_on_segment(s2.source, s1) ? Intersection2<NT>::point(s2.source)
                                                         : Intersection2<NT>::empty();
    }
    if (o2 == 0) {
        return collinear_point_on_segment(s2.target, s1) ? Intersection2<NT>::point(s2.target)
                                                         : Intersection2<NT>::empty();
    }
    if (o1 == o2) return Intersection2<NT>::empty();

    const int o3 = static_cast<int>(orientation(s2.source, s2.target, s1.source));
    const int o4 = static_cast<int>(orientation(s2.source, s2.target, s1.target));
    if (o3 == 0) {
        return collinear_point_on_segment(s1.source, s2) ? Intersection2<NT>::point(s1.source)
                                                         : Intersection2<NT>::empty();
    }
    if (o4 == 0) {
        return collinear_point_on_segment(s1.target, s2) ? Intersection2<NT>::point(s1.target)
                                                         : Intersection2<NT>::empty();
    }
    if (o3 == o4) return Intersection2<NT>::empty();

    return Intersection2<NT>::point(detail::crossing_point(s1, s2));
}

// ---------------------------------------------------------------------------
// Bounding boxes

inline Interval to_interval(double x) { return Interval(x); }
inline Interval to_interval(const Interval& x) noexcept { return x; }

/// Double box guaranteed to contain the exact object, however NT represents
/// its coordinates.
template <typename NT>
Bbox2 bbox(const Point2<NT>& p) {
    const Interval x = to_interval(p.x);
    const Interval y = to_interval(p.y);
    return {x.inf(), y.inf(), x.sup(), y.sup()};
}

template <typename NT>
Bbox2 bbox(const Segment2<NT>& s) {
    return hull(bbox(s.source), bbox(s.target));
}

// ---------------------------------------------------------------------------
// Functor forms, for composing kernels out of adaptors.

struct OrientationOp {
    template <typename NT>
    Orientation operator()(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r) const {
        return orientation(p, q, r);
    }
};

struct CompareXOp {
    template <typename NT>
    int operator()(const Point2<NT>& p, const Point2<NT>& q) const {
        return compare_x(p, q);
    }
};

struct CompareYOp {
    template <typename NT>
    int operator()(const Point2<NT>& p, const Point2<NT>& q) const {
        return compare_y(p, q);
    }
};

struct SideOfOrientedCircleOp {
    template <typename NT>
    int operator()(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r,
                   const Point2<NT>& t) const {
        return side_of_oriented_circle(p, q, r, t);
    }
};

struct MidpointOp {
    template <typename NT>
    Point2<NT> operator()(const Point2<NT>& p, const Point2<NT>& q) const {
        return midpoint(p, q);
    }
};

struct CircumcenterOp {
    template <typename NT>
    Point2<NT> operator()(const Point2<NT>& p, const Point2<NT>& q, const Point2<NT>& r) const {
        return circumcenter(p, q, r);
    }
};

struct MakeSegmentOp {
    template <typename NT>
    Segment2<NT> operator()(const Point2<NT>& p, const Point2<NT>& q) const {
        return {p, q};
    }
};

struct VerticalProjectionOp {
    template <typename NT>
    Point2<NT> operator()(const Point2<NT>& p, const Line2<NT>& l) const {
        return vertical_projection(p, l);
    }
};

struct IntersectSegmentsOp {
    template <typename NT>
    Intersection2<NT> operator()(const Segment2<NT>& s1, const Segment2<NT>& s2) const {
        return intersect_segments(s1, s2);
    }
};

struct BboxOp {
    template <typename Obj>
    Bbox2 operator()(const Obj& o) const {
        return bbox(o);
    }
};

/// The kernel bundle: object types plus the primitive functors, all over one
/// coordinate type.
template <typename NT>
struct CartesianKernel {
    using FT = NT;
    using Point = Point2<NT>;
    using Segment = Segment2<NT>;
    using Line = Line2<NT>;
    using Intersection = Intersection2<NT>;

    using Orientation2 = OrientationOp;
    using CompareX2 = CompareXOp;
    using CompareY2 = CompareYOp;
    using SideOfOrientedCircle2 = SideOfOrientedCircleOp;
    using ConstructMidpoint2 = MidpointOp;
    using ConstructCircumcenter2 = CircumcenterOp;
    using ConstructSegment2 = MakeSegmentOp;
    using ConstructProjection2 = VerticalProjectionOp;
    using Intersect2 = IntersectSegmentsOp;
    using ConstructBbox2 = BboxOp;
};

}  // namespace lazygeo
