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

#include <cassert>
#include <memory>
#include <utility>
#include <variant>

#include "lazygeo/cartesian.hpp"
#include "lazygeo/converters.hpp"
#include "lazygeo/dag.hpp"
#include "lazygeo/filtered_predicate.hpp"
#include "lazygeo/lazy_number.hpp"
#include "lazygeo/stats.hpp"

// Lazy geometric objects: each handle points at a DAG node holding an
// interval-coordinate approximation, an optionally cached exact-rational
// object, and the recipe to rebuild the exact object from the node's
// arguments.  Predicates run filtered (interval first, exact on demand);
// constructions run on approximations and only fall back to an eager exact
// leaf when interval arithmetic cannot complete them.

namespace lazygeo {

using ApproxKernel = CartesianKernel<Interval>;
using ExactKernel = CartesianKernel<BigRational>;

using LazyPoint = Lazy<Point2<Interval>, Point2<BigRational>>;
using LazySegment = Lazy<Segment2<Interval>, Segment2<BigRational>>;
using LazyLine = Lazy<Line2<Interval>, Line2<BigRational>>;

template <>
struct DefaultExact<Point2<BigRational>> {
    static Point2<BigRational> value() { return {BigRational(), BigRational()}; }
};
template <>
struct DefaultExact<Segment2<BigRational>> {
    static Segment2<BigRational> value() {
        return {DefaultExact<Point2<BigRational>>::value(),
                DefaultExact<Point2<BigRational>>::value()};
    }
};
template <>
struct DefaultExact<Line2<BigRational>> {
    static Line2<BigRational> value() { return {BigRational(), BigRational(1), BigRational()}; }
};

/// C2A: fetches the stored approximation.  Never computes anything.
struct ApproxConverter {
    template <typename AT, typename ET>
    AT operator()(const Lazy<AT, ET>& h) const noexcept {
        return h.approx();
    }
};

/// C2E: fetches the exact object, computing and caching it if needed.
struct ExactConverter {
    template <typename AT, typename ET>
    const ET& operator()(const Lazy<AT, ET>& h) const {
        return h.exact();
    }
};

/// Maps an (approximate, exact) object-type pair to its lazy handle type.
template <typename AT, typename ET>
struct LazyHandleFor {
    using type = Lazy<AT, ET>;
};
template <>
struct LazyHandleFor<Interval, BigRational> {
    using type = LazyNumber;
};

/// Construction adaptor.  Builds a DAG node whose approximation comes from
/// running AC over the arguments' approximations; if AC raises the
/// uncertainty signal instead, performs EC over the exact arguments right
/// away and returns a leaf.
template <typename AC, typename EC>
class LazyConstruct {
public:
    template <typename... Hs>
    auto operator()(const Hs&... args) const {
        using AT = std::decay_t<decltype(ac_(args.approx()...))>;
        using ET = std::decay_t<decltype(ec_(args.exact()...))>;
        using Handle = typename LazyHandleFor<AT, ET>::type;
        try {
            AT at = ac_(args.approx()...);
            using NodeT = ConstructionNode<EC, AT, ET, Hs...>;
            return Handle(std::make_shared<NodeT>(std::move(at), ec_, args...));
        } catch (const UncertainComparison&) {
            stats::count_fallback();
            ET et = ec_(args.exact()...);
            AT at = exact_to_approx(et);
            return Handle(std::make_shared<LeafNode<AT, ET>>(std::move(at), std::move(et)));
        }
    }

private:
    [[no_unique_address]] AC ac_;
    [[no_unique_address]] EC ec_;
};

// ---------------------------------------------------------------------------
// Leaves

inline LazyPoint make_lazy_point(double x, double y) {
    return LazyPoint(std::make_shared<LeafNode<Point2<Interval>, Point2<BigRational>>>(
        Point2<Interval>{Interval(x), Interval(y)},
        Point2<BigRational>{BigRational(x), BigRational(y)}));
}

inline LazyPoint make_lazy_point(Point2<BigRational> p) {
    return LazyPoint(std::make_shared<LeafNode<Point2<Interval>, Point2<BigRational>>>(
        exact_to_approx(p), std::move(p)));
}

inline LazySegment make_lazy_segment(double x1, double y1, double x2, double y2) {
    return LazySegment(std::make_shared<LeafNode<Segment2<Interval>, Segment2<BigRational>>>(
        Segment2<Interval>{{Interval(x1), Interval(y1)}, {Interval(x2), Interval(y2)}},
        Segment2<BigRational>{{BigRational(x1), BigRational(y1)},
                              {BigRational(x2), BigRational(y2)}}));
}

inline LazySegment make_lazy_segment(Segment2<BigRational> s) {
    return LazySegment(std::make_shared<LeafNode<Segment2<Interval>, Segment2<BigRational>>>(
        exact_to_approx(s), std::move(s)));
}

inline LazyLine make_lazy_line(double a, double b, double c) {
    assert(a != 0.0 || b != 0.0);
    return LazyLine(std::make_shared<LeafNode<Line2<Interval>, Line2<BigRational>>>(
        Line2<Interval>{Interval(a), Interval(b), Interval(c)},
        Line2<BigRational>{BigRational(a), BigRational(b), BigRational(c)}));
}

// ---------------------------------------------------------------------------
// Intersection: a polymorphic result must hold lazy objects, not be lazy
// itself, so the variant arm is decided now (by the approximate run when it
// is certain, by the exact run otherwise) and each arm wraps a lazy object
// of the matching kind.

class LazyIntersection {
public:
    enum class Kind { Empty, Point, Segment };

    LazyIntersection() = default;
    static LazyIntersection empty() { return LazyIntersection(); }
    static LazyIntersection point(LazyPoint p) { return LazyIntersection(std::move(p)); }
    static LazyIntersection segment(LazySegment s) { return LazyIntersection(std::move(s)); }

    Kind kind() const noexcept { return static_cast<Kind>(v_.index()); }
    bool is_empty() const noexcept { return kind() == Kind::Empty; }

    const LazyPoint& point() const {
        assert(kind() == Kind::Point);
        return std::get<1>(v_);
    }
    const LazySegment& segment() const {
        assert(kind() == Kind::Segment);
        return std::get<2>(v_);
    }

private:
    explicit LazyIntersection(LazyPoint p) : v_(std::move(p)) {}
    explicit LazyIntersection(LazySegment s) : v_(std::move(s)) {}

    std::variant<std::monostate, LazyPoint, LazySegment> v_;
};

namespace detail {

// Exact replays for intersection nodes.  The stored arm matches the exact
// arm by construction: a decided approximate analysis is certified.
struct ExactIntersectionPoint {
    Point2<BigRational> operator()(const Segment2<BigRational>& a,
                                   const Segment2<BigRational>& b) const {
        Intersection2<BigRational> r = intersect_segments(a, b);
        assert(r.kind() == Intersection2<BigRational>::Kind::Point);
        return r.point();
    }
};

struct ExactIntersectionSegment {
    Segment2<BigRational> operator()(const Segment2<BigRational>& a,
                                     const Segment2<BigRational>& b) const {
        Intersection2<BigRational> r = intersect_segments(a, b);
        assert(r.kind() == Intersection2<BigRational>::Kind::Segment);
        return r.segment();
    }
};

}  // namespace detail

class LazyIntersectOp {
public:
    LazyIntersection operator()(const LazySegment& s1, const LazySegment& s2) const {
        using PointNode =
            ConstructionNode<detail::ExactIntersectionPoint, Point2<Interval>,
                             Point2<BigRational>, LazySegment, LazySegment>;
        using SegmentNode =
            ConstructionNode<detail::ExactIntersectionSegment, Segment2<Interval>,
                             Segment2<BigRational>, LazySegment, LazySegment>;
        try {
            Intersection2<Interval> r = intersect_segments(s1.approx(), s2.approx());
            switch (r.kind()) {
                case Intersection2<Interval>::Kind::Point:
                    return LazyIntersection::point(LazyPoint(
                        std::make_shared<PointNode>(r.point(), detail::ExactIntersectionPoint{},
                                                    s1, s2)));
                case Intersection2<Interval>::Kind::Segment:
                    return LazyIntersection::segment(LazySegment(std::make_shared<SegmentNode>(
                        r.segment(), detail::ExactIntersectionSegment{}, s1, s2)));
                default:
                    return LazyIntersection::empty();
            }
        } catch (const UncertainComparison&) {
            stats::count_fallback();
            Intersection2<BigRational> r = intersect_segments(s1.exact(), s2.exact());
            switch (r.kind()) {
                case Intersection2<BigRational>::Kind::Point:
                    return LazyIntersection::point(make_lazy_point(r.point()));
                case Intersection2<BigRational>::Kind::Segment:
                    return LazyIntersection::segment(make_lazy_segment(r.segment()));
                default:
                    return LazyIntersection::empty();
            }
        }
    }
};

/// Bounding boxes come straight off the interval approximation; the exact
/// object is never needed.
struct LazyBboxOp {
    template <typename AT, typename ET>
    Bbox2 operator()(const Lazy<AT, ET>& h) const {
        return bbox(h.approx());
    }
};

// ---------------------------------------------------------------------------
// Debug hook: widen stored approximations (containment-preserving), to mimic
// constructions whose replayed approximations have accumulated error.

inline Interval widened(const Interval& iv, double pad) noexcept {
    return Interval(next_down(iv.inf() - pad), next_up(iv.sup() + pad));
}
inline Point2<Interval> widened(const Point2<Interval>& p, double pad) noexcept {
    return {widened(p.x, pad), widened(p.y, pad)};
}
inline Segment2<Interval> widened(const Segment2<Interval>& s, double pad) noexcept {
    return {widened(s.source, pad), widened(s.target, pad)};
}
inline Line2<Interval> widened(const Line2<Interval>& l, double pad) noexcept {
    return {widened(l.a, pad), widened(l.b, pad), widened(l.c, pad)};
}

template <typename AT, typename ET>
void debug_widen_approx(const Lazy<AT, ET>& h, double pad) {
    h.node().debug_set_approx(widened(h.approx(), pad));
}

// ---------------------------------------------------------------------------
// The assembled lazy kernel: filtered predicates over the interval and
// rational kernels, plus lazy constructions, sharing the fetch converters.

struct LazyKernel {
    using FT = LazyNumber;
    using Point = LazyPoint;
    using Segment = LazySegment;
    using Line = LazyLine;
    using Intersection = LazyIntersection;
    using AK = ApproxKernel;
    using EK = ExactKernel;
    using C2A = ApproxConverter;
    using C2E = ExactConverter;

    template <typename Op>
    using Filtered = FilteredPredicate<Op, Op, ExactConverter, ApproxConverter>;

    // Predicates
    Filtered<OrientationOp> orientation{};
    Filtered<CompareXOp> compare_x{};
    Filtered<CompareYOp> compare_y{};
    Filtered<SideOfOrientedCircleOp> side_of_oriented_circle{};

    // Constructions
    LazyConstruct<MidpointOp, MidpointOp> midpoint{};
    LazyConstruct<CircumcenterOp, CircumcenterOp> circumcenter{};
    LazyConstruct<MakeSegmentOp, MakeSegmentOp> segment{};
    LazyConstruct<VerticalProjectionOp, VerticalProjectionOp> vertical_projection{};
    LazyIntersectOp intersect{};
    LazyBboxOp bbox{};

    std::uint64_t predicate_fallbacks() const noexcept {
        return orientation.exact_fallbacks() + compare_x.exact_fallbacks() +
               compare_y.exact_fallbacks() + side_of_oriented_circle.exact_fallbacks();
    }
};

inline LazyKernel make_lazy_kernel() { return {}; }

}  // namespace lazygeo
