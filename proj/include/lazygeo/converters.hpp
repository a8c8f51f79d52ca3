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

#include <type_traits>
#include <utility>

#include "lazygeo/cartesian.hpp"
#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"

// Kernel converters: structure-preserving maps between Cartesian kernels,
// parameterized by a number-type conversion applied coordinate-wise.  The
// object kind never changes; the result type follows from the conversion.

namespace lazygeo {

struct DoubleToInterval {
    Interval operator()(double x) const { return Interval(x); }
};

struct DoubleToRational {
    BigRational operator()(double x) const { return BigRational(x); }
};

struct RationalToInterval {
    Interval operator()(const BigRational& q) const { return q.to_interval(); }
};

template <typename NumConv>
struct CartesianConverter {
    [[no_unique_address]] NumConv cv;

    template <typename NT>
    auto operator()(const Point2<NT>& p) const {
        using R = std::decay_t<decltype(cv(p.x))>;
        return Point2<R>{cv(p.x), cv(p.y)};
    }

    template <typename NT>
    auto operator()(const Segment2<NT>& s) const {
        using R = std::decay_t<decltype(cv(s.source.x))>;
        return Segment2<R>{(*this)(s.source), (*this)(s.target)};
    }

    template <typename NT>
    auto operator()(const Line2<NT>& l) const {
        using R = std::decay_t<decltype(cv(l.a))>;
        return Line2<R>{cv(l.a), cv(l.b), cv(l.c)};
    }

    template <typename NT>
    auto operator()(const Intersection2<NT>& i) const {
        using R = std::decay_t<decltype(cv(std::declval<const NT&>()))>;
        switch (i.kind()) {
            case Intersection2<NT>::Kind::Point:
                return Intersection2<R>::point((*this)(i.point()));
            case Intersection2<NT>::Kind::Segment:
                return Intersection2<R>::segment((*this)(i.segment()));
            default:
                return Intersection2<R>::empty();
        }
    }
};

/// Exact -> approximate refresh of whole objects, used when a DAG node
/// replaces a replayed approximation with one derived from the exact value.
inline Point2<Interval> exact_to_approx(const Point2<BigRational>& p) {
    return CartesianConverter<RationalToInterval>{}(p);
}
inline Segment2<Interval> exact_to_approx(const Segment2<BigRational>& s) {
    return CartesianConverter<RationalToInterval>{}(s);
}
inline Line2<Interval> exact_to_approx(const Line2<BigRational>& l) {
    return CartesianConverter<RationalToInterval>{}(l);
}

}  // namespace lazygeo
