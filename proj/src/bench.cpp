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

#include "lazygeo/bench.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "lazygeo/cartesian.hpp"
#include "lazygeo/lazy_kernel.hpp"
#include "lazygeo/lazy_number.hpp"
#include "lazygeo/rational.hpp"
#include "lazygeo/stats.hpp"

namespace lazygeo {

const char* kernel_name(KernelChoice k) noexcept {
    switch (k) {
        case KernelChoice::Double: return "double";
        case KernelChoice::Exact: return "exact";
        case KernelChoice::LazyNumber: return "lazy-number";
        case KernelChoice::LazyKernel: return "lazy-kernel";
    }
    return "?";
}

std::optional<KernelChoice> kernel_from_name(std::string_view name) noexcept {
    if (name == "double") return KernelChoice::Double;
    if (name == "exact") return KernelChoice::Exact;
    if (name == "lazy-number") return KernelChoice::LazyNumber;
    if (name == "lazy-kernel") return KernelChoice::LazyKernel;
    return std::nullopt;
}

namespace {

// Seeded Fisher-Yates, drawing from the same stream that generated the
// segments so a whole run is a function of one seed.
template <typename T>
void shuffle_points(std::vector<T>& v, Rand48& rng) {
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.next() * double(i + 1));
        std::swap(v[i], v[j]);
    }
}

void require_enough_points(std::size_t n) {
    if (n < 3) {
        throw std::runtime_error(
            "benchmark needs at least 3 intersection points to run orientation tests; got " +
            std::to_string(n) + " (increase --segments or change --seed)");
    }
}

struct Tallies {
    long long neg = 0, pos = 0, zero = 0;

    void add(Orientation o) noexcept {
        if (o == Orientation::Negative) ++neg;
        else if (o == Orientation::Positive) ++pos;
        else ++zero;
    }
};

template <typename NT>
BenchReport run_plain(const BenchConfig& cfg) {
    Rand48 rng(cfg.seed);

    std::vector<Segment2<NT>> segments;
    segments.reserve(std::size_t(cfg.segments));
    for (int i = 0; i < cfg.segments; ++i) {
        const double x1 = rng.next(), y1 = rng.next();
        const double x2 = rng.next(), y2 = rng.next();
        segments.push_back({{NT(x1), NT(y1)}, {NT(x2), NT(y2)}});
    }

    std::vector<Point2<NT>> points;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            Intersection2<NT> r = intersect_segments(segments[i], segments[j]);
            if (r.kind() == Intersection2<NT>::Kind::Point) points.push_back(r.point());
        }
    }
    require_enough_points(points.size());

    if (cfg.shuffle) shuffle_points(points, rng);

    Tallies t;
    for (std::size_t i = 0; i + 2 < points.size(); ++i) {
        t.add(orientation(points[i], points[i + 1], points[i + 2]));
    }

    BenchReport rep;
    rep.intersections = (long long)points.size();
    rep.orient_neg = t.neg;
    rep.orient_pos = t.pos;
    rep.orient_zero = t.zero;
    return rep;
}

BenchReport run_lazy_kernel(const BenchConfig& cfg) {
    const LazyKernel k = make_lazy_kernel();
    Rand48 rng(cfg.seed);

    std::vector<LazySegment> segments;
    segments.reserve(std::size_t(cfg.segments));
    for (int i = 0; i < cfg.segments; ++i) {
        const double x1 = rng.next(), y1 = rng.next();
        const double x2 = rng.next(), y2 = rng.next();
        segments.push_back(make_lazy_segment(x1, y1, x2, y2));
    }

    std::vector<LazyPoint> points;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            LazyIntersection r = k.intersect(segments[i], segments[j]);
            if (r.kind() == LazyIntersection::Kind::Point) points.push_back(r.point());
        }
    }
    require_enough_points(points.size());

    if (cfg.shuffle) shuffle_points(points, rng);

    Tallies t;
    for (std::size_t i = 0; i + 2 < points.size(); ++i) {
        t.add(k.orientation(points[i], points[i + 1], points[i + 2]));
    }

    BenchReport rep;
    rep.intersections = (long long)points.size();
    rep.orient_neg = t.neg;
    rep.orient_pos = t.pos;
    rep.orient_zero = t.zero;
    return rep;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& cfg) {
    if (cfg.segments < 3) throw std::invalid_argument("benchmark needs at least 3 segments");

    const std::uint64_t fallbacks_before = stats::exact_fallbacks();
    const auto t0 = std::chrono::steady_clock::now();

    BenchReport rep;
    switch (cfg.kernel) {
        case KernelChoice::Double: rep = run_plain<double>(cfg); break;
        case KernelChoice::Exact: rep = run_plain<BigRational>(cfg); break;
        case KernelChoice::LazyNumber: rep = run_plain<LazyNumber>(cfg); break;
        case KernelChoice::LazyKernel: rep = run_lazy_kernel(cfg); break;
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.exact_fallbacks = stats::exact_fallbacks() - fallbacks_before;
    assert(rep.orient_neg + rep.orient_pos + rep.orient_zero == rep.intersections - 2);
    return rep;
}

}  // namespace lazygeo
