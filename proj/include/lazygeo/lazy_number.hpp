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

#include <memory>
#include <utility>

#include "lazygeo/dag.hpp"
#include "lazygeo/interval.hpp"
#include "lazygeo/rational.hpp"
#include "lazygeo/stats.hpp"

// The lazy exact number type: arithmetic forwards to interval arithmetic and
// records the operation history in the DAG; the exact rational is computed
// and cached only when an interval comparison cannot be decided.

namespace lazygeo {

inline Interval exact_to_approx(const BigRational& q) { return q.to_interval(); }

template <>
struct DefaultExact<BigRational> {
    static BigRational value() { return BigRational(); }
};

namespace numops {

// Arithmetic functors shared by both evaluations of a node: applied to
// Interval approximations when the node is built and replayed over
// BigRational values by compute_exact.
struct Add {
    template <typename T>
    T operator()(const T& a, const T& b) const {
        return a + b;
    }
};
struct Sub {
    template <typename T>
    T operator()(const T& a, const T& b) const {
        return a - b;
    }
};
struct Mul {
    template <typename T>
    T operator()(const T& a, const T& b) const {
        return a * b;
    }
};
struct Div {
    template <typename T>
    T operator()(const T& a, const T& b) const {
        return a / b;
    }
};
struct Neg {
    template <typename T>
    T operator()(const T& a) const {
        return -a;
    }
};

}  // namespace numops

/// Leaf created from a double: the interval is the exact singleton and the
/// rational form is derived straight from the stored double on first demand,
/// with no DAG traversal and no up-front exact allocation.
class DoubleLeafNode final : public LazyNode<Interval, BigRational> {
public:
    explicit DoubleLeafNode(double x) : LazyNode(Interval(x)), value_(x) {}

    void pending_children(std::vector<DagNode*>&) const override {}
    void compute_exact() override { this->cache_exact(BigRational(value_)); }
    void steal_children(std::vector<std::shared_ptr<DagNode>>&) noexcept override {}

private:
    double value_;
};

class LazyNumber : public Lazy<Interval, BigRational> {
public:
    using Base = Lazy<Interval, BigRational>;

    /// Handle to the shared zero node.
    LazyNumber() = default;

    LazyNumber(double x) : Base(std::make_shared<DoubleLeafNode>(x)) {}
    LazyNumber(int x) : LazyNumber(double(x)) {}

    explicit LazyNumber(BigRational q)
        : Base(std::make_shared<LeafNode<Interval, BigRational>>(q.to_interval(), std::move(q))) {
    }

    explicit LazyNumber(std::shared_ptr<Node> n) noexcept : Base(std::move(n)) {}
};

namespace detail {

template <typename Op>
LazyNumber lazy_binary(Op op, const LazyNumber& a, const LazyNumber& b) {
    using NodeT = ConstructionNode<Op, Interval, BigRational, LazyNumber, LazyNumber>;
    Interval at = op(a.approx(), b.approx());
    return LazyNumber(std::make_shared<NodeT>(at, op, a, b));
}

}  // namespace detail

inline LazyNumber operator+(const LazyNumber& a, const LazyNumber& b) {
    return detail::lazy_binary(numops::Add{}, a, b);
}

inline LazyNumber operator-(const LazyNumber& a, const LazyNumber& b) {
    return detail::lazy_binary(numops::Sub{}, a, b);
}

inline LazyNumber operator*(const LazyNumber& a, const LazyNumber& b) {
    return detail::lazy_binary(numops::Mul{}, a, b);
}

/// When the divisor interval cannot exclude zero the quotient is resolved
/// eagerly: both operands are evaluated exactly, division by an exact zero is
/// a hard error, and otherwise the result is a plain leaf.
inline LazyNumber operator/(const LazyNumber& a, const LazyNumber& b) {
    if (b.approx().contains_zero()) {
        stats::count_fallback();
        const BigRational& divisor = b.exact();  // also tightens b's interval
        return LazyNumber(a.exact() / divisor);
    }
    return detail::lazy_binary(numops::Div{}, a, b);
}

inline LazyNumber operator-(const LazyNumber& a) {
    using NodeT = ConstructionNode<numops::Neg, Interval, BigRational, LazyNumber>;
    return LazyNumber(std::make_shared<NodeT>(-a.approx(), numops::Neg{}, a));
}

/// Sign from the interval when it decides; exact otherwise.
inline int sign(const LazyNumber& a) {
    const Certainty c = sign_certainty(a.approx());
    if (is_certain(c)) return static_cast<int>(c);
    stats::count_fallback();
    return a.exact().sign();
}

inline int compare(const LazyNumber& a, const LazyNumber& b) {
    const Certainty c = compare_certainty(a.approx(), b.approx());
    if (is_certain(c)) return static_cast<int>(c);
    stats::count_fallback();
    return compare(a.exact(), b.exact());
}

inline bool operator<(const LazyNumber& a, const LazyNumber& b) { return compare(a, b) < 0; }
inline bool operator>(const LazyNumber& a, const LazyNumber& b) { return compare(a, b) > 0; }
inline bool operator==(const LazyNumber& a, const LazyNumber& b) { return compare(a, b) == 0; }
inline bool operator!=(const LazyNumber& a, const LazyNumber& b) { return compare(a, b) != 0; }

inline Interval to_interval(const LazyNumber& a) noexcept { return a.approx(); }

}  // namespace lazygeo
