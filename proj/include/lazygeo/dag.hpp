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

#include <atomic>
#include <cassert>
#include <cstdint>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

// History DAG shared by lazy numbers and lazy geometric objects.  A node
// stores an approximation, an optional cached exact value, and (for interior
// nodes) the exact operation plus handles to its arguments.  Exact values are
// computed on demand, bottom-up, with an explicit work stack: benchmark DAGs
// reach depths where call-stack recursion would overflow.  Once a node is
// exact its argument handles are reset to shared per-kind default nodes,
// pruning the subgraph.

namespace lazygeo {

class DagNode {
public:
    DagNode() noexcept { live_.fetch_add(1, std::memory_order_relaxed); }
    virtual ~DagNode() { live_.fetch_sub(1, std::memory_order_relaxed); }
    DagNode(const DagNode&) = delete;
    DagNode& operator=(const DagNode&) = delete;

    virtual bool exact_ready() const noexcept = 0;

    /// Appends the children that still need exact evaluation.
    virtual void pending_children(std::vector<DagNode*>& out) const = 0;

    /// Computes and caches the exact value from the children (all of which
    /// must already be exact), refreshes the approximation from it, and
    /// prunes the argument handles.
    virtual void compute_exact() = 0;

    /// Moves the argument handles out, for iterative teardown.
    virtual void steal_children(std::vector<std::shared_ptr<DagNode>>& out) noexcept = 0;

    /// Number of live DAG nodes in the process (test instrumentation).
    static std::int64_t live_nodes() noexcept { return live_.load(std::memory_order_relaxed); }

private:
    static inline std::atomic<std::int64_t> live_{0};
};

/// Bottom-up exact evaluation of the DAG under root; no recursion.
inline void force_exact(DagNode& root) {
    if (root.exact_ready()) return;
    std::vector<DagNode*> stack{&root};
    std::vector<DagNode*> pending;
    while (!stack.empty()) {
        DagNode* n = stack.back();
        if (n->exact_ready()) {
            stack.pop_back();
            continue;
        }
        pending.clear();
        n->pending_children(pending);
        if (pending.empty()) {
            n->compute_exact();
            stack.pop_back();
        } else {
            stack.insert(stack.end(), pending.begin(), pending.end());
        }
    }
}

namespace detail {

// Releases a subgraph without recursive destructor chains: a child we hold
// the last reference to is stripped of its own children before it dies, so
// every destructor runs on a childless node.
inline void drain_children(std::vector<std::shared_ptr<DagNode>>& work) noexcept {
    while (!work.empty()) {
        std::shared_ptr<DagNode> n = std::move(work.back());
        work.pop_back();
        if (n.use_count() == 1) n->steal_children(work);
    }
}

}  // namespace detail

/// Typed DAG node: interval-based approximation AT, exact value ET.
template <typename AT, typename ET>
class LazyNode : public DagNode {
public:
    const AT& approx() const noexcept { return at_; }

    bool exact_ready() const noexcept final { return et_ != nullptr; }

    const ET& exact_value() const noexcept {
        assert(et_);
        return *et_;
    }

    /// Test hook: replaces the approximation.  Callers must preserve the
    /// containment invariant (only ever widen).
    void debug_set_approx(AT at) noexcept { at_ = std::move(at); }

protected:
    explicit LazyNode(AT at) noexcept : at_(std::move(at)) {}
    LazyNode(AT at, ET et) : at_(std::move(at)), et_(std::make_unique<const ET>(std::move(et))) {}

    void cache_exact(ET et) { et_ = std::make_unique<const ET>(std::move(et)); }
    void refresh_approx(AT at) noexcept { at_ = std::move(at); }

private:
    AT at_;
    std::unique_ptr<const ET> et_;
};

/// Exact value of the shared per-kind default node; specialized per ET.
template <typename ET>
struct DefaultExact;

/// Shared handle to a DAG node.  Copying shares the node; the default
/// constructor yields a handle to one process-wide node per (AT, ET) kind so
/// that pruning can reset argument slots without allocating.
template <typename AT, typename ET>
class Lazy {
public:
    using ApproxType = AT;
    using ExactType = ET;
    using Node = LazyNode<AT, ET>;

    Lazy() : node_(default_node()) {}
    explicit Lazy(std::shared_ptr<Node> n) noexcept : node_(std::move(n)) { assert(node_); }

    /// The stored approximation; never triggers exact computation.
    AT approx() const noexcept { return node_->approx(); }

    /// The exact value, computed and cached on first demand.  Forcing it
    /// also tightens the approximation and prunes the history below.
    const ET& exact() const {
        force_exact(*node_);
        return node_->exact_value();
    }

    bool exact_cached() const noexcept { return node_->exact_ready(); }

    Node& node() const noexcept { return *node_; }

    /// Releases the node pointer (teardown machinery).
    std::shared_ptr<Node> detach() noexcept { return std::move(node_); }

    friend bool identical(const Lazy& a, const Lazy& b) noexcept { return a.node_ == b.node_; }

private:
    static const std::shared_ptr<Node>& default_node();

    std::shared_ptr<Node> node_;
};

/// Leaf: the exact value is present from construction, the approximation is
/// either supplied (already certified to contain it) or derived from it.
template <typename AT, typename ET>
class LeafNode final : public LazyNode<AT, ET> {
public:
    LeafNode(AT at, ET et) : LazyNode<AT, ET>(std::move(at), std::move(et)) {}

    void pending_children(std::vector<DagNode*>&) const override {}
    void compute_exact() override {}
    void steal_children(std::vector<std::shared_ptr<DagNode>>&) noexcept override {}
};

template <typename AT, typename ET>
const std::shared_ptr<LazyNode<AT, ET>>& Lazy<AT, ET>::default_node() {
    static const std::shared_ptr<Node> node = [] {
        ET et = DefaultExact<ET>::value();
        AT at = exact_to_approx(et);
        return std::make_shared<LeafNode<AT, ET>>(std::move(at), std::move(et));
    }();
    return node;
}

/// Interior node: approximation computed up front by the caller, exact
/// construction EC replayed over the arguments' exact values on demand.
/// The outdegree equals the construction's arity.
template <typename EC, typename AT, typename ET, typename... Args>
class ConstructionNode final : public LazyNode<AT, ET> {
public:
    ConstructionNode(AT at, EC ec, Args... args)
        : LazyNode<AT, ET>(std::move(at)), ec_(std::move(ec)), args_(std::move(args)...) {}

    ~ConstructionNode() override {
        std::vector<std::shared_ptr<DagNode>> work;
        collect_dying_children(work);
        detail::drain_children(work);
    }

    void pending_children(std::vector<DagNode*>& out) const override {
        std::apply(
            [&out](const auto&... a) {
                (..., (a.node().exact_ready() ? void() : out.push_back(&a.node())));
            },
            args_);
    }

    void compute_exact() override {
        this->cache_exact(
            std::apply([this](const auto&... a) { return ec_(a.exact()...); }, args_));
        // The replayed approximation has typically accumulated error; the
        // exact value gives the tightest possible one.
        this->refresh_approx(exact_to_approx(this->exact_value()));
        args_ = std::tuple<Args...>{};  // prune: reset slots to shared defaults
    }

    void steal_children(std::vector<std::shared_ptr<DagNode>>& out) noexcept override {
        std::apply(
            [&out](auto&... a) {
                (..., [&out](auto p) { if (p) out.push_back(std::move(p)); }(a.detach()));
            },
            args_);
    }

private:
    void collect_dying_children(std::vector<std::shared_ptr<DagNode>>& out) noexcept {
        std::apply(
            [&out](auto&... a) {
                (..., [&out](auto p) {
                    if (p && p.use_count() == 1) out.push_back(std::move(p));
                }(a.detach()));
            },
            args_);
    }

    [[no_unique_address]] EC ec_;
    std::tuple<Args...> args_;
};

}  // namespace lazygeo
