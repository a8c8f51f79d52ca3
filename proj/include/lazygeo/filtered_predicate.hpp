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

#include <cstdint>
#include <utility>

#include "lazygeo/interval.hpp"
#include "lazygeo/stats.hpp"

namespace lazygeo {

/// Predicate adaptor: evaluate with the approximate predicate over converted
/// inputs; when that raises the uncertainty signal, re-evaluate with the
/// exact predicate.  The result therefore always equals the exact one.
///
/// EP and AP must compute the same mathematical predicate; C2E and C2A
/// convert the call arguments to each side's object types.
template <typename EP, typename AP, typename C2E, typename C2A>
class FilteredPredicate {
public:
    FilteredPredicate() = default;
    FilteredPredicate(EP ep, AP ap, C2E c2e, C2A c2a)
        : ep_(std::move(ep)), ap_(std::move(ap)), c2e_(std::move(c2e)), c2a_(std::move(c2a)) {}

    template <typename... Args>
    auto operator()(const Args&... args) const -> decltype(std::declval<const EP&>()(
        std::declval<const C2E&>()(args)...)) {
        ++approx_calls_;
        try {
            return ap_(c2a_(args)...);
        } catch (const UncertainComparison&) {
            ++exact_fallbacks_;
            stats::count_fallback();
            return ep_(c2e_(args)...);
        }
    }

    /// Calls answered since construction/reset, and how many of them needed
    /// the exact fallback.  Per instance and unsynchronized; aggregate in
    /// the harness.
    std::uint64_t approx_calls() const noexcept { return approx_calls_; }
    std::uint64_t exact_fallbacks() const noexcept { return exact_fallbacks_; }
    void reset_counters() const noexcept { approx_calls_ = exact_fallbacks_ = 0; }

private:
    [[no_unique_address]] EP ep_;
    [[no_unique_address]] AP ap_;
    [[no_unique_address]] C2E c2e_;
    [[no_unique_address]] C2A c2a_;
    mutable std::uint64_t approx_calls_ = 0;
    mutable std::uint64_t exact_fallbacks_ = 0;
};

}  // namespace lazygeo
