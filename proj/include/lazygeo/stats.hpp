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

// Lightweight instrumentation used by tests and the benchmark harness.
// Counters are thread-local: a lazy DAG is confined to one thread at a time,
// so per-thread tallies are exact for any single pipeline.

namespace lazygeo::stats {

namespace detail {
inline thread_local std::uint64_t exact_ops = 0;
inline thread_local std::uint64_t exact_fallbacks = 0;
}  // namespace detail

/// Number of exact rational arithmetic operations (+, -, *, /, negation)
/// performed by this thread since the last reset.
inline std::uint64_t exact_ops() noexcept { return detail::exact_ops; }

/// Number of times an uncertain interval result forced an exact
/// re-evaluation (predicate fallback, comparison fallback, or a lazy
/// construction degrading to an exact leaf).
inline std::uint64_t exact_fallbacks() noexcept { return detail::exact_fallbacks; }

inline void reset() noexcept {
    detail::exact_ops = 0;
    detail::exact_fallbacks = 0;
}

inline void count_exact_op() noexcept { ++detail::exact_ops; }
inline void count_fallback() noexcept { ++detail::exact_fallbacks; }

}  // namespace lazygeo::stats
