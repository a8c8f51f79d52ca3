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
#include <optional>
#include <string_view>
#include <utility>

// Segment-intersection benchmark: generate random segments, intersect all
// pairs collecting the point results, shuffle, then run orientation over
// consecutive point triples.  The same pipeline runs over four kernel
// configurations so their cost and exactness can be compared.

namespace lazygeo {

/// One step of the classic 48-bit LCG: state' = (0x5DEECE66D * state + 0xB)
/// mod 2^48, value = state' / 2^48.  Integer arithmetic only, so sequences
/// reproduce bit-for-bit on every platform.
inline std::pair<double, std::uint64_t> drand48_next(std::uint64_t state) noexcept {
    constexpr std::uint64_t kMask = (std::uint64_t(1) << 48) - 1;
    const std::uint64_t next = (0x5DEECE66Dull * (state & kMask) + 0xBull) & kMask;
    return {double(next) * 0x1p-48, next};
}

class Rand48 {
public:
    explicit Rand48(std::uint64_t seed) noexcept
        : state_(seed & ((std::uint64_t(1) << 48) - 1)) {}

    double next() noexcept {
        auto [value, state] = drand48_next(state_);
        state_ = state;
        return value;
    }

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

enum class KernelChoice {
    Double,      // plain binary64: fastest, not robust
    Exact,       // BigRational coordinates throughout
    LazyNumber,  // Cartesian kernel over the lazy exact number type
    LazyKernel,  // lazy geometric objects + filtered predicates
};

const char* kernel_name(KernelChoice k) noexcept;
std::optional<KernelChoice> kernel_from_name(std::string_view name) noexcept;

struct BenchConfig {
    KernelChoice kernel = KernelChoice::Double;
    int segments = 2000;
    std::uint64_t seed = 0;  // 48-bit
    bool shuffle = true;
};

struct BenchReport {
    long long intersections = 0;
    long long orient_neg = 0;
    long long orient_pos = 0;
    long long orient_zero = 0;  // tallies sum to intersections - 2
    double seconds = 0.0;
    std::uint64_t peak_bytes = 0;  // filled by a harness with an allocation tracker
    std::uint64_t exact_fallbacks = 0;
};

/// Runs the pipeline for cfg.  Counts and tallies are deterministic
/// functions of (segments, seed, shuffle).  Throws std::runtime_error when
/// fewer than 3 intersection points exist, std::invalid_argument on a bad
/// config.  peak_bytes is reported as 0; memory is a property of the whole
/// process, so the CLI measures it around this call.
BenchReport run_benchmark(const BenchConfig& cfg);

}  // namespace lazygeo
