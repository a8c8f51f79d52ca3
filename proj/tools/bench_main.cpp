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

// Benchmark CLI.  Each invocation runs one kernel configuration in a fresh
// process, so allocator and cache state never leak between configurations.
// Memory is measured with an instrumented allocation counter (global
// operator new/delete plus the GMP allocation hooks), not process size:
// byte-exact, portable, and free of residency noise.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <iostream>
#include <new>
#include <string>

#include <gmp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "lazygeo/bench.hpp"

namespace {

std::atomic<std::uint64_t> g_live_bytes{0};
std::atomic<std::uint64_t> g_peak_bytes{0};

void note_alloc(std::size_t n) noexcept {
    const std::uint64_t live = g_live_bytes.fetch_add(n, std::memory_order_relaxed) + n;
    std::uint64_t peak = g_peak_bytes.load(std::memory_order_relaxed);
    while (live > peak &&
           !g_peak_bytes.compare_exchange_weak(peak, live, std::memory_order_relaxed)) {
    }
}

void note_free(std::size_t n) noexcept {
    g_live_bytes.fetch_sub(n, std::memory_order_relaxed);
}

constexpr std::size_t kHeader = alignof(std::max_align_t);

void* tracked_alloc(std::size_t n) noexcept {
    void* raw = std::malloc(n + kHeader);
    if (!raw) return nullptr;
    *static_cast<std::size_t*>(raw) = n;
    note_alloc(n);
    return static_cast<char*>(raw) + kHeader;
}

void tracked_free(void* p) noexcept {
    if (!p) return;
    void* raw = static_cast<char*>(p) - kHeader;
    note_free(*static_cast<std::size_t*>(raw));
    std::free(raw);
}

void* gmp_tracked_alloc(std::size_t n) {
    note_alloc(n);
    return std::malloc(n);
}

void* gmp_tracked_realloc(void* p, std::size_t old_n, std::size_t new_n) {
    note_free(old_n);
    note_alloc(new_n);
    return std::realloc(p, new_n);
}

void gmp_tracked_free(void* p, std::size_t n) {
    note_free(n);
    std::free(p);
}

}  // namespace

void* operator new(std::size_t n) {
    if (void* p = tracked_alloc(n)) return p;
    throw std::bad_alloc();
}
void* operator new[](std::size_t n) {
    if (void* p = tracked_alloc(n)) return p;
    throw std::bad_alloc();
}
void* operator new(std::size_t n, const std::nothrow_t&) noexcept { return tracked_alloc(n); }
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept { return tracked_alloc(n); }

void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { tracked_free(p); }

int main(int argc, char** argv) {
    // Must run before the first GMP allocation anywhere in the process.
    mp_set_memory_functions(gmp_tracked_alloc, gmp_tracked_realloc, gmp_tracked_free);

    CLI::App app{"all-pairs segment intersection + orientation benchmark"};
    std::string kernel_arg;
    int segments = 2000;
    std::uint64_t seed = 0;
    bool no_shuffle = false;
    bool as_json = false;

    app.add_option("--kernel", kernel_arg, "kernel configuration to run")
        ->required()
        ->check(CLI::IsMember({"exact", "lazy-number", "lazy-kernel", "double"}));
    app.add_option("--segments", segments, "number of random segments")
        ->check(CLI::Range(3, 1000000));
    app.add_option("--seed", seed, "48-bit RNG seed");
    app.add_flag("--no-shuffle", no_shuffle,
                 "keep intersection points in discovery order (consecutive points then often "
                 "share a source segment, stressing the exact fallback)");
    app.add_flag("--json", as_json, "emit one JSON object instead of text");
    CLI11_PARSE(app, argc, argv);

    lazygeo::BenchConfig cfg;
    cfg.kernel = *lazygeo::kernel_from_name(kernel_arg);
    cfg.segments = segments;
    cfg.seed = seed;
    cfg.shuffle = !no_shuffle;

    lazygeo::BenchReport rep;
    try {
        g_peak_bytes.store(g_live_bytes.load());
        rep = lazygeo::run_benchmark(cfg);
        rep.peak_bytes = g_peak_bytes.load();
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return 1;
    }

    if (as_json) {
        nlohmann::json j;
        j["kernel"] = kernel_arg;
        j["segments"] = segments;
        j["seed"] = seed;
        j["intersections"] = rep.intersections;
        j["orient_neg"] = rep.orient_neg;
        j["orient_pos"] = rep.orient_pos;
        j["orient_zero"] = rep.orient_zero;
        j["seconds"] = rep.seconds;
        j["peak_bytes"] = rep.peak_bytes;
        j["exact_fallbacks"] = rep.exact_fallbacks;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "kernel:          " << kernel_arg << "\n"
                  << "segments:        " << segments << "\n"
                  << "seed:            " << seed << "\n"
                  << "intersections:   " << rep.intersections << "\n"
                  << "orientation:     negative=" << rep.orient_neg
                  << " positive=" << rep.orient_pos << " collinear=" << rep.orient_zero << "\n"
                  << "seconds:         " << rep.seconds << "\n"
                  << "peak_bytes:      " << rep.peak_bytes << "\n"
                  << "exact_fallbacks: " << rep.exact_fallbacks << "\n";
    }
    return 0;
}
