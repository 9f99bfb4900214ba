// Copyright 2026 The clumin authors
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

namespace clumin {

/// splitmix64 (Steele, Lea & Flood 2014). Fixed algorithm so that a seed
/// reproduces the same stream on every platform; the name is recorded in
/// every generated instance file.
class SplitMix64 {
public:
    static constexpr const char* kName = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) without modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection threshold = 2^64 mod bound
        std::uint64_t min = (0ULL - bound) % bound;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r < min);
        return r % bound;
    }

    /// Uniform in [lo, hi], both inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1ULL));
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Decorrelated seed for a sub-stream (per-trial seeds and the like).
    std::uint64_t fork_seed() { return next_u64(); }

private:
    std::uint64_t state_;
};

}  // namespace clumin
