// Copyright 2026 The Blindgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLINDGATE_RNG_H
#define BLINDGATE_RNG_H

#include <cstddef>
#include <cstdint>
#include <limits>

#include "blindgate/linalg.h"

namespace blindgate {

/// Counter-based generator: output k is SplitMix64 of (key, k), so streams are reproducible
/// across platforms and can be split without sharing state.
class Rng {
  public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

    uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Independent child stream labelled by `stream`.
    Rng split(uint64_t stream) const { return Rng(key_ ^ mix(stream + 0xbb67ae8584caa73bULL), 0); }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, bound) without modulo bias.
    uint64_t below(uint64_t bound);
    bool bit() { return next() >> 63; }
    double gaussian();

    uint64_t counter() const { return counter_; }

  private:
    Rng(uint64_t key, int) : key_(key) {}

    static constexpr uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

/// Haar-random unit vector in C^dim.
Vector haar_state(size_t dim, Rng &rng);
/// Haar-random unitary via QR of a complex Ginibre matrix with the phase fix on R's diagonal.
Matrix haar_unitary(size_t dim, Rng &rng);

}  // namespace blindgate

#endif
