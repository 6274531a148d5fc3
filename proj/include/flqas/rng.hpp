// Copyright 2026 The flqas authors
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

#ifndef FLQAS_RNG_HPP
#define FLQAS_RNG_HPP

#include <cstdint>

namespace flqas {

/// Counter-based stream RNG (splitmix64). Every sampling site derives an
/// independent stream from (master seed, counter indices), so results do not
/// depend on evaluation order or worker count.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, 4).
    int next_quarter_turn() {
        return static_cast<int>(next() >> 62);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    uint64_t next_below(uint64_t bound) {
        // Bias is negligible for the bounds used here (< 2^32).
        return next() % bound;
    }

  private:
    uint64_t state_;
};

/// Hashes a seed with up to three stream indices into a new stream seed.
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    SplitMix64 mix(master ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL) ^
                   (c * 0x9e6c63d0876a9a47ULL));
    mix.next();
    return mix.next();
}

}  // namespace flqas

#endif
