// Copyright 2026 the bcnn developers
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

#ifndef BCNN_RNG_HPP
#define BCNN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace bcnn {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hash-combines a base seed with up to two stream tags. Streams derived from
// distinct (salt_a, salt_b) pairs are independent, so record-level generators
// can be created in any order and still reproduce the same values.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt_a, uint64_t salt_b = 0) {
    uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
    h = splitmix64(h ^ salt_a);
    h = splitmix64(h ^ salt_b);
    return h;
}

// Deterministic generator. The engine is std::mt19937_64 (fully specified by
// the standard); all floating-point draws below avoid std:: distributions,
// whose output is implementation-defined.
class Prng {
  public:
    explicit Prng(uint64_t seed) : eng_(seed) {}

    static Prng derived(uint64_t seed, uint64_t salt_a, uint64_t salt_b = 0) {
        return Prng(derive_seed(seed, salt_a, salt_b));
    }

    uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1).
    double uniform_open() {
        double u = uniform();
        while (u == 0.0) {
            u = uniform();
        }
        return u;
    }

    // Uniform on (a, b).
    double uniform_open(double a, double b) { return a + (b - a) * uniform_open(); }

    // Uniform on [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Standard normal via Box-Muller (one value per pair of uniforms).
    double normal() {
        double u1 = uniform_open();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Unbiased integer on [0, n).
    uint64_t below(uint64_t n) {
        uint64_t bound = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = next_u64();
        while (x >= bound) {
            x = next_u64();
        }
        return x % n;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bcnn

#endif
