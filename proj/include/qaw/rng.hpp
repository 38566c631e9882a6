// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random number generation.
//
// The whole workbench must be byte-for-byte reproducible from a master seed,
// across platforms and across serial/parallel execution.  Standard-library
// distributions are implementation-defined, so we hand-roll the small pieces
// we need: splitmix64 for seeding/derivation, xoshiro256++ for streams, a
// 53-bit uniform double, and a Box-Muller normal.  Independent streams for
// parallel tasks are derived by hashing a path of integer ids onto the master
// seed; the derivation is associative-free (order matters) and collision
// resistant enough for the task counts involved here.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace qaw {

// Finalizer from splitmix64; good avalanche, used for seeding and derivation.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive a child seed from a base seed and a stream id.  Chain calls to build
// hierarchical streams: derive_seed(derive_seed(master, instance), gauge).
inline uint64_t derive_seed(uint64_t base, uint64_t id) {
    return mix64(base ^ mix64(id));
}

inline uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
    uint64_t s = base;
    for (uint64_t id : path) s = derive_seed(s, id);
    return s;
}

// xoshiro256++ by Blackman & Vigna (public domain reference implementation),
// seeded through splitmix64 as its authors recommend.
class Rng {
  public:
    explicit Rng(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n) by rejection (no modulo bias).
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int sign() { return (next() >> 63) ? 1 : -1; }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller; one spare value cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qaw
