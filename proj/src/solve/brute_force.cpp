// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qaw/solve/solvers.hpp"

namespace qaw {

namespace {

constexpr int kMaxSpins = 25;
constexpr size_t kMaxGroundStates = size_t{1} << 20;

// Adjacency list with coupling strengths, for O(deg) single-flip deltas.
std::vector<std::vector<std::pair<int, double>>> adjacency(const IsingModel& m) {
    std::vector<std::vector<std::pair<int, double>>> adj(m.n_spins);
    for (const auto& [key, value] : m.J) {
        adj[key.first].emplace_back(key.second, value);
        adj[key.second].emplace_back(key.first, value);
    }
    return adj;
}

}  // namespace

BruteForceResult brute_force(const IsingModel& m) {
    if (m.n_spins > kMaxSpins) {
        throw std::invalid_argument("brute_force supports at most 25 spins");
    }
    BruteForceResult result;
    if (m.n_spins == 0) {
        result.energy = m.offset;
        result.ground_states.push_back(Assignment::spin({}));
        return result;
    }
    const auto adj = adjacency(m);
    std::vector<double> field(m.n_spins, 0.0);
    for (const auto& [i, hv] : m.h) field[i] = hv;

    Assignment s = Assignment::spin(std::vector<int8_t>(m.n_spins, -1));
    double current = energy(m, s);
    result.energy = current;
    result.ground_states.push_back(s);

    const std::uint64_t total = std::uint64_t{1} << m.n_spins;
    for (std::uint64_t k = 1; k < total; ++k) {
        // Gray code: state k differs from k-1 in bit ctz(k).
        const int flip = std::countr_zero(k);
        double local = field[flip];
        for (const auto& [other, j] : adj[flip]) local += j * s.values[other];
        current += -2.0 * s.values[flip] * local;
        s.values[flip] = static_cast<int8_t>(-s.values[flip]);
        if (current < result.energy - 1e-9) {
            result.energy = current;
            result.ground_states.clear();
            result.ground_states.push_back(s);
        } else if (std::abs(current - result.energy) <= 1e-9) {
            if (result.ground_states.size() >= kMaxGroundStates) {
                throw std::runtime_error("brute_force: ground state degeneracy exceeds 2^20");
            }
            result.ground_states.push_back(s);
        }
    }
    return result;
}

}  // namespace qaw
