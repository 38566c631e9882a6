// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include "qaw/rng.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {

namespace {

std::vector<std::vector<std::pair<int, double>>> adjacency(const IsingModel& m) {
    std::vector<std::vector<std::pair<int, double>>> adj(m.n_spins);
    for (const auto& [key, value] : m.J) {
        adj[key.first].emplace_back(key.second, value);
        adj[key.second].emplace_back(key.first, value);
    }
    return adj;
}

}  // namespace

SampleSet simulated_anneal(const IsingModel& m, const SaParams& p, int reads) {
    if (p.sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
    if (p.beta_start <= 0 || p.beta_end < p.beta_start) {
        throw std::invalid_argument("need 0 < beta_start <= beta_end");
    }
    if (reads < 0) throw std::invalid_argument("reads must be >= 0");

    const auto adj = adjacency(m);
    std::vector<double> field(m.n_spins, 0.0);
    for (const auto& [i, hv] : m.h) field[i] = hv;

    SampleSet out;
    out.mode = VarMode::spin;
    out.n_vars = m.n_spins;
    out.solver = "sa";
    out.seed = p.seed;

    const double ratio = p.beta_end / p.beta_start;
    for (int read = 0; read < reads; ++read) {
        Rng rng(derive_seed(p.seed, {static_cast<std::uint64_t>(read)}));
        Assignment s = Assignment::spin(std::vector<int8_t>(m.n_spins, 1));
        for (int i = 0; i < m.n_spins; ++i) s.values[i] = static_cast<int8_t>(rng.sign());
        for (int sweep = 0; sweep < p.sweeps; ++sweep) {
            const double frac = p.sweeps == 1 ? 1.0 : static_cast<double>(sweep) / (p.sweeps - 1);
            const double beta = p.beta_start * std::pow(ratio, frac);
            for (int i = 0; i < m.n_spins; ++i) {
                double local = field[i];
                for (const auto& [other, j] : adj[i]) local += j * s.values[other];
                const double delta = -2.0 * s.values[i] * local;
                if (delta <= 0 || rng.uniform() < std::exp(-beta * delta)) {
                    s.values[i] = static_cast<int8_t>(-s.values[i]);
                }
            }
        }
        out.push(s, energy(m, s));
    }
    return out;
}

}  // namespace qaw
