// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
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

// Proposal window: wide while the driver dominates, never collapsing entirely.
double window(double a, double b) {
    const double scale = a + b;
    if (scale <= 0.0) return std::numbers::pi;
    return std::numbers::pi * std::max(0.05, a / scale);
}

}  // namespace

SampleSet svmc_anneal(const IsingModel& m, const SvmcParams& p, int reads) {
    if (p.sweeps_per_us < 1) throw std::invalid_argument("sweeps_per_us must be >= 1");
    if (reads < 0) throw std::invalid_argument("reads must be >= 0");
    if (p.schedule.breakpoints.empty()) throw std::invalid_argument("schedule is empty");
    const double t_tot = p.schedule.t_tot();
    const long long total_sweeps = std::llround(t_tot * p.sweeps_per_us);
    if (total_sweeps < 1) throw std::invalid_argument("schedule too short for one sweep");
    const double temp_mK = p.temperature_mK.value_or(p.functions.temperature_mK);
    if (temp_mK < 0) throw std::invalid_argument("temperature must be >= 0");
    const double kt = kBoltzmannGHzPerMilliKelvin * temp_mK;

    const auto adj = adjacency(m);
    std::vector<double> field(m.n_spins, 0.0);
    for (const auto& [i, hv] : m.h) field[i] = hv;

    SampleSet out;
    out.mode = VarMode::spin;
    out.n_vars = m.n_spins;
    out.solver = "svmc";
    out.seed = p.seed;
    out.model_time_us = t_tot * reads;

    constexpr double pi = std::numbers::pi;
    std::vector<double> theta(m.n_spins);
    std::vector<double> ct(m.n_spins), st(m.n_spins);

    for (int read = 0; read < reads; ++read) {
        Rng rng(derive_seed(p.seed, {static_cast<std::uint64_t>(read)}));
        for (int i = 0; i < m.n_spins; ++i) {
            theta[i] = pi / 2.0;
            ct[i] = 0.0;
            st[i] = 1.0;
        }
        for (long long sweep = 0; sweep < total_sweeps; ++sweep) {
            const double t = (sweep + 0.5) / p.sweeps_per_us;
            const double s = p.schedule.s_at(t);
            const double a = p.functions.A_at(s);
            const double b = p.functions.B_at(s);
            const double w = window(a, b);
            for (int i = 0; i < m.n_spins; ++i) {
                double proposal = theta[i] + rng.uniform(-w, w);
                // Reflect back into [0, pi]; |offset| <= pi so one fold is enough.
                if (proposal < 0.0) proposal = -proposal;
                if (proposal > pi) proposal = 2.0 * pi - proposal;
                double local = field[i];
                for (const auto& [other, j] : adj[i]) local += j * ct[other];
                const double cn = std::cos(proposal);
                const double sn = std::sin(proposal);
                const double delta = -a * (sn - st[i]) + b * local * (cn - ct[i]);
                bool accept = delta <= 0.0;
                if (!accept && kt > 0.0) accept = rng.uniform() < std::exp(-delta / kt);
                if (accept) {
                    theta[i] = proposal;
                    ct[i] = cn;
                    st[i] = sn;
                }
            }
        }
        std::vector<int8_t> spins(m.n_spins);
        for (int i = 0; i < m.n_spins; ++i) spins[i] = ct[i] >= 0.0 ? 1 : -1;
        Assignment a = Assignment::spin(std::move(spins));
        out.push(a, energy(m, a));
    }
    return out;
}

}  // namespace qaw
