// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Solvers: exact brute force (ground truth), simulated annealing (baseline),
// schedule-driven spin-vector Monte Carlo (the annealer proxy), and ICE-style
// coefficient noise.  All are deterministic functions of (model, params,
// seed); per-read RNG streams are derived from (seed, read index) so serial
// and parallel execution agree.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qaw/hardware/anneal_functions.hpp"
#include "qaw/hardware/schedule.hpp"
#include "qaw/model.hpp"
#include "qaw/solve/sample_set.hpp"

namespace qaw {

struct BruteForceResult {
    double energy = 0.0;                    // ground-state energy
    std::vector<Assignment> ground_states;  // every optimal spin assignment
};

// Exhaustive enumeration by Gray code with incremental energy updates.
// Guards: n_spins <= 25; more than 2^20 degenerate ground states is refused.
BruteForceResult brute_force(const IsingModel& m);

struct SaParams {
    int sweeps = 1000;
    double beta_start = 0.1;  // geometric inverse-temperature ladder
    double beta_end = 10.0;
    std::uint64_t seed = 0;
};

SampleSet simulated_anneal(const IsingModel& m, const SaParams& p, int reads);

struct SvmcParams {
    Schedule schedule;
    AnnealFunctions functions;
    std::optional<double> temperature_mK;  // overrides functions.temperature_mK
    int sweeps_per_us = 1000;
    std::uint64_t seed = 0;
};

// Spin-vector Monte Carlo: each spin is an angle theta in [0, pi] starting at
// pi/2; the effective energy is
//   E(theta; s) = -A(s) sum_i sin(theta_i)
//                 + B(s) [sum_ij J_ij cos cos + sum_i h_i cos(theta_i)]
// updated by Metropolis at fixed temperature while s follows the schedule
// (a pause holds s and keeps sweeping).  Sweep j runs at anneal fraction
// s((j + 0.5) / sweeps_per_us); total sweeps = round(t_tot * sweeps_per_us).
// Proposals are uniform in a window pi * max(0.05, A/(A+B)) that shrinks as
// the problem Hamiltonian takes over; angles reflect at the boundaries.
// Final assignment: sign(cos(theta)), ties to +1.
SampleSet svmc_anneal(const IsingModel& m, const SvmcParams& p, int reads);

// Adds independent zero-mean Gaussian noise to every existing coefficient:
// sigma_h on fields, sigma_j on couplings.  The input model is untouched.
IsingModel ice_perturb(const IsingModel& m, double sigma_h, double sigma_j, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Sampler interface used by the benchmarking harness
// ---------------------------------------------------------------------------

// Everything a sampler may want to know about the run it serves.  The model it
// receives is the gauged embedded problem; `gauge` is the effective gauge that
// was applied (mock samplers need it to plant recognizable answers).
struct AnnealContext {
    const Schedule* schedule = nullptr;
    const AnnealFunctions* functions = nullptr;
    double jf = 0.0;
    double t_a = 0.0;
    double s_p = 0.0;
    double t_p = 0.0;
    const GaugeVector* gauge = nullptr;
    std::uint64_t seed = 0;  // derived per (instance, point, gauge)
};

struct Sampler {
    virtual ~Sampler() = default;
    virtual std::string name() const = 0;
    virtual SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) = 0;
};

// Factory for the real samplers ("svmc" | "sa"); sweeps_per_us applies to
// svmc, sweeps to sa.
std::unique_ptr<Sampler> make_svmc_sampler(int sweeps_per_us = 1000);
std::unique_ptr<Sampler> make_sa_sampler(int sweeps = 1000, double beta_start = 0.1,
                                         double beta_end = 10.0);

}  // namespace qaw
