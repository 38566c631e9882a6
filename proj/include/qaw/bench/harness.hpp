// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// The benchmarking protocol: gauge-averaged runs with success counting against
// the instance oracle, time-to-solution, parameter sweeps over
// (|J_F|, t_a, s_p, t_p) grids, and bootstrap aggregation across an instance
// ensemble.  Everything is a deterministic function of the master seed; the
// (instance, grid point, gauge) task set is embarrassingly parallel and the
// worker count (QAW_WORKERS) never changes results.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaw/embed/embed_problem.hpp"
#include "qaw/hardware/anneal_functions.hpp"
#include "qaw/hardware/schedule.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {

struct GridPoint {
    double jf = 1.0;   // |J_F| chain coupling magnitude
    double t_a = 1.0;  // anneal time, microseconds
    double s_p = 0.5;  // pause location (ignored when t_p == 0)
    double t_p = 0.0;  // pause duration, microseconds
    double t_tot() const { return t_a + t_p; }
};

struct SweepConfig {
    std::vector<std::string> instance_files;

    std::string solver = "svmc";  // "svmc" | "sa"
    int sweeps_per_us = 1000;
    int sa_sweeps = 1000;

    std::string anneal_functions = "dw2000q_like";  // builtin name or CSV path
    std::optional<double> temperature_mK;           // override table temperature

    std::string topology = "chimera";  // "chimera" | "pegasus"
    int topology_size = 4;
    int embed_tries = 10;

    std::vector<double> jf_grid{1.0};
    std::vector<double> t_a_grid{1.0};
    std::vector<double> s_p_grid{0.5};
    std::vector<double> t_p_grid{0.0};

    int gauges = 100;  // programmings per grid point
    int reads = 500;   // anneals per programming

    std::string unembed = "majority_vote";  // or "discard"
    double ice_sigma_h = 0.0;
    double ice_sigma_j = 0.0;

    long long resamples = 100000;  // bootstrap resamples
    double band_lo = 35.0;         // percentile band for error bars
    double band_hi = 65.0;

    std::uint64_t master_seed = 1;
    std::string out_dir = "runs";
};

nlohmann::json to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// FNV-1a hash of the canonical JSON dump, as 16 hex digits; names run
// directories so identical configs land in identical paths.
std::string config_hash(const SweepConfig& cfg);

// One-command profile following the workbench's recommended operating ranges:
// t_a = 1 us, pauses of 0.2 us across s_p in 0.30..0.50, and |J_F| from 0.5
// to 1.5.
SweepConfig recommended_defaults();

UnembedPolicy unembed_policy_from_name(const std::string& name);

struct RunPointStats {
    double p_success = 0.0;
    double broken_fraction = 0.0;
    double t_tot = 0.0;
    double t_s = 0.0;
    long long successes = 0;
    long long total_reads = 0;  // gauges * reads
};

// The inner protocol step: `gauges` programmings of the embedded model (fresh
// coefficient noise and a fresh gauge each), `reads` samples per programming,
// un-gauge, unembed, decode, and count a success only when the read decodes to
// the instance's oracle optimum with zero penalty energy.  Partial gauges
// (threshold 1.0) are used automatically when ep.jf > 1 so chain couplers
// stay ferromagnetic.  Throws when the instance lacks an oracle optimum.
RunPointStats run_point(const ProblemInstance& pi, const EmbeddedProblem& ep,
                        const Schedule& schedule, const AnnealFunctions& functions,
                        Sampler& sampler, int gauges, int reads, UnembedPolicy policy,
                        double ice_sigma_h, double ice_sigma_j, std::uint64_t seed);

struct PointRow {
    int instance_idx = 0;
    int point_idx = 0;
    GridPoint point;
    RunPointStats stats;
};

struct PointSummary {
    int point_idx = 0;
    GridPoint point;
    double median_ts = 0.0;
    double lo_ts = 0.0;
    double hi_ts = 0.0;
    int n_instances = 0;
};

struct SweepOutcome {
    std::vector<GridPoint> points;
    std::vector<PointRow> rows;            // instance-major, then point
    std::vector<PointSummary> summaries;   // one per grid point
    int best_point = -1;                   // argmin median T_S (ties: t_tot, |J_F|)
    std::vector<std::string> instance_names;
    std::vector<std::string> instance_errors;  // "" when the instance ran
};

// Runs the full sweep over pre-loaded instances.  Instances that fail to
// embed (or lack an oracle) are recorded and skipped; if every instance
// fails, throws std::runtime_error.  `sampler_override` substitutes a custom
// (e.g. mock) sampler; it must be safe to call concurrently.
SweepOutcome sweep(const SweepConfig& cfg, const std::vector<ProblemInstance>& instances,
                   Sampler* sampler_override = nullptr);

// Worker count: QAW_WORKERS when set (>= 1), else hardware concurrency.
int worker_count();

}  // namespace qaw
