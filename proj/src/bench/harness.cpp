// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/bench/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qaw/bench/stats.hpp"
#include "qaw/hardware/topology.hpp"
#include "qaw/rng.hpp"

namespace qaw {

namespace {

constexpr std::uint64_t kEmbedTag = 0x656d626564ULL;  // "embed"
constexpr std::uint64_t kBootTag = 0x626f6f74ULL;     // "boot"

void set_if(const nlohmann::json& j, const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
}

}  // namespace

nlohmann::json to_json(const SweepConfig& cfg) {
    nlohmann::json j{{"instance_files", cfg.instance_files},
                     {"solver", cfg.solver},
                     {"sweeps_per_us", cfg.sweeps_per_us},
                     {"sa_sweeps", cfg.sa_sweeps},
                     {"anneal_functions", cfg.anneal_functions},
                     {"topology", cfg.topology},
                     {"topology_size", cfg.topology_size},
                     {"embed_tries", cfg.embed_tries},
                     {"jf_grid", cfg.jf_grid},
                     {"t_a_grid", cfg.t_a_grid},
                     {"s_p_grid", cfg.s_p_grid},
                     {"t_p_grid", cfg.t_p_grid},
                     {"gauges", cfg.gauges},
                     {"reads", cfg.reads},
                     {"unembed", cfg.unembed},
                     {"ice_sigma_h", cfg.ice_sigma_h},
                     {"ice_sigma_j", cfg.ice_sigma_j},
                     {"resamples", cfg.resamples},
                     {"band_lo", cfg.band_lo},
                     {"band_hi", cfg.band_hi},
                     {"master_seed", cfg.master_seed},
                     {"out_dir", cfg.out_dir}};
    if (cfg.temperature_mK) j["temperature_mK"] = *cfg.temperature_mK;
    return j;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known{
        "instance_files", "solver",      "sweeps_per_us", "sa_sweeps",   "anneal_functions",
        "temperature_mK", "topology",    "topology_size", "embed_tries", "jf_grid",
        "t_a_grid",       "s_p_grid",    "t_p_grid",      "gauges",      "reads",
        "unembed",        "ice_sigma_h", "ice_sigma_j",   "resamples",   "band_lo",
        "band_hi",        "master_seed", "out_dir"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw std::invalid_argument("unknown config key: " + item.key());
        }
    }
    SweepConfig cfg;
    set_if(j, "instance_files", cfg.instance_files);
    set_if(j, "solver", cfg.solver);
    set_if(j, "sweeps_per_us", cfg.sweeps_per_us);
    set_if(j, "sa_sweeps", cfg.sa_sweeps);
    set_if(j, "anneal_functions", cfg.anneal_functions);
    if (j.contains("temperature_mK") && !j.at("temperature_mK").is_null()) {
        cfg.temperature_mK = j.at("temperature_mK").get<double>();
    }
    set_if(j, "topology", cfg.topology);
    set_if(j, "topology_size", cfg.topology_size);
    set_if(j, "embed_tries", cfg.embed_tries);
    set_if(j, "jf_grid", cfg.jf_grid);
    set_if(j, "t_a_grid", cfg.t_a_grid);
    set_if(j, "s_p_grid", cfg.s_p_grid);
    set_if(j, "t_p_grid", cfg.t_p_grid);
    set_if(j, "gauges", cfg.gauges);
    set_if(j, "reads", cfg.reads);
    set_if(j, "unembed", cfg.unembed);
    set_if(j, "ice_sigma_h", cfg.ice_sigma_h);
    set_if(j, "ice_sigma_j", cfg.ice_sigma_j);
    set_if(j, "resamples", cfg.resamples);
    set_if(j, "band_lo", cfg.band_lo);
    set_if(j, "band_hi", cfg.band_hi);
    set_if(j, "master_seed", cfg.master_seed);
    set_if(j, "out_dir", cfg.out_dir);
    return cfg;
}

std::string config_hash(const SweepConfig& cfg) {
    const std::string dump = to_json(cfg).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

SweepConfig recommended_defaults() {
    SweepConfig cfg;
    cfg.jf_grid = {0.5, 0.75, 1.0, 1.25, 1.5};
    cfg.t_a_grid = {1.0};
    cfg.s_p_grid = {0.30, 0.35, 0.40, 0.45, 0.50};
    cfg.t_p_grid = {0.2};
    return cfg;
}

UnembedPolicy unembed_policy_from_name(const std::string& name) {
    if (name == "discard") return UnembedPolicy::discard;
    if (name == "majority_vote") return UnembedPolicy::majority_vote;
    throw std::invalid_argument("unknown unembed policy: " + name);
}

RunPointStats run_point(const ProblemInstance& pi, const EmbeddedProblem& ep,
                        const Schedule& schedule, const AnnealFunctions& functions,
                        Sampler& sampler, int gauges, int reads, UnembedPolicy policy,
                        double ice_sigma_h, double ice_sigma_j, std::uint64_t seed) {
    if (!pi.oracle_optimum) {
        throw std::invalid_argument("instance has no oracle optimum; success is undefined");
    }
    if (gauges < 1 || reads < 1) throw std::invalid_argument("gauges and reads must be >= 1");
    const int nq = ep.physical.n_spins;

    RunPointStats out;
    out.t_tot = schedule.t_tot();
    out.total_reads = static_cast<long long>(gauges) * reads;

    AnnealContext ctx;
    ctx.schedule = &schedule;
    ctx.functions = &functions;
    ctx.jf = ep.jf;
    ctx.t_a = schedule.t_a;
    ctx.t_p = schedule.t_p;
    ctx.s_p = schedule.s_p.value_or(0.0);
    const bool partial = ep.jf > 1.0;
    const bool with_ice = ice_sigma_h > 0.0 || ice_sigma_j > 0.0;

    double broken_sum = 0.0;
    for (int g = 0; g < gauges; ++g) {
        const std::uint64_t gseed = derive_seed(seed, {static_cast<std::uint64_t>(g)});
        // Each programming cycle gets its own coefficient-noise realization.
        IsingModel programmed = ep.physical;
        if (with_ice) {
            programmed = ice_perturb(ep.physical, ice_sigma_h, ice_sigma_j, derive_seed(gseed, 3));
        }
        GaugeVector raw;
        raw.signs.resize(nq);
        Rng grng(derive_seed(gseed, 0));
        for (auto& sgn : raw.signs) sgn = static_cast<int8_t>(grng.sign());
        const GaugeVector eff = effective_gauge(
            programmed, raw, partial ? std::optional<double>(1.0) : std::nullopt);
        const IsingModel gauged = apply_gauge(programmed, eff, std::nullopt);

        ctx.gauge = &eff;
        ctx.seed = derive_seed(gseed, 1);
        const SampleSet gauged_set = sampler.sample(gauged, ctx, reads);
        if (static_cast<int>(gauged_set.size()) != reads || gauged_set.n_vars != nq) {
            throw std::runtime_error("sampler returned a malformed sample set");
        }

        // Un-gauge; gauge transforms preserve energies exactly.
        SampleSet physical;
        physical.mode = VarMode::spin;
        physical.n_vars = nq;
        for (size_t k = 0; k < gauged_set.size(); ++k) {
            physical.push(apply_gauge(gauged_set.samples[k], eff), gauged_set.energies[k]);
        }

        const UnembedResult un = unembed(physical, ep, policy, derive_seed(gseed, 2));
        broken_sum += un.broken_fraction;
        for (const auto& logical_sample : un.logical.samples) {
            if (is_oracle_optimum(to_binary(logical_sample), pi)) ++out.successes;
        }
    }
    out.p_success = static_cast<double>(out.successes) / static_cast<double>(out.total_reads);
    out.broken_fraction = broken_sum / gauges;
    out.t_s = time_to_solution(out.p_success, out.t_tot);
    return out;
}

int worker_count() {
    if (const char* env = std::getenv("QAW_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

SweepOutcome sweep(const SweepConfig& cfg, const std::vector<ProblemInstance>& instances,
                   Sampler* sampler_override) {
    if (instances.empty()) throw std::invalid_argument("no instances to sweep");
    if (cfg.jf_grid.empty() || cfg.t_a_grid.empty() || cfg.s_p_grid.empty() ||
        cfg.t_p_grid.empty()) {
        throw std::invalid_argument("sweep grids must be non-empty");
    }
    if (cfg.gauges < 1 || cfg.reads < 1) {
        throw std::invalid_argument("gauges and reads must be >= 1");
    }

    HardwareGraph hw;
    if (cfg.topology == "chimera") {
        hw = chimera_graph(cfg.topology_size);
    } else if (cfg.topology == "pegasus") {
        hw = pegasus_graph(cfg.topology_size);
    } else {
        throw std::invalid_argument("unknown topology: " + cfg.topology);
    }

    AnnealFunctions functions;
    try {
        functions = builtin_anneal_functions(cfg.anneal_functions);
    } catch (const std::invalid_argument&) {
        std::ifstream in(cfg.anneal_functions);
        if (!in) {
            throw std::invalid_argument("anneal functions: not a builtin table and not a file: " +
                                        cfg.anneal_functions);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        functions = anneal_functions_from_csv(buf.str());
    }
    if (cfg.temperature_mK) functions.temperature_mK = *cfg.temperature_mK;

    const UnembedPolicy policy = unembed_policy_from_name(cfg.unembed);

    std::unique_ptr<Sampler> owned;
    Sampler* sampler = sampler_override;
    if (sampler == nullptr) {
        if (cfg.solver == "svmc") {
            owned = make_svmc_sampler(cfg.sweeps_per_us);
        } else if (cfg.solver == "sa") {
            owned = make_sa_sampler(cfg.sa_sweeps);
        } else {
            throw std::invalid_argument("unknown solver: " + cfg.solver);
        }
        sampler = owned.get();
    }

    SweepOutcome outcome;
    for (double jf : cfg.jf_grid) {
        for (double t_a : cfg.t_a_grid) {
            for (double s_p : cfg.s_p_grid) {
                for (double t_p : cfg.t_p_grid) {
                    outcome.points.push_back({jf, t_a, s_p, t_p});
                }
            }
        }
    }
    const int n_points = static_cast<int>(outcome.points.size());

    // Schedules are config-level: an invalid grid is the caller's error, so
    // build them all before touching any instance.
    std::vector<Schedule> schedules;
    schedules.reserve(n_points);
    for (const GridPoint& pt : outcome.points) {
        schedules.push_back(pt.t_p > 0.0
                                ? build_schedule(pt.t_a, Pause{pt.s_p, pt.t_p})
                                : build_schedule(pt.t_a));
    }

    // Per-instance preparation: logical Ising, embedding, per-|J_F| split.
    const int n_instances = static_cast<int>(instances.size());
    struct Prepared {
        bool ok = false;
        std::map<double, EmbeddedProblem> by_jf;
    };
    std::vector<Prepared> prepared(n_instances);
    outcome.instance_errors.assign(n_instances, "");
    outcome.instance_names.resize(n_instances);
    for (int i = 0; i < n_instances; ++i) {
        outcome.instance_names[i] =
            i < static_cast<int>(cfg.instance_files.size())
                ? cfg.instance_files[i]
                : problem_class_name(instances[i].cls) + "#" + std::to_string(i);
        if (!instances[i].oracle_optimum) {
            outcome.instance_errors[i] = "no oracle optimum";
            continue;
        }
        try {
            const IsingModel logical = qubo_to_ising(instances[i].qubo);
            const LogicalGraph lg = logical_graph_of(logical);
            const Embedding emb = find_embedding(
                lg, hw, cfg.embed_tries,
                derive_seed(cfg.master_seed, {kEmbedTag, static_cast<std::uint64_t>(i)}));
            for (double jf : cfg.jf_grid) {
                prepared[i].by_jf.emplace(jf, embed_ising(logical, emb, hw, jf));
            }
            prepared[i].ok = true;
        } catch (const std::exception& e) {
            outcome.instance_errors[i] = e.what();
        }
    }

    struct Task {
        int instance = 0;
        int point = 0;
    };
    std::vector<Task> tasks;
    for (int i = 0; i < n_instances; ++i) {
        if (!prepared[i].ok) continue;
        for (int p = 0; p < n_points; ++p) tasks.push_back({i, p});
    }
    if (tasks.empty()) {
        std::string detail;
        for (int i = 0; i < n_instances; ++i) {
            detail += "\n  " + outcome.instance_names[i] + ": " + outcome.instance_errors[i];
        }
        throw std::runtime_error("sweep failed: no instance could run" + detail);
    }

    std::vector<PointRow> rows(tasks.size());
    std::vector<std::string> task_errors(tasks.size());
    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto [i, p] = tasks[t];
            PointRow row;
            row.instance_idx = i;
            row.point_idx = p;
            row.point = outcome.points[p];
            try {
                row.stats = run_point(
                    instances[i], prepared[i].by_jf.at(row.point.jf), schedules[p], functions,
                    *sampler, cfg.gauges, cfg.reads, policy, cfg.ice_sigma_h, cfg.ice_sigma_j,
                    derive_seed(cfg.master_seed,
                                {static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(p)}));
            } catch (const std::exception& e) {
                task_errors[t] = e.what();
            }
            rows[t] = std::move(row);
        }
    };
    const int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // A failure at any point invalidates that instance's ensemble membership.
    std::set<int> failed;
    for (size_t t = 0; t < tasks.size(); ++t) {
        if (!task_errors[t].empty()) {
            failed.insert(tasks[t].instance);
            if (outcome.instance_errors[tasks[t].instance].empty()) {
                outcome.instance_errors[tasks[t].instance] = task_errors[t];
            }
        }
    }
    for (size_t t = 0; t < tasks.size(); ++t) {
        if (!failed.count(tasks[t].instance)) outcome.rows.push_back(std::move(rows[t]));
    }
    if (outcome.rows.empty()) {
        throw std::runtime_error("sweep failed: every instance errored while running");
    }

    // Aggregate the instance ensemble per grid point.
    for (int p = 0; p < n_points; ++p) {
        std::vector<double> ts;
        for (const PointRow& row : outcome.rows) {
            if (row.point_idx == p) ts.push_back(row.stats.t_s);
        }
        const BootstrapSummary bs = bootstrap_median(
            ts, cfg.resamples, cfg.band_lo, cfg.band_hi,
            derive_seed(cfg.master_seed, {kBootTag, static_cast<std::uint64_t>(p)}));
        PointSummary summary;
        summary.point_idx = p;
        summary.point = outcome.points[p];
        summary.median_ts = bs.median;
        summary.lo_ts = bs.lo;
        summary.hi_ts = bs.hi;
        summary.n_instances = static_cast<int>(ts.size());
        outcome.summaries.push_back(summary);
    }

    int best = 0;
    for (int p = 1; p < n_points; ++p) {
        const PointSummary& a = outcome.summaries[p];
        const PointSummary& b = outcome.summaries[best];
        const bool better =
            a.median_ts < b.median_ts ||
            (a.median_ts == b.median_ts &&
             (a.point.t_tot() < b.point.t_tot() ||
              (a.point.t_tot() == b.point.t_tot() && a.point.jf < b.point.jf)));
        if (better) best = p;
    }
    outcome.best_point = best;
    return outcome;
}

}  // namespace qaw
