// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// qaw: the quantum-annealing parameter-setting workbench CLI.
//
//   qaw generate  -- draw seeded problem instances and save them as JSON
//   qaw embed     -- minor-embed an instance onto a hardware graph
//   qaw solve     -- run the gauge-averaged protocol once (one grid point)
//   qaw sweep     -- full parameter sweep from a JSON config
//   qaw report    -- re-render plots / print the table from a finished run

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qaw/bench/report.hpp"
#include "qaw/embed/embed_problem.hpp"
#include "qaw/hardware/topology.hpp"
#include "qaw/model_io.hpp"
#include "qaw/problems/generators.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/rng.hpp"
#include "qaw/solve/solvers.hpp"

namespace {

using namespace qaw;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

ProblemInstance load_instance(const std::string& path) {
    return problem_instance_from_json(load_json(path));
}

HardwareGraph make_topology(const std::string& family, int size) {
    if (family == "chimera") return chimera_graph(size);
    if (family == "pegasus") return pegasus_graph(size);
    throw std::runtime_error("unknown topology: " + family);
}

AnnealFunctions load_functions(const std::string& name) {
    try {
        return builtin_anneal_functions(name);
    } catch (const std::invalid_argument&) {
        std::ifstream in(name);
        if (!in) throw std::runtime_error("not a builtin table and not a file: " + name);
        std::ostringstream buf;
        buf << in.rdbuf();
        return anneal_functions_from_csv(buf.str());
    }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOpts {
    std::string cls;
    int count = 5;
    std::uint64_t seed = 1;
    std::string out_dir = "instances";
    // BD-MST
    int n = 5;
    int delta = 3;
    bool sparse = false;
    int w_max = 10;
    bool plain = false;
    // coloring
    int k = 5;
    int degree = 4;
    // info sharing
    int messages = 2;
    int nodes = 5;
    int horizon_slack = 2;
    bool uniform_weight = false;
};

int run_generate(const GenerateOpts& o) {
    std::string name = o.cls;
    if (name == "coloring") name = "graph_coloring";
    if (name == "infoshare") name = "info_sharing";
    const ProblemClass cls = problem_class_from_name(name);
    std::filesystem::create_directories(o.out_dir);
    for (int i = 0; i < o.count; ++i) {
        const std::uint64_t seed = derive_seed(o.seed, {static_cast<std::uint64_t>(i)});
        ProblemInstance pi;
        std::string stem;
        switch (cls) {
            case ProblemClass::bdmst: {
                BdMstBuildOptions opts;
                opts.preprocess = !o.plain;
                pi = build_bdmst_qubo(random_bdmst_instance(seed, o.n, o.delta, !o.sparse,
                                                            o.w_max),
                                      opts);
                stem = "bdmst_n" + std::to_string(o.n) + "_d" + std::to_string(o.delta);
                break;
            }
            case ProblemClass::graph_coloring:
                pi = build_gc_qubo(random_gc_instance(seed, o.n, o.k, o.degree));
                stem = "coloring_n" + std::to_string(o.n) + "_k" + std::to_string(o.k);
                break;
            case ProblemClass::info_sharing: {
                InfoBuildOptions opts;
                opts.uniform_penalty_weight = o.uniform_weight;
                pi = build_info_qubo(random_info_instance(seed, o.messages, o.nodes,
                                                          o.horizon_slack),
                                     opts);
                stem = "infoshare_m" + std::to_string(o.messages);
                break;
            }
        }
        const std::string path = o.out_dir + "/" + stem + "_" + std::to_string(i) + ".json";
        save_text(path, to_json(pi).dump(2) + "\n");
        std::cout << path << "  vars=" << pi.qubo.n_vars << "  oracle="
                  << (pi.oracle_optimum ? format_double(*pi.oracle_optimum) : "n/a") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// embed
// ---------------------------------------------------------------------------

struct EmbedOpts {
    std::string instance;
    std::string topology = "chimera";
    int size = 4;
    int tries = 10;
    std::uint64_t seed = 1;
    double jf = 1.0;
    std::string out;
};

int run_embed(const EmbedOpts& o) {
    const ProblemInstance pi = load_instance(o.instance);
    const HardwareGraph hw = make_topology(o.topology, o.size);
    const IsingModel logical = qubo_to_ising(pi.qubo);
    const LogicalGraph lg = logical_graph_of(logical);
    const Embedding emb = find_embedding(lg, hw, o.tries, o.seed);
    const auto violations = verify_embedding(emb, lg, hw);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
        return 1;
    }
    const EmbeddedProblem ep = embed_ising(logical, emb, hw, o.jf);
    const EmbeddingDiagnostics diag = diagnostics(ep);
    std::cout << diag.to_json().dump(2) << "\n";
    if (!o.out.empty()) {
        nlohmann::json j{{"topology", o.topology},
                         {"size", o.size},
                         {"embedding", to_json(emb)}};
        save_text(o.out, j.dump(2) + "\n");
        std::cout << "wrote " << o.out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveOpts {
    std::string instance;
    std::string embedding;  // optional precomputed embedding JSON
    std::string solver = "svmc";
    std::string functions = "dw2000q_like";
    std::optional<double> temperature_mK;
    std::string topology = "chimera";
    int size = 4;
    int tries = 10;
    double jf = 1.0;
    double t_a = 1.0;
    double s_p = 0.5;
    double t_p = 0.0;
    int gauges = 100;
    int reads = 500;
    int sweeps_per_us = 1000;
    int sa_sweeps = 1000;
    std::string policy = "majority_vote";
    double ice_h = 0.0;
    double ice_j = 0.0;
    std::uint64_t seed = 1;
    std::string samples_out;
};

int run_solve(const SolveOpts& o) {
    const ProblemInstance pi = load_instance(o.instance);
    const IsingModel logical = qubo_to_ising(pi.qubo);

    if (o.solver == "brute") {
        const BruteForceResult bf = brute_force(logical);
        std::cout << "ground_energy=" << format_double(bf.energy)
                  << "  degenerate=" << bf.ground_states.size() << "\n";
        const Assignment best = to_binary(bf.ground_states.front());
        std::cout << "oracle_optimum="
                  << (pi.oracle_optimum ? format_double(*pi.oracle_optimum) : "n/a")
                  << "  decodes_to_optimum=" << (is_oracle_optimum(best, pi) ? "yes" : "no")
                  << "\n";
        return 0;
    }

    const HardwareGraph hw = make_topology(o.topology, o.size);
    const LogicalGraph lg = logical_graph_of(logical);
    Embedding emb;
    if (o.embedding.empty()) {
        emb = find_embedding(lg, hw, o.tries, o.seed);
    } else {
        emb = embedding_from_json(load_json(o.embedding).at("embedding"));
    }
    const EmbeddedProblem ep = embed_ising(logical, emb, hw, o.jf);

    AnnealFunctions functions = load_functions(o.functions);
    if (o.temperature_mK) functions.temperature_mK = *o.temperature_mK;
    const Schedule schedule = o.t_p > 0.0 ? build_schedule(o.t_a, Pause{o.s_p, o.t_p})
                                          : build_schedule(o.t_a);

    std::unique_ptr<Sampler> sampler;
    if (o.solver == "svmc") {
        sampler = make_svmc_sampler(o.sweeps_per_us);
    } else if (o.solver == "sa") {
        sampler = make_sa_sampler(o.sa_sweeps);
    } else {
        throw std::runtime_error("unknown solver: " + o.solver);
    }

    const RunPointStats stats =
        run_point(pi, ep, schedule, functions, *sampler, o.gauges, o.reads,
                  unembed_policy_from_name(o.policy), o.ice_h, o.ice_j, o.seed);
    std::cout << "p_success=" << format_double(stats.p_success)
              << "  broken_fraction=" << format_double(stats.broken_fraction)
              << "  t_tot_us=" << format_double(stats.t_tot) << "  t_s_us="
              << (std::isinf(stats.t_s) ? std::string("inf") : format_double(stats.t_s))
              << "  successes=" << stats.successes << "/" << stats.total_reads << "\n";

    if (!o.samples_out.empty()) {
        // One ungauged programming, unembedded to logical samples.
        AnnealContext ctx;
        ctx.schedule = &schedule;
        ctx.functions = &functions;
        ctx.jf = o.jf;
        ctx.t_a = o.t_a;
        ctx.s_p = o.s_p;
        ctx.t_p = o.t_p;
        ctx.seed = o.seed;
        const SampleSet physical = sampler->sample(ep.physical, ctx, o.reads);
        const UnembedResult un =
            unembed(physical, ep, unembed_policy_from_name(o.policy), o.seed);
        save_text(o.samples_out, to_json(un.logical).dump(2) + "\n");
        std::cout << "wrote " << o.samples_out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOpts {
    std::string config;
    bool recommended = false;
    std::vector<std::string> instances;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

int run_sweep(const SweepOpts& o) {
    SweepConfig cfg;
    if (!o.config.empty()) {
        cfg = sweep_config_from_json(load_json(o.config));
    } else if (o.recommended) {
        cfg = recommended_defaults();
    } else {
        throw std::runtime_error("sweep needs --config or --recommended");
    }
    if (!o.instances.empty()) cfg.instance_files = o.instances;
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
    if (o.seed) cfg.master_seed = *o.seed;
    if (cfg.instance_files.empty()) throw std::runtime_error("no instance files configured");

    std::vector<ProblemInstance> instances;
    instances.reserve(cfg.instance_files.size());
    for (const auto& path : cfg.instance_files) instances.push_back(load_instance(path));

    const SweepOutcome outcome = sweep(cfg, instances);
    const std::string dir = run_directory(cfg);
    const auto files = emit_report(outcome, cfg, dir);

    const PointSummary& best = outcome.summaries.at(outcome.best_point);
    std::cout << "run_dir=" << dir << "\n";
    for (const auto& f : files) std::cout << "  " << f << "\n";
    std::cout << "best: jf=" << format_double(best.point.jf)
              << " t_a_us=" << format_double(best.point.t_a)
              << " s_p=" << format_double(best.point.s_p)
              << " t_p_us=" << format_double(best.point.t_p) << " median_ts_us="
              << (std::isinf(best.median_ts) ? std::string("inf")
                                             : format_double(best.median_ts))
              << "\n";
    for (size_t i = 0; i < outcome.instance_errors.size(); ++i) {
        if (!outcome.instance_errors[i].empty()) {
            std::cerr << "instance failed: " << outcome.instance_names[i] << ": "
                      << outcome.instance_errors[i] << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

struct ReportOpts {
    std::string run_dir;
    bool regen_plots = false;
};

int run_report(const ReportOpts& o) {
    const nlohmann::json summary = load_json(o.run_dir + "/summary.json");
    std::cout << "config_hash=" << summary.at("config_hash").get<std::string>() << "\n";
    std::cout << "point  jf     t_a_us s_p    t_p_us median_ts_us [lo, hi]\n";
    for (const auto& p : summary.at("points")) {
        std::cout << p.at("point").get<int>() << "  " << p.at("jf").get<double>() << "  "
                  << p.at("t_a_us").get<double>() << "  " << p.at("s_p").get<double>() << "  "
                  << p.at("t_p_us").get<double>() << "  "
                  << p.at("median_ts_us").get<std::string>() << " ["
                  << p.at("lo_ts_us").get<std::string>() << ", "
                  << p.at("hi_ts_us").get<std::string>() << "]\n";
    }
    const auto& best = summary.at("best_point");
    std::cout << "best: point=" << best.at("point").get<int>()
              << " jf=" << best.at("jf").get<double>() << " s_p=" << best.at("s_p").get<double>()
              << " t_p_us=" << best.at("t_p_us").get<double>()
              << " median_ts_us=" << best.at("median_ts_us").get<std::string>() << "\n";

    if (o.regen_plots) {
        // Rebuild the per-axis plot files from the stored summaries.
        const char* names[4] = {"jf", "t_a", "s_p", "t_p"};
        const char* keys[4] = {"jf", "t_a_us", "s_p", "t_p_us"};
        for (int axis = 0; axis < 4; ++axis) {
            std::map<double, nlohmann::json> line;
            for (const auto& p : summary.at("points")) {
                bool match = true;
                for (int other = 0; other < 4; ++other) {
                    if (other != axis && p.at(keys[other]).get<double>() !=
                                             best.at(keys[other]).get<double>()) {
                        match = false;
                        break;
                    }
                }
                if (match) line[p.at(keys[axis]).get<double>()] = p;
            }
            if (line.size() < 2) continue;
            std::string plot = std::string(names[axis]) + ",median_ts_us,lo_ts_us,hi_ts_us\n";
            for (const auto& [x, p] : line) {
                plot += format_double(x) + ',' + p.at("median_ts_us").get<std::string>() + ',' +
                        p.at("lo_ts_us").get<std::string>() + ',' +
                        p.at("hi_ts_us").get<std::string>() + '\n';
            }
            const std::string path = o.run_dir + "/plot_" + names[axis] + ".csv";
            save_text(path, plot);
            std::cout << "wrote " << path << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qaw: quantum-annealing parameter-setting workbench"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* cgen = app.add_subcommand("generate", "Draw seeded problem instances");
    cgen->add_option("--class", gen.cls, "bdmst | graph_coloring | info_sharing")->required();
    cgen->add_option("--count", gen.count, "instances to draw");
    cgen->add_option("--seed", gen.seed, "master seed");
    cgen->add_option("--out-dir", gen.out_dir, "output directory");
    cgen->add_option("--n", gen.n, "vertices (bdmst / coloring)");
    cgen->add_option("--delta", gen.delta, "degree bound (bdmst)");
    cgen->add_flag("--sparse", gen.sparse, "random connected graph instead of complete");
    cgen->add_option("--w-max", gen.w_max, "max edge weight (bdmst)");
    cgen->add_flag("--plain", gen.plain, "disable level preprocessing (bdmst)");
    cgen->add_option("--k", gen.k, "colors (coloring)");
    cgen->add_option("--degree", gen.degree, "graph degree (coloring)");
    cgen->add_option("--messages", gen.messages, "message count (infoshare)");
    cgen->add_option("--nodes", gen.nodes, "network nodes (infoshare)");
    cgen->add_option("--horizon-slack", gen.horizon_slack, "extra horizon steps (infoshare)");
    cgen->add_flag("--uniform-weight", gen.uniform_weight,
                   "single uniform penalty weight (infoshare)");

    EmbedOpts emb;
    auto* cemb = app.add_subcommand("embed", "Minor-embed an instance");
    cemb->add_option("--instance", emb.instance, "instance JSON")->required();
    cemb->add_option("--topology", emb.topology, "chimera | pegasus");
    cemb->add_option("--size", emb.size, "topology size parameter");
    cemb->add_option("--tries", emb.tries, "independent embedding attempts");
    cemb->add_option("--seed", emb.seed, "embedding seed");
    cemb->add_option("--jf", emb.jf, "|J_F| for the diagnostics split");
    cemb->add_option("--out", emb.out, "write embedding JSON here");

    SolveOpts sol;
    auto* csol = app.add_subcommand("solve", "Run the protocol at one grid point");
    csol->add_option("--instance", sol.instance, "instance JSON")->required();
    csol->add_option("--embedding", sol.embedding, "precomputed embedding JSON");
    csol->add_option("--solver", sol.solver, "svmc | sa | brute");
    csol->add_option("--functions", sol.functions, "builtin table name or CSV path");
    double temp_opt = -1;
    csol->add_option("--temperature-mk", temp_opt, "override temperature (mK)");
    csol->add_option("--topology", sol.topology, "chimera | pegasus");
    csol->add_option("--size", sol.size, "topology size parameter");
    csol->add_option("--tries", sol.tries, "embedding attempts");
    csol->add_option("--jf", sol.jf, "|J_F| chain coupling");
    csol->add_option("--t-a", sol.t_a, "anneal time (us)");
    csol->add_option("--s-p", sol.s_p, "pause location");
    csol->add_option("--t-p", sol.t_p, "pause duration (us)");
    csol->add_option("--gauges", sol.gauges, "programmings");
    csol->add_option("--reads", sol.reads, "anneals per programming");
    csol->add_option("--sweeps-per-us", sol.sweeps_per_us, "svmc sweep rate");
    csol->add_option("--sa-sweeps", sol.sa_sweeps, "sa sweeps");
    csol->add_option("--policy", sol.policy, "discard | majority_vote");
    csol->add_option("--ice-h", sol.ice_h, "field noise sigma");
    csol->add_option("--ice-j", sol.ice_j, "coupling noise sigma");
    csol->add_option("--seed", sol.seed, "run seed");
    csol->add_option("--samples-out", sol.samples_out, "dump logical samples JSON");

    SweepOpts swp;
    auto* cswp = app.add_subcommand("sweep", "Full parameter sweep");
    cswp->add_option("--config", swp.config, "sweep config JSON");
    cswp->add_flag("--recommended", swp.recommended, "use the recommended profile");
    cswp->add_option("--instances", swp.instances, "instance files (overrides config)");
    cswp->add_option("--out-dir", swp.out_dir, "override output root");
    std::uint64_t seed_opt = 0;
    auto* seed_flag = cswp->add_option("--seed", seed_opt, "override master seed");

    ReportOpts rep;
    auto* crep = app.add_subcommand("report", "Inspect a finished run");
    crep->add_option("--run-dir", rep.run_dir, "run directory")->required();
    crep->add_flag("--regen-plots", rep.regen_plots, "rewrite plot CSVs from summary.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cgen->parsed()) return run_generate(gen);
        if (cemb->parsed()) return run_embed(emb);
        if (csol->parsed()) {
            if (temp_opt >= 0) sol.temperature_mK = temp_opt;
            return run_solve(sol);
        }
        if (cswp->parsed()) {
            if (seed_flag->count() > 0) swp.seed = seed_opt;
            return run_sweep(swp);
        }
        if (crep->parsed()) return run_report(rep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
