// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/bench/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "qaw/model_io.hpp"

namespace qaw {

namespace {

std::string fmt(double v) { return std::isinf(v) ? std::string("inf") : format_double(v); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Axis accessors for the plot files.
double axis_value(const GridPoint& pt, int axis) {
    switch (axis) {
        case 0: return pt.jf;
        case 1: return pt.t_a;
        case 2: return pt.s_p;
        default: return pt.t_p;
    }
}

const char* axis_name(int axis) {
    switch (axis) {
        case 0: return "jf";
        case 1: return "t_a";
        case 2: return "s_p";
        default: return "t_p";
    }
}

}  // namespace

std::string run_directory(const SweepConfig& cfg) {
    return cfg.out_dir + "/run_" + config_hash(cfg);
}

std::vector<std::string> emit_report(const SweepOutcome& outcome, const SweepConfig& cfg,
                                     const std::string& dir) {
    if (outcome.rows.empty() || outcome.summaries.empty()) {
        throw std::invalid_argument("refusing to emit a report for an empty sweep");
    }
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;

    // results.csv: one row per surviving (instance, grid point).
    std::string csv =
        "instance,instance_name,point,jf,t_a_us,s_p,t_p_us,t_tot_us,"
        "p_success,broken_fraction,successes,reads,t_s_us\n";
    for (const PointRow& row : outcome.rows) {
        csv += std::to_string(row.instance_idx) + ',' +
               outcome.instance_names[row.instance_idx] + ',' + std::to_string(row.point_idx) +
               ',' + fmt(row.point.jf) + ',' + fmt(row.point.t_a) + ',' + fmt(row.point.s_p) +
               ',' + fmt(row.point.t_p) + ',' + fmt(row.point.t_tot()) + ',' +
               fmt(row.stats.p_success) + ',' + fmt(row.stats.broken_fraction) + ',' +
               std::to_string(row.stats.successes) + ',' + std::to_string(row.stats.total_reads) +
               ',' + fmt(row.stats.t_s) + '\n';
    }
    write_file(dir + "/results.csv", csv);
    written.push_back("results.csv");

    // summary.json: config + provenance + per-point aggregates + best point.
    nlohmann::json summary;
    summary["config"] = to_json(cfg);
    summary["config_hash"] = config_hash(cfg);
    summary["master_seed"] = cfg.master_seed;
    nlohmann::json points = nlohmann::json::array();
    for (const PointSummary& ps : outcome.summaries) {
        points.push_back({{"point", ps.point_idx},
                          {"jf", ps.point.jf},
                          {"t_a_us", ps.point.t_a},
                          {"s_p", ps.point.s_p},
                          {"t_p_us", ps.point.t_p},
                          {"t_tot_us", ps.point.t_tot()},
                          {"median_ts_us", fmt(ps.median_ts)},
                          {"lo_ts_us", fmt(ps.lo_ts)},
                          {"hi_ts_us", fmt(ps.hi_ts)},
                          {"n_instances", ps.n_instances}});
    }
    summary["points"] = points;
    const PointSummary& best = outcome.summaries.at(outcome.best_point);
    summary["best_point"] = {{"point", best.point_idx},
                             {"jf", best.point.jf},
                             {"t_a_us", best.point.t_a},
                             {"s_p", best.point.s_p},
                             {"t_p_us", best.point.t_p},
                             {"median_ts_us", fmt(best.median_ts)}};
    nlohmann::json inst = nlohmann::json::array();
    for (size_t i = 0; i < outcome.instance_names.size(); ++i) {
        inst.push_back({{"name", outcome.instance_names[i]},
                        {"error", outcome.instance_errors[i]}});
    }
    summary["instances"] = inst;
    write_file(dir + "/summary.json", summary.dump(2) + "\n");
    written.push_back("summary.json");

    // Per-axis plot data at the best point's remaining coordinates.
    for (int axis = 0; axis < 4; ++axis) {
        std::map<double, const PointSummary*> line;
        for (const PointSummary& ps : outcome.summaries) {
            bool match = true;
            for (int other = 0; other < 4; ++other) {
                if (other != axis &&
                    axis_value(ps.point, other) != axis_value(best.point, other)) {
                    match = false;
                    break;
                }
            }
            if (match) line[axis_value(ps.point, axis)] = &ps;
        }
        if (line.size() < 2) continue;  // axis not actually swept
        std::string plot = std::string(axis_name(axis)) + ",median_ts_us,lo_ts_us,hi_ts_us\n";
        for (const auto& [x, ps] : line) {
            plot += fmt(x) + ',' + fmt(ps->median_ts) + ',' + fmt(ps->lo_ts) + ',' +
                    fmt(ps->hi_ts) + '\n';
        }
        const std::string name = std::string("plot_") + axis_name(axis) + ".csv";
        write_file(dir + "/" + name, plot);
        written.push_back(name);
    }
    return written;
}

}  // namespace qaw
