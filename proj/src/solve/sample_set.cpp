// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/solve/sample_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qaw {

int SampleSet::argmin() const {
    if (samples.empty()) return -1;
    int best = 0;
    for (int i = 1; i < static_cast<int>(energies.size()); ++i) {
        if (energies[i] < energies[best]) best = i;
    }
    return best;
}

nlohmann::json to_json(const SampleSet& s) {
    if (s.samples.size() != s.energies.size()) {
        throw std::invalid_argument("sample/energy count mismatch");
    }
    // Aggregate identical assignments; order by (energy, values).
    std::map<std::vector<int8_t>, std::pair<double, int>> agg;
    for (size_t i = 0; i < s.samples.size(); ++i) {
        if (s.samples[i].mode != s.mode) {
            throw std::invalid_argument("sample mode differs from set mode");
        }
        auto [it, fresh] = agg.emplace(s.samples[i].values, std::make_pair(s.energies[i], 0));
        if (!fresh && it->second.first != s.energies[i]) {
            throw std::invalid_argument("identical samples with different energies");
        }
        ++it->second.second;
    }
    std::vector<std::pair<std::vector<int8_t>, std::pair<double, int>>> rows(agg.begin(),
                                                                             agg.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first < b.second.first;
        return a.first < b.first;
    });
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [values, info] : rows) {
        nlohmann::json rec;
        rec["sample"] = std::vector<int>(values.begin(), values.end());
        rec["energy"] = info.first;
        rec["count"] = info.second;
        records.push_back(std::move(rec));
    }
    return {{"mode", s.mode == VarMode::spin ? "spin" : "binary"},
            {"n_vars", s.n_vars},
            {"n_reads", s.samples.size()},
            {"solver", s.solver},
            {"seed", s.seed},
            {"model_time_us", s.model_time_us},
            {"records", records}};
}

SampleSet sample_set_from_json(const nlohmann::json& j) {
    SampleSet s;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "spin") {
        s.mode = VarMode::spin;
    } else if (mode == "binary") {
        s.mode = VarMode::binary;
    } else {
        throw std::invalid_argument("unknown sample mode: " + mode);
    }
    s.n_vars = j.at("n_vars").get<int>();
    if (j.contains("solver")) s.solver = j.at("solver").get<std::string>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("model_time_us")) s.model_time_us = j.at("model_time_us").get<double>();
    for (const auto& rec : j.at("records")) {
        const auto raw = rec.at("sample").get<std::vector<int>>();
        if (static_cast<int>(raw.size()) != s.n_vars) {
            throw std::invalid_argument("sample width does not match n_vars");
        }
        std::vector<int8_t> values;
        values.reserve(raw.size());
        for (int v : raw) {
            const bool ok = s.mode == VarMode::spin ? (v == -1 || v == 1) : (v == 0 || v == 1);
            if (!ok) throw std::invalid_argument("sample value out of domain");
            values.push_back(static_cast<int8_t>(v));
        }
        Assignment a{s.mode, std::move(values)};
        const double e = rec.at("energy").get<double>();
        const int count = rec.at("count").get<int>();
        if (count <= 0) throw std::invalid_argument("sample count must be positive");
        for (int c = 0; c < count; ++c) s.push(a, e);
    }
    if (j.contains("n_reads") && j.at("n_reads").get<size_t>() != s.samples.size()) {
        throw std::invalid_argument("n_reads does not match record counts");
    }
    return s;
}

}  // namespace qaw
