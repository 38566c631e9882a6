// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// A SampleSet is the output of every solver: one assignment per read, in read
// order, with energies aligned.  The JSON form aggregates identical
// assignments (sorted by energy, then lexicographically) with counts; loading
// it back expands the aggregate in that canonical order.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "qaw/model.hpp"

namespace qaw {

struct SampleSet {
    VarMode mode = VarMode::spin;
    int n_vars = 0;
    std::vector<Assignment> samples;
    std::vector<double> energies;
    // Provenance metadata (carried through JSON, ignored by comparisons).
    std::string solver;
    std::uint64_t seed = 0;
    double model_time_us = 0.0;  // device-model wall time: reads * t_total

    size_t size() const { return samples.size(); }
    void push(Assignment a, double e) {
        samples.push_back(std::move(a));
        energies.push_back(e);
    }
    // Index of a minimum-energy sample (first among equals); -1 when empty.
    int argmin() const;
};

nlohmann::json to_json(const SampleSet& s);
SampleSet sample_set_from_json(const nlohmann::json& j);

}  // namespace qaw
