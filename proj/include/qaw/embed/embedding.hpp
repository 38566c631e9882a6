// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Minor embeddings: logical variable -> vertex model (a connected set of
// physical qubits), plus the randomized heuristic that finds them.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "qaw/hardware/topology.hpp"
#include "qaw/model.hpp"

namespace qaw {

struct LogicalGraph {
    int n = 0;
    std::vector<PairKey> edges;  // i < j, unique
};

// The interaction graph of an Ising model (edges where J != 0).
LogicalGraph logical_graph_of(const IsingModel& m);

struct Embedding {
    std::vector<std::vector<int>> models;  // logical var -> sorted physical qubit ids

    int n_logical() const { return static_cast<int>(models.size()); }
    int total_qubits() const;
    std::vector<int> all_qubits() const;  // sorted union
};

nlohmann::json to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

// Checks the three invariants: pairwise-disjoint models, each model connected
// in the hardware graph (and alive), and at least one physical coupler
// joining the models of every logical edge.  Returns human-readable
// violations; empty means valid.
std::vector<std::string> verify_embedding(const Embedding& e, const LogicalGraph& logical,
                                          const HardwareGraph& hw);

// Randomized vertex-model growth: processes logical vertices by descending
// degree (ties shuffled), roots each model at the free qubit minimizing the
// summed BFS distance to the already-placed neighbor models, and claims the
// union of the connecting paths.  Rip-up/re-place passes then shrink models.
// Runs `tries` independent attempts with seeds derived from `seed` and keeps
// the embedding with the fewest physical qubits (ties: lowest try index).
// Throws std::runtime_error when no try succeeds.
Embedding find_embedding(const LogicalGraph& logical, const HardwareGraph& hw, int tries,
                         std::uint64_t seed, int improvement_passes = 3);

}  // namespace qaw
