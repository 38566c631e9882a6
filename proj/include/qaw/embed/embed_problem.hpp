// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Coefficient splitting onto the hardware, ferromagnetic chain couplers,
// embedding diagnostics, and unembedding of physical samples.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>

#include "qaw/embed/embedding.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/solve/sample_set.hpp"

namespace qaw {

struct EmbeddedProblem {
    IsingModel physical;            // over compact indices 0..n-1
    std::vector<int> qubit_ids;     // compact index -> hardware qubit id
    Embedding embedding;            // original, in hardware ids
    std::vector<std::vector<int>> model_compact;  // logical var -> compact indices
    IsingModel logical;             // the logical Ising the split came from
    double jf = 0.0;                // |J_F| magnitude applied to chain couplers

    // Provenance per physical coupler: {i, j} = logical edge, {v, -1} = chain
    // coupler inside the model of logical variable v.
    std::map<PairKey, PairKey> coupler_source;
};

// Split a logical Ising onto the hardware: h_i spread equally over the
// model's qubits, J_ij spread equally over all available couplers between the
// two models, and every coupler internal to a model set to -|jf|.
EmbeddedProblem embed_ising(const IsingModel& logical, const Embedding& e,
                            const HardwareGraph& hw, double jf);

// Convenience wrapper: converts the instance QUBO to Ising first.
EmbeddedProblem embed_problem(const ProblemInstance& pi, const Embedding& e,
                              const HardwareGraph& hw, double jf);

struct EmbeddingDiagnostics {
    std::optional<double> r_j;      // max|J| / min|J| over problem couplers (chains excluded)
    std::optional<double> r_h;      // max|h| / min|h| over nonzero fields
    int distinct_j = 0;             // distinct |J| after rounding (chains excluded)
    int distinct_h = 0;
    double model_size_mean = 0.0;
    double model_size_median = 0.0;
    int model_size_max = 0;
    double avg_logical_degree = 0.0;
    int physical_qubits = 0;
    bool precision_warning = false;  // set when r_j or r_h exceeds the budget

    nlohmann::json to_json() const;
};

EmbeddingDiagnostics diagnostics(const EmbeddedProblem& ep, double granularity = 1e-9);

enum class UnembedPolicy { discard, majority_vote };

struct UnembedResult {
    SampleSet logical;        // spin samples over logical variables
    double broken_fraction = 0.0;  // physical samples containing >= 1 broken model
};

// A vertex model is broken when its qubits disagree.  discard drops such
// samples; majority_vote takes the majority spin per model with a
// seed-deterministic coin for exact ties.  Logical energies are recomputed
// against ep.logical.
UnembedResult unembed(const SampleSet& physical, const EmbeddedProblem& ep, UnembedPolicy policy,
                      std::uint64_t seed);

}  // namespace qaw
