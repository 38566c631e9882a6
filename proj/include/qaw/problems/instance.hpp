// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// ProblemInstance bundles a source instance with its generated QUBO, the
// variable registry, the penalty weights that were applied, the exact oracle
// value and the decode tables.  Builders are deterministic: serializing an
// instance and rebuilding from JSON reproduces the identical QUBO.

#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "qaw/model.hpp"
#include "qaw/problems/types.hpp"
#include "qaw/registry.hpp"

namespace qaw {

enum class ProblemClass { bdmst, graph_coloring, info_sharing };

std::string problem_class_name(ProblemClass cls);
ProblemClass problem_class_from_name(const std::string& name);

struct ProblemInstance {
    ProblemClass cls = ProblemClass::bdmst;
    std::variant<BdMstInstance, GcInstance, InfoInstance> source;
    BdMstBuildOptions bdmst_options;
    InfoBuildOptions info_options;

    QuboModel qubo;
    VariableRegistry registry;
    std::map<std::string, double> penalty_weights;
    std::optional<double> oracle_optimum;  // optimal objective value, when computed

    std::variant<BdMstDecoderInfo, GcDecoderInfo, InfoDecoderInfo> decoder;

    const BdMstInstance& bdmst() const { return std::get<BdMstInstance>(source); }
    const GcInstance& gc() const { return std::get<GcInstance>(source); }
    const InfoInstance& info() const { return std::get<InfoInstance>(source); }
};

// Level preprocessing: vertex -> minimum feasible level (1 + BFS distance from
// the root).  Throws std::invalid_argument on a disconnected graph.
std::map<int, int> level_preprocess(const BdMstInstance& inst);

// Builders.  Each computes the QUBO, the registry, the decode tables and, when
// `with_oracle` and the instance is within the oracle guard, the optimum.
ProblemInstance build_bdmst_qubo(const BdMstInstance& inst,
                                 const BdMstBuildOptions& options = {},
                                 bool with_oracle = true);
ProblemInstance build_gc_qubo(const GcInstance& inst, bool with_oracle = true);
ProblemInstance build_info_qubo(const InfoInstance& inst,
                                const InfoBuildOptions& options = {},
                                bool with_oracle = true);

// Decoders: evaluate the penalty groups exactly as built into the QUBO and
// recover the combinatorial object.  The assignment must be binary and sized
// to the instance QUBO.
BdMstDecode decode_bdmst(const Assignment& a, const ProblemInstance& pi);
GcDecode decode_gc(const Assignment& a, const ProblemInstance& pi);
InfoDecode decode_info(const Assignment& a, const ProblemInstance& pi);

// True when the assignment decodes to a zero-penalty solution whose objective
// equals the instance oracle optimum (which must be present).
bool is_oracle_optimum(const Assignment& a, const ProblemInstance& pi);

// Encoders: known solution -> assignment (ancillas and slacks filled
// consistently, so the encoded assignment attains objective + zero penalty).
Assignment encode_bdmst(const ProblemInstance& pi,
                        const std::vector<std::pair<int, int>>& parent_child_edges);
Assignment encode_gc(const ProblemInstance& pi, const std::vector<int>& colors);
Assignment encode_info(const ProblemInstance& pi, const std::vector<int>& emission_times);

// JSON round-trip for the full bundle.  from_json rebuilds the QUBO from the
// embedded source instance and verifies it matches the stored model.
nlohmann::json to_json(const ProblemInstance& pi);
ProblemInstance problem_instance_from_json(const nlohmann::json& j);

}  // namespace qaw
