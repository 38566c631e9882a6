// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/embed/embedding.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace qaw {

LogicalGraph logical_graph_of(const IsingModel& m) {
    LogicalGraph g;
    g.n = m.n_spins;
    for (const auto& [k, j] : m.J)
        if (j != 0.0) g.edges.push_back(k);
    return g;
}

int Embedding::total_qubits() const {
    int total = 0;
    for (const auto& m : models) total += static_cast<int>(m.size());
    return total;
}

std::vector<int> Embedding::all_qubits() const {
    std::vector<int> q;
    for (const auto& m : models) q.insert(q.end(), m.begin(), m.end());
    std::sort(q.begin(), q.end());
    return q;
}

nlohmann::json to_json(const Embedding& e) {
    nlohmann::json j = nlohmann::json::object();
    for (size_t v = 0; v < e.models.size(); ++v) j[std::to_string(v)] = e.models[v];
    return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
    Embedding e;
    e.models.resize(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t v = std::stoul(it.key());
        if (v >= e.models.size())
            throw std::invalid_argument("embedding json: variable keys must be 0..n-1");
        e.models[v] = it.value().get<std::vector<int>>();
        std::sort(e.models[v].begin(), e.models[v].end());
    }
    return e;
}

std::vector<std::string> verify_embedding(const Embedding& e, const LogicalGraph& logical,
                                          const HardwareGraph& hw) {
    std::vector<std::string> violations;
    if (e.n_logical() != logical.n) {
        violations.push_back("embedding covers " + std::to_string(e.n_logical()) +
                             " variables, logical graph has " + std::to_string(logical.n));
        return violations;
    }
    std::set<int> used;
    for (int v = 0; v < logical.n; ++v) {
        const auto& model = e.models[v];
        const std::string tag = "variable " + std::to_string(v) + ": ";
        if (model.empty()) {
            violations.push_back(tag + "empty vertex model");
            continue;
        }
        bool in_range = true;
        for (int q : model) {
            if (q < 0 || q >= hw.n_qubits || !hw.alive[q]) {
                violations.push_back(tag + "qubit " + std::to_string(q) + " not usable");
                in_range = false;
            } else if (!used.insert(q).second) {
                violations.push_back(tag + "qubit " + std::to_string(q) +
                                     " shared with another model");
            }
        }
        if (!in_range) continue;
        // Connectivity within the model.
        std::set<int> in_model(model.begin(), model.end());
        std::queue<int> frontier;
        std::set<int> seen;
        frontier.push(model.front());
        seen.insert(model.front());
        while (!frontier.empty()) {
            int q = frontier.front();
            frontier.pop();
            for (int nb : hw.adj[q])
                if (in_model.count(nb) && seen.insert(nb).second) frontier.push(nb);
        }
        if (seen.size() != in_model.size())
            violations.push_back(tag + "vertex model is not connected");
    }
    for (const auto& [u, v] : logical.edges) {
        bool coupled = false;
        for (int a : e.models[u]) {
            for (int b : e.models[v])
                if (hw.has_coupler(a, b)) {
                    coupled = true;
                    break;
                }
            if (coupled) break;
        }
        if (!coupled)
            violations.push_back("logical edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has no physical coupler");
    }
    return violations;
}

}  // namespace qaw
