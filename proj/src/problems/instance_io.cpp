// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON round-trip for ProblemInstance bundles, the generic optimum check, and
// the seeded instance generators.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qaw/model_io.hpp"
#include "qaw/problems/generators.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/rng.hpp"

namespace qaw {

std::string problem_class_name(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::bdmst: return "bdmst";
        case ProblemClass::graph_coloring: return "graph_coloring";
        case ProblemClass::info_sharing: return "info_sharing";
    }
    throw std::invalid_argument("unknown problem class");
}

ProblemClass problem_class_from_name(const std::string& name) {
    if (name == "bdmst") return ProblemClass::bdmst;
    if (name == "graph_coloring") return ProblemClass::graph_coloring;
    if (name == "info_sharing") return ProblemClass::info_sharing;
    throw std::invalid_argument("unknown problem class: " + name);
}

namespace {

nlohmann::json bdmst_to_json(const BdMstInstance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v, w] : inst.edges) j["edges"].push_back({u, v, w});
    j["delta"] = inst.delta;
    j["root"] = inst.root ? nlohmann::json(*inst.root) : nlohmann::json(nullptr);
    j["epsilon"] = inst.epsilon;
    return j;
}

BdMstInstance bdmst_from_json(const nlohmann::json& j) {
    BdMstInstance inst;
    inst.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    inst.delta = j.at("delta").get<int>();
    if (j.contains("root") && !j.at("root").is_null()) inst.root = j.at("root").get<int>();
    if (j.contains("epsilon")) inst.epsilon = j.at("epsilon").get<double>();
    return inst;
}

nlohmann::json gc_to_json(const GcInstance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : inst.edges) j["edges"].push_back({u, v});
    j["k"] = inst.k;
    return j;
}

GcInstance gc_from_json(const nlohmann::json& j) {
    GcInstance inst;
    inst.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    inst.k = j.at("k").get<int>();
    return inst;
}

nlohmann::json info_to_json(const InfoInstance& inst) {
    nlohmann::json j;
    j["n_nodes"] = inst.n_nodes;
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : inst.edges) j["edges"].push_back({u, v});
    j["messages"] = nlohmann::json::array();
    for (const auto& m : inst.messages) {
        nlohmann::json mj;
        mj["path"] = m.path;
        mj["travel"] = nlohmann::json::array();
        for (const auto& [e, l] : m.travel) mj["travel"].push_back({e.first, e.second, l});
        mj["delay_cost"] = m.delay_cost;
        mj["t_sched"] = m.t_sched;
        j["messages"].push_back(std::move(mj));
    }
    j["default_capacity"] = inst.default_capacity;
    j["capacity_overrides"] = nlohmann::json::array();
    for (const auto& [key, b] : inst.capacity_overrides)
        j["capacity_overrides"].push_back({key.first, key.second, b});
    j["t_h"] = inst.t_h;
    j["epsilon"] = inst.epsilon;
    return j;
}

InfoInstance info_from_json(const nlohmann::json& j) {
    InfoInstance inst;
    inst.n_nodes = j.at("n_nodes").get<int>();
    for (const auto& e : j.at("edges"))
        inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& mj : j.at("messages")) {
        InfoMessage m;
        m.path = mj.at("path").get<std::vector<int>>();
        for (const auto& e : mj.at("travel"))
            m.travel[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
        m.delay_cost = mj.at("delay_cost").get<int>();
        m.t_sched = mj.at("t_sched").get<int>();
        inst.messages.push_back(std::move(m));
    }
    inst.default_capacity = j.at("default_capacity").get<int>();
    for (const auto& e : j.at("capacity_overrides"))
        inst.capacity_overrides[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
    inst.t_h = j.at("t_h").get<int>();
    if (j.contains("epsilon")) inst.epsilon = j.at("epsilon").get<double>();
    return inst;
}

}  // namespace

nlohmann::json to_json(const ProblemInstance& pi) {
    nlohmann::json j;
    j["class"] = problem_class_name(pi.cls);
    switch (pi.cls) {
        case ProblemClass::bdmst:
            j["instance"] = bdmst_to_json(pi.bdmst());
            j["options"] = {{"preprocess", pi.bdmst_options.preprocess}};
            break;
        case ProblemClass::graph_coloring:
            j["instance"] = gc_to_json(pi.gc());
            j["options"] = nlohmann::json::object();
            break;
        case ProblemClass::info_sharing:
            j["instance"] = info_to_json(pi.info());
            j["options"] = {{"uniform_penalty_weight", pi.info_options.uniform_penalty_weight}};
            break;
    }
    j["penalty_weights"] = pi.penalty_weights;
    j["oracle_optimum"] =
        pi.oracle_optimum ? nlohmann::json(*pi.oracle_optimum) : nlohmann::json(nullptr);
    j["qubo"] = to_json(pi.qubo);
    j["registry"] = pi.registry.to_json();
    return j;
}

ProblemInstance problem_instance_from_json(const nlohmann::json& j) {
    const auto cls = problem_class_from_name(j.at("class").get<std::string>());
    ProblemInstance pi;
    switch (cls) {
        case ProblemClass::bdmst: {
            BdMstBuildOptions opt;
            opt.preprocess = j.at("options").at("preprocess").get<bool>();
            pi = build_bdmst_qubo(bdmst_from_json(j.at("instance")), opt, false);
            break;
        }
        case ProblemClass::graph_coloring:
            pi = build_gc_qubo(gc_from_json(j.at("instance")), false);
            break;
        case ProblemClass::info_sharing: {
            InfoBuildOptions opt;
            opt.uniform_penalty_weight =
                j.at("options").at("uniform_penalty_weight").get<bool>();
            pi = build_info_qubo(info_from_json(j.at("instance")), opt, false);
            break;
        }
    }
    if (j.contains("oracle_optimum") && !j.at("oracle_optimum").is_null())
        pi.oracle_optimum = j.at("oracle_optimum").get<double>();
    // The stored model must agree with the deterministic rebuild.
    QuboModel stored = qubo_from_json(j.at("qubo"));
    if (stored.n_vars != pi.qubo.n_vars || stored.linear != pi.qubo.linear ||
        stored.quadratic != pi.qubo.quadratic)
        throw std::invalid_argument("problem instance: stored QUBO does not match its instance");
    return pi;
}

bool is_oracle_optimum(const Assignment& a, const ProblemInstance& pi) {
    if (!pi.oracle_optimum)
        throw std::invalid_argument("is_oracle_optimum: instance has no oracle value");
    switch (pi.cls) {
        case ProblemClass::bdmst: {
            auto d = decode_bdmst(a.mode == VarMode::binary ? a : to_binary(a), pi);
            return d.feasible && static_cast<double>(d.cost) == *pi.oracle_optimum;
        }
        case ProblemClass::graph_coloring: {
            auto d = decode_gc(a.mode == VarMode::binary ? a : to_binary(a), pi);
            return d.feasible && static_cast<double>(d.conflicts) == *pi.oracle_optimum;
        }
        case ProblemClass::info_sharing: {
            auto d = decode_info(a.mode == VarMode::binary ? a : to_binary(a), pi);
            return d.feasible && static_cast<double>(d.cost) == *pi.oracle_optimum;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

BdMstInstance random_bdmst_instance(std::uint64_t seed, int n, int delta, bool complete,
                                    int w_max) {
    if (n < 2 || w_max < 1) throw std::invalid_argument("random_bdmst_instance: bad parameters");
    Rng rng(derive_seed(seed, {0x62646d73ULL}));
    BdMstInstance inst;
    inst.n = n;
    inst.delta = delta;
    std::set<std::pair<int, int>> chosen;
    if (!complete) {
        // Random spanning tree: attach each vertex to a random earlier one.
        for (int v = 1; v < n; ++v)
            chosen.insert(make_pair_key(v, static_cast<int>(rng.uniform_int(v))));
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool take = complete || chosen.count({u, v}) || rng.bernoulli(0.5);
            if (take)
                inst.edges.emplace_back(u, v, 1 + static_cast<int>(rng.uniform_int(w_max)));
        }
    }
    return inst;
}

GcInstance random_gc_instance(std::uint64_t seed, int n, int k, int degree) {
    if (n < 2 || k < 2 || degree < 1 || degree >= n)
        throw std::invalid_argument("random_gc_instance: bad parameters");
    Rng rng(derive_seed(seed, {0x67636f6cULL}));
    // Plant a k-coloring, then draw edges between distinct classes only, so
    // the generated graph is k-colorable and the one-hot QUBO ground energy
    // is exactly zero (a cross-class edge can never conflict in the plant).
    std::vector<int> plant(n);
    for (int v = 0; v < n; ++v) plant[v] = v < k ? v : static_cast<int>(rng.uniform_int(k));
    for (size_t i = plant.size(); i > 1; --i)
        std::swap(plant[i - 1], plant[rng.uniform_int(i)]);
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (plant[u] != plant[v]) candidates.emplace_back(u, v);
    for (size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.uniform_int(i)]);
    size_t target = std::min(candidates.size(), static_cast<size_t>(n) * degree / 2);
    GcInstance inst;
    inst.n = n;
    inst.k = k;
    inst.edges.assign(candidates.begin(), candidates.begin() + target);
    std::sort(inst.edges.begin(), inst.edges.end());
    return inst;
}

InfoInstance random_info_instance(std::uint64_t seed, int n_messages, int n_nodes,
                                  int horizon_slack) {
    if (n_messages < 1 || n_nodes < 2)
        throw std::invalid_argument("random_info_instance: bad parameters");
    Rng rng(derive_seed(seed, {0x696e666fULL}));
    InfoInstance inst;
    inst.n_nodes = n_nodes;

    // Random tree plus one extra edge (when possible) for route diversity.
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n_nodes; ++v)
        edges.insert(make_pair_key(v, static_cast<int>(rng.uniform_int(v))));
    for (int extra = 0; extra < 2 && static_cast<int>(edges.size()) <
                                          n_nodes * (n_nodes - 1) / 2;) {
        int u = static_cast<int>(rng.uniform_int(n_nodes));
        int v = static_cast<int>(rng.uniform_int(n_nodes));
        if (u == v) continue;
        edges.insert(make_pair_key(u, v));
        ++extra;
    }
    inst.edges.assign(edges.begin(), edges.end());

    // Shared travel times, one or two ticks per edge.
    std::map<std::pair<int, int>, int> travel;
    for (const auto& e : inst.edges) travel[e] = 1 + static_cast<int>(rng.uniform_int(2));

    // Shortest-path helper (uniform BFS weighting is wrong here; use simple
    // Dijkstra over the shared travel times).
    auto shortest = [&](int from, int to) {
        std::vector<int> dist(n_nodes, 1 << 28), parent(n_nodes, -1);
        std::vector<std::vector<int>> adj(n_nodes);
        for (const auto& [u, v] : inst.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        std::set<std::pair<int, int>> heap;
        dist[from] = 0;
        heap.insert({0, from});
        while (!heap.empty()) {
            auto [d, u] = *heap.begin();
            heap.erase(heap.begin());
            for (int v : adj[u]) {
                int nd = d + travel.at(make_pair_key(u, v));
                if (nd < dist[v] || (nd == dist[v] && parent[v] > u)) {
                    heap.erase({dist[v], v});
                    dist[v] = nd;
                    parent[v] = u;
                    heap.insert({nd, v});
                }
            }
        }
        std::vector<int> path;
        for (int v = to; v != -1; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (int i = 0; i < n_messages; ++i) {
        InfoMessage m;
        int from = static_cast<int>(rng.uniform_int(n_nodes));
        int to = static_cast<int>(rng.uniform_int(n_nodes));
        while (to == from) to = static_cast<int>(rng.uniform_int(n_nodes));
        m.path = shortest(from, to);
        m.travel = travel;
        m.delay_cost = 1 + static_cast<int>(rng.uniform_int(3));
        m.t_sched = 0;
        inst.messages.push_back(std::move(m));
    }

    int max_duration = 0;
    for (const auto& m : inst.messages) max_duration = std::max(max_duration, m.duration());
    inst.t_h = max_duration + horizon_slack;

    // Find the busiest simultaneous entry under the undelayed schedule and
    // shave one unit of capacity there.  A single override keeps one unit of
    // forced delay per message at most, which the emission-time oracle models
    // exactly.
    std::map<std::pair<int, int>, int> load;
    for (const auto& m : inst.messages) {
        int t = m.t_sched;
        for (size_t j = 0; j + 1 < m.path.size(); ++j) {
            t += m.hop_time(m.path[j], m.path[j + 1]);
            ++load[{m.path[j + 1], t}];
        }
    }
    std::pair<int, int> busiest{-1, -1};
    int most = 1;
    for (const auto& [key, count] : load)
        if (count > most) {
            most = count;
            busiest = key;
        }
    if (busiest.first >= 0) inst.capacity_overrides[busiest] = most - 1;
    return inst;
}

}  // namespace qaw
