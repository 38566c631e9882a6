// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Hybrid path/delay loop.  The delay subproblem (fixed paths) is delegated to
// a pluggable solver; rerouting is classical: the message with the costliest
// delay gets its path recomputed around the first node/time where the network
// capacity blocked its undelayed schedule.

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "qaw/problems/hybrid.hpp"
#include "qaw/problems/instance.hpp"

namespace qaw {

namespace {

// Deterministic Dijkstra by per-message travel times; `banned` is excluded
// from the interior of the path.  Returns an empty vector when disconnected.
std::vector<int> shortest_path(const InfoInstance& inst, const InfoMessage& msg, int from, int to,
                               int banned) {
    const long long inf = std::numeric_limits<long long>::max();
    std::vector<long long> dist(inst.n_nodes, inf);
    std::vector<int> parent(inst.n_nodes, -1);
    std::vector<std::vector<int>> adj(inst.n_nodes);
    for (const auto& [u, v] : inst.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[from] = 0;
    heap.push({0, from});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;
        if (u == to) break;
        for (int v : adj[u]) {
            if (v == banned && v != to) continue;
            long long nd = d + msg.hop_time(u, v);
            if (nd < dist[v] || (nd == dist[v] && parent[v] > u)) {
                dist[v] = nd;
                parent[v] = u;
                heap.push({nd, v});
            }
        }
    }
    if (dist[to] == inf) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

long long message_delay(const InfoInstance& inst, size_t i, const std::vector<int>& emissions) {
    return static_cast<long long>(inst.messages[i].delay_cost) *
           (emissions[i] - inst.messages[i].t_sched);
}

// First node (path position >= 1) where message i, run undelayed, would enter
// a node at a time already at capacity given everyone else's schedule.
// Returns -1 when no such node exists.
int first_blocked_node(const InfoInstance& inst, size_t target,
                       const std::vector<int>& emissions) {
    std::map<std::pair<int, int>, int> load;
    for (size_t i = 0; i < inst.messages.size(); ++i) {
        if (i == target) continue;
        const auto& m = inst.messages[i];
        int t = emissions[i];
        for (size_t j = 0; j + 1 < m.path.size(); ++j) {
            t += m.hop_time(m.path[j], m.path[j + 1]);
            ++load[{m.path[j + 1], t}];
        }
    }
    const auto& m = inst.messages[target];
    int t = m.t_sched;
    for (size_t j = 0; j + 1 < m.path.size(); ++j) {
        t += m.hop_time(m.path[j], m.path[j + 1]);
        int node = m.path[j + 1];
        int b = inst.capacity(node, t);
        if (b >= 0 && load[{node, t}] + 1 > b) return node;
    }
    return -1;
}

}  // namespace

InfoSolver make_exact_info_solver() {
    return [](const InfoInstance& inst) { return info_oracle_schedule(inst); };
}

HybridResult hybrid_path_delay(const InfoInstance& inst, const InfoSolver& solver) {
    auto errors = inst.validate();
    if (!errors.empty()) throw std::invalid_argument("hybrid: " + errors.front());
    for (const auto& m : inst.messages)
        for (const auto& [u, v] : inst.edges)
            m.hop_time(u, v);  // every message must weigh every edge for rerouting

    HybridResult res;
    const size_t n = inst.messages.size();

    // Step 1: classical shortest paths.
    InfoInstance current = inst;
    for (size_t i = 0; i < n; ++i) {
        auto& m = current.messages[i];
        auto sp = shortest_path(current, m, m.path.front(), m.path.back(), -1);
        if (sp.empty()) throw std::invalid_argument("hybrid: sender cannot reach recipient");
        m.path = sp;
    }

    // Step 2: initial delay optimization.
    auto solved = solver(current);
    if (!solved) throw std::runtime_error("hybrid: delay solver found no feasible schedule");
    std::vector<int> emissions = solved->first;
    long long cost = solved->second;
    res.log.push_back("initial cost " + std::to_string(cost));

    InfoInstance best = current;
    std::vector<int> best_emissions = emissions;
    long long best_cost = cost;
    auto remember = [&]() {
        if (cost < best_cost) {
            best = current;
            best_emissions = emissions;
            best_cost = cost;
        }
    };

    std::vector<char> considered(n, 0);
    std::set<std::vector<int>> seen_paths;
    for (const auto& m : current.messages) seen_paths.insert(m.path);
    int forced_target = -1;

    while (true) {
        int cap = 2 * static_cast<int>(n) * static_cast<int>(seen_paths.size());
        if (res.reroutes_tried >= cap) {
            res.log.push_back("iteration cap reached");
            break;
        }
        // Pick the costliest unconsidered delay (or the recursion target).
        int target = -1;
        if (forced_target >= 0 && message_delay(current, forced_target, emissions) > 0) {
            target = forced_target;
        } else {
            long long worst = 0;
            for (size_t i = 0; i < n; ++i) {
                long long d = message_delay(current, i, emissions);
                if (!considered[i] && d > worst) {
                    worst = d;
                    target = static_cast<int>(i);
                }
            }
        }
        forced_target = -1;
        if (target < 0) break;  // every delay has been considered
        ++res.reroutes_tried;

        // Step 3: locate the block and route around it.
        int blocked = first_blocked_node(current, target, emissions);
        const auto& msg = current.messages[target];
        if (blocked < 0 || blocked == msg.path.back()) {
            considered[target] = 1;
            res.log.push_back("message " + std::to_string(target) + ": no reroutable block");
            continue;
        }
        auto alt = shortest_path(current, msg, msg.path.front(), msg.path.back(), blocked);
        if (alt.empty() || !seen_paths.insert(alt).second ||
            msg.t_sched + [&] {
                InfoMessage probe = msg;
                probe.path = alt;
                return probe.duration();
            }() > current.t_h) {
            considered[target] = 1;
            res.log.push_back("message " + std::to_string(target) + ": no usable detour");
            continue;
        }

        // Step 4: re-solve with the candidate path.
        InfoInstance candidate = current;
        candidate.messages[target].path = alt;
        auto resolved = solver(candidate);
        if (!resolved) {
            considered[target] = 1;
            res.log.push_back("message " + std::to_string(target) + ": detour infeasible");
            continue;
        }

        // Step 5: acceptance rules.
        if (resolved->second < cost) {
            current = candidate;
            emissions = resolved->first;
            cost = resolved->second;
            remember();
            ++res.reroutes_kept;
            std::fill(considered.begin(), considered.end(), 0);
            res.log.push_back("message " + std::to_string(target) + ": reroute accepted, cost " +
                              std::to_string(cost));
            continue;
        }
        long long old_arrival = emissions[target] + current.messages[target].duration();
        long long new_arrival = resolved->first[target] + candidate.messages[target].duration();
        int moved_to = -1;
        long long moved_delta = 0;
        for (size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) == target) continue;
            long long delta = message_delay(candidate, j, resolved->first) -
                              message_delay(current, j, emissions);
            if (delta > moved_delta) {
                moved_delta = delta;
                moved_to = static_cast<int>(j);
            }
        }
        if (new_arrival <= old_arrival && moved_to >= 0) {
            // The detour merely pushed the delay onto someone else: keep it and
            // chase the affected message.
            current = candidate;
            emissions = resolved->first;
            cost = resolved->second;
            ++res.reroutes_kept;
            considered[target] = 1;
            considered[moved_to] = 0;
            forced_target = moved_to;
            res.log.push_back("message " + std::to_string(target) +
                              ": reroute kept, delay moved to message " +
                              std::to_string(moved_to));
        } else {
            considered[target] = 1;
            res.log.push_back("message " + std::to_string(target) +
                              ": reroute rolled back (later arrival)");
        }
    }

    remember();
    res.paths.reserve(n);
    for (const auto& m : best.messages) res.paths.push_back(m.path);
    res.emissions = best_emissions;
    res.cost = best_cost;
    return res;
}

}  // namespace qaw
