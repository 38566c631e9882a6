// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Randomized vertex-model growth with overfill repair.  Each try places
// logical vertices in a connected (BFS) order: a vertex roots at the qubit
// minimizing the summed weighted-shortest-path cost to its already-placed
// neighbor models and claims the union of the connecting paths.  Paths may
// run through qubits already claimed by other models at an exponential
// penalty; rip-up/re-place rounds then drive that overfill to zero, with a
// per-qubit history cost that keeps rising while a qubit stays contested so
// both parties eventually evacuate a bottleneck instead of trading it.  Once
// every qubit hosts at most one model, strict shrink passes reduce model
// sizes.  The cheapest successful try (fewest physical qubits) wins.

#include "qaw/embed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "qaw/rng.hpp"

namespace qaw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOverfillBase = 16.0;  // penalty growth per extra model on a qubit
constexpr int kRepairRounds = 96;

struct Attempt {
    const LogicalGraph& logical;
    const HardwareGraph& hw;
    std::vector<std::vector<int>> neighbors;  // logical adjacency
    std::vector<std::vector<int>> models;
    std::vector<int> usage;        // how many models claim each qubit
    std::vector<double> history;   // accumulated contention per qubit
    std::vector<double> jitter;    // per-placement multiplicative noise

    Attempt(const LogicalGraph& lg, const HardwareGraph& h) : logical(lg), hw(h) {
        neighbors.resize(lg.n);
        for (const auto& [u, v] : lg.edges) {
            neighbors[u].push_back(v);
            neighbors[v].push_back(u);
        }
        models.resize(lg.n);
        usage.assign(h.n_qubits, 0);
        history.assign(h.n_qubits, 0.0);
        jitter.assign(h.n_qubits, 1.0);
    }

    // Entering cost of a qubit.  In strict mode an occupied qubit is a wall;
    // otherwise the cost grows exponentially with present occupancy and
    // linearly with past contention, so even a currently-free qubit stays
    // repulsive after repeated fights over it.  The jitter factor, redrawn
    // once per placement, breaks the ties between the many equal-length
    // corridors so successive re-routes explore different ones.
    double weight(int q, bool strict) const {
        if (strict) return usage[q] == 0 ? jitter[q] : kInf;
        const double base = (1.0 + history[q]) * jitter[q];
        return usage[q] == 0 ? base : base * std::pow(kOverfillBase, usage[q]);
    }

    // Weighted shortest paths from the free border of `model`: dist[q] is the
    // cheapest total entering cost of a qubit path from (adjacent to) the
    // model to q inclusive; parent chains reconstruct the path.  Qubits of
    // `model` itself are excluded.  Launching from a chain qubit that is
    // itself contested carries the contention surcharge, so a hub whose
    // compact chain forces its neighbors to share attachment qubits sees
    // that cost and spreads out instead of rooting beside the fight.
    void dijkstra_from_model(const std::vector<int>& model, bool strict, std::vector<double>& dist,
                             std::vector<int>& parent) const {
        dist.assign(hw.n_qubits, kInf);
        parent.assign(hw.n_qubits, -1);
        std::vector<char> in_model(hw.n_qubits, 0);
        for (int q : model) in_model[q] = 1;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (int q : model) {
            const double launch =
                usage[q] > 1 ? (1.0 + history[q]) * std::pow(kOverfillBase, usage[q] - 1) : 0.0;
            for (int nb : hw.adj[q]) {
                if (!hw.alive[nb] || in_model[nb]) continue;
                const double w = weight(nb, strict) + launch;
                if (w < dist[nb]) {
                    dist[nb] = w;
                    heap.push({w, nb});
                }
            }
        }
        while (!heap.empty()) {
            const auto [d, q] = heap.top();
            heap.pop();
            if (d > dist[q]) continue;
            for (int nb : hw.adj[q]) {
                if (!hw.alive[nb] || in_model[nb]) continue;
                const double nd = d + weight(nb, strict);
                if (nd < dist[nb]) {
                    dist[nb] = nd;
                    parent[nb] = q;
                    heap.push({nd, nb});
                }
            }
        }
    }

    void claim(int v, std::vector<int> model) {
        std::sort(model.begin(), model.end());
        model.erase(std::unique(model.begin(), model.end()), model.end());
        for (int q : model) ++usage[q];
        models[v] = std::move(model);
    }

    void rip(int v) {
        for (int q : models[v]) --usage[q];
        models[v].clear();
    }

    // Grows a model for v connecting to every placed neighbor.  Returns false
    // only when no candidate root reaches them all (strict mode, or a
    // disconnected hardware region).
    bool place(int v, Rng& rng, bool strict) {
        for (double& j : jitter) j = 1.0 + 0.3 * rng.uniform();

        std::vector<int> placed;
        for (int u : neighbors[v])
            if (!models[u].empty()) placed.push_back(u);

        if (placed.empty()) {
            std::vector<int> pool;
            for (int q = 0; q < hw.n_qubits; ++q)
                if (hw.alive[q] && usage[q] == 0) pool.push_back(q);
            if (pool.empty() && !strict) {
                int lowest = std::numeric_limits<int>::max();
                for (int q = 0; q < hw.n_qubits; ++q) {
                    if (!hw.alive[q]) continue;
                    if (usage[q] < lowest) {
                        lowest = usage[q];
                        pool.clear();
                    }
                    if (usage[q] == lowest) pool.push_back(q);
                }
            }
            if (pool.empty()) return false;
            claim(v, {static_cast<int>(pool[rng.uniform_int(pool.size())])});
            return true;
        }

        std::vector<std::vector<double>> dist(placed.size());
        std::vector<std::vector<int>> parent(placed.size());
        for (size_t m = 0; m < placed.size(); ++m)
            dijkstra_from_model(models[placed[m]], strict, dist[m], parent[m]);

        double best_cost = kInf;
        std::vector<int> best_qs;
        for (int q = 0; q < hw.n_qubits; ++q) {
            if (!hw.alive[q]) continue;
            if (strict && usage[q] > 0) continue;
            double cost = 0;
            for (size_t m = 0; m < placed.size(); ++m) {
                if (dist[m][q] == kInf) {
                    cost = kInf;
                    break;
                }
                cost += dist[m][q];
            }
            if (cost == kInf) continue;
            if (cost < best_cost) {
                best_cost = cost;
                best_qs.assign(1, q);
            } else if (cost == best_cost) {
                best_qs.push_back(q);
            }
        }
        if (best_qs.empty()) return false;
        const int best_q = best_qs[rng.uniform_int(best_qs.size())];

        std::vector<int> model = {best_q};
        for (size_t m = 0; m < placed.size(); ++m)
            for (int q = parent[m][best_q]; q >= 0; q = parent[m][q]) model.push_back(q);
        claim(v, std::move(model));
        return true;
    }

    int max_usage() const {
        int mx = 0;
        for (int u : usage) mx = std::max(mx, u);
        return mx;
    }

    int total_qubits() const {
        int total = 0;
        for (const auto& m : models) total += static_cast<int>(m.size());
        return total;
    }
};

// Connected placement order: BFS over the logical graph from a (randomly
// tie-broken) maximum-degree root, so every vertex after the first in its
// component already has a placed neighbor and models grow as one region.
// Frontier expansion is shuffled for per-try diversity; disconnected
// components each restart at their own root.
std::vector<int> placement_order(const LogicalGraph& lg,
                                 const std::vector<std::vector<int>>& neighbors, Rng& rng) {
    std::vector<int> order;
    order.reserve(lg.n);
    std::vector<char> seen(lg.n, 0);
    std::vector<int> todo(lg.n);
    for (int v = 0; v < lg.n; ++v) todo[v] = v;
    for (size_t i = todo.size(); i > 1; --i) std::swap(todo[i - 1], todo[rng.uniform_int(i)]);
    std::stable_sort(todo.begin(), todo.end(), [&](int a, int b) {
        return neighbors[a].size() > neighbors[b].size();
    });
    for (int root : todo) {
        if (seen[root]) continue;
        std::queue<int> frontier;
        frontier.push(root);
        seen[root] = 1;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            order.push_back(v);
            std::vector<int> next;
            for (int u : neighbors[v])
                if (!seen[u]) next.push_back(u);
            for (size_t i = next.size(); i > 1; --i)
                std::swap(next[i - 1], next[rng.uniform_int(i)]);
            for (int u : next) {
                seen[u] = 1;
                frontier.push(u);
            }
        }
    }
    return order;
}

}  // namespace

Embedding find_embedding(const LogicalGraph& logical, const HardwareGraph& hw, int tries,
                         std::uint64_t seed, int improvement_passes) {
    if (logical.n <= 0) throw std::invalid_argument("find_embedding: empty logical graph");
    if (tries < 1) throw std::invalid_argument("find_embedding: tries must be >= 1");
    for (const auto& [u, v] : logical.edges)
        if (u < 0 || v < 0 || u >= logical.n || v >= logical.n)
            throw std::invalid_argument("find_embedding: logical edge out of range");

    Embedding best;
    bool found = false;
    for (int attempt_idx = 0; attempt_idx < tries; ++attempt_idx) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(attempt_idx)}));
        Attempt at(logical, hw);
        const auto order = placement_order(logical, at.neighbors, rng);

        bool ok = true;
        for (int v : order)
            if (!at.place(v, rng, /*strict=*/false)) {
                ok = false;
                break;
            }
        if (!ok) continue;

        // Repair rounds: re-route every model against the current congestion
        // until no qubit hosts two models.  Qubits still contested at the end
        // of a round accrue history cost, so a bottleneck two models keep
        // trading grows repulsive until both route around it.
        for (int round = 0; round < kRepairRounds && at.max_usage() > 1; ++round) {
            std::vector<int> shuffled(order);
            for (size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.uniform_int(i)]);
            for (int v : shuffled) {
                at.rip(v);
                if (!at.place(v, rng, /*strict=*/false)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            for (int q = 0; q < hw.n_qubits; ++q)
                if (at.usage[q] > 1) at.history[q] += 1.0;
        }
        if (!ok || at.max_usage() > 1) continue;

        // Strict shrink passes: rip the largest models and re-grow them
        // through free qubits only, keeping strictly smaller results.
        for (int pass = 0; pass < improvement_passes; ++pass) {
            std::vector<int> by_size(order);
            std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
                return at.models[a].size() > at.models[b].size();
            });
            for (int v : by_size) {
                if (at.models[v].size() <= 1) continue;
                const auto old_model = at.models[v];
                at.rip(v);
                if (!at.place(v, rng, /*strict=*/true) ||
                    at.models[v].size() >= old_model.size()) {
                    at.rip(v);
                    at.claim(v, old_model);
                }
            }
        }

        Embedding e;
        e.models = at.models;
        if (!verify_embedding(e, logical, hw).empty()) continue;  // defensive: skip bad tries
        if (!found || e.total_qubits() < best.total_qubits()) {
            best = std::move(e);
            found = true;
        }
    }
    if (!found)
        throw std::runtime_error("find_embedding: no embedding found in " +
                                 std::to_string(tries) + " tries");
    return best;
}

}  // namespace qaw
