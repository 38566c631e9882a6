// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Instance types, decoder tables and exact oracles for the three problem
// classes: bounded-degree minimum spanning tree (BD-MST), graph coloring (GC)
// and information sharing (INFO).  Builders that turn instances into QUBOs
// live in qaw/problems/instance.hpp; everything here is independent of the
// model layer except for plain index bookkeeping.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qaw {

// ---------------------------------------------------------------------------
// Bounded-degree minimum spanning tree
// ---------------------------------------------------------------------------

struct BdMstInstance {
    int n = 0;                                      // vertices 0..n-1
    std::vector<std::tuple<int, int, int>> edges;   // (u, v, weight >= 1), u < v
    int delta = 2;                                  // degree bound, >= 2
    std::optional<int> root;                        // default: max degree, tie -> lowest index
    double epsilon = 0.5;                           // penalty margin

    int resolved_root() const;                      // applies the default rule
    std::vector<std::vector<int>> adjacency() const;
    int max_weight() const;
    bool connected() const;
};

struct BdMstBuildOptions {
    // Preprocessing bundles the variable-saving rewrites: distance pruning of
    // level variables, identification of "level 2" with "root is my parent"
    // for root-adjacent vertices, and the root slack written around the fact
    // that a spanning-tree root always has at least one child.  Without it the
    // builder emits the plain formulation with full level ranges and an
    // ancilla for every parent pair and level >= 3.
    bool preprocess = true;
};

// One level-consistency term x(p,v) * Y(v,l) * (1 - W(p,l-1)).  Indices are
// dense QUBO variables; w = -1 encodes a constant-zero upstream indicator and
// a = -1 a term emitted as a plain quadratic (no ancilla).
struct BdMstPen4Term {
    int x = -1;
    int y = -1;
    int w = -1;
    int a = -1;
};

// Decode tables produced by the builder; everything decode needs to evaluate
// the four penalty groups and the tree cost exactly.
struct BdMstDecoderInfo {
    int root = 0;
    std::vector<std::tuple<int, int, int, int>> parent_vars;  // (p, v, weight, x index)
    // Per non-root vertex: the x indices of its candidate parents.
    std::map<int, std::vector<int>> pen1_groups;
    // Per non-root vertex: indices whose sum must be 1 (level variables, with
    // the identified x standing in for level 2 where applicable).
    std::map<int, std::vector<int>> pen2_groups;
    // Per vertex: child x indices, slack z indices, constant.  The group value
    // is (sum x + constant - sum z)^2.
    struct Pen3Group {
        int vertex = 0;
        std::vector<int> child_x;
        std::vector<int> slack_z;
        int constant = 0;
    };
    std::vector<Pen3Group> pen3_groups;
    std::vector<BdMstPen4Term> pen4_terms;
    // Level lookup for encoding: (v, level) -> index of Y(v, level); level 2 of
    // a root-adjacent vertex maps to its x(root, v) under preprocessing.
    std::map<std::pair<int, int>, int> level_var;
};

struct BdMstDecode {
    bool feasible = false;
    std::vector<std::pair<int, int>> tree_edges;  // (parent, child) when feasible
    long long cost = 0;                           // sum of selected parent-edge weights
    // Unweighted penalty-group values (exactly the QUBO's group polynomials).
    double pen1 = 0, pen2 = 0, pen3 = 0, pen4 = 0;
    std::vector<int> pen1_vertices;  // vertices whose parent count is not one
    std::vector<int> pen2_vertices;  // vertices whose level count is not one
};

// Exact oracle: enumerates all spanning trees (n <= 9 guard), filters by the
// degree bound, returns the minimum weight; nullopt when no tree qualifies.
std::optional<long long> bdmst_oracle(const BdMstInstance& inst);

// Quadratization primitives (exposed for the exhaustive unit checks).
// quad_f is the ancilla penalty 3a + xy - 2ax - 2ay (> 0 iff a != x*y);
// quad_replacement is the full term 4a - a*w + x*y - 2a*x - 2a*y whose
// minimum over a equals x*y*(1-w).
double quad_f(int x, int y, int a);
double quad_replacement(int x, int y, int w, int a);

// ---------------------------------------------------------------------------
// Graph coloring
// ---------------------------------------------------------------------------

struct GcInstance {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, simple graph
    int k = 1;                               // colors
};

struct GcDecoderInfo {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;
    // Variable index of x(v, i) is v * k + i by construction.
};

struct GcDecode {
    bool feasible = false;                // every vertex has exactly one color
    std::vector<int> colors;              // -1 where not exactly one
    double onehot_penalty = 0;            // sum over v of (1 - sum_i x)^2
    long long conflicts = 0;              // monochromatic edges (counting color pairs)
};

// Exact minimum of edge-conflict count over all k^n colorings; guard k^n <= 1e7.
long long gc_oracle(const GcInstance& inst);

// ---------------------------------------------------------------------------
// Information sharing
// ---------------------------------------------------------------------------

struct InfoMessage {
    std::vector<int> path;                     // node sequence, path[0] = sender
    std::map<std::pair<int, int>, int> travel; // l(i, e) for graph edges, key u < v
    int delay_cost = 1;                        // c_i
    int t_sched = 0;                           // scheduled emission time

    int hop_time(int u, int v) const;          // l for one edge, order-insensitive
    int duration() const;                      // D(i, P) = sum of hop times
    int earliest_at(int position) const;       // t_sched + prefix sum of hop times
};

struct InfoInstance {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> edges;    // communications network, u < v
    std::vector<InfoMessage> messages;
    int default_capacity = -1;                 // B^v_t when no override; -1 = unconstrained
    std::map<std::pair<int, int>, int> capacity_overrides;  // (node, t) -> B
    int t_h = 0;                               // time horizon
    double epsilon = 0.5;

    int capacity(int node, int t) const;       // -1 means unconstrained
    // Checks paths exist in the graph and t_h admits every undelayed schedule.
    std::vector<std::string> validate() const;
};

struct InfoBuildOptions {
    // false: per-penalty safe bounds A1/A2/A3; true: the single uniform weight
    // 0.5 * sum_i c_i * sum_{t = earliest arrival(i)}^{t_h} t + epsilon.
    bool uniform_penalty_weight = false;
};

struct InfoDecoderInfo {
    struct NodeVars {
        int message = 0;
        int position = 0;  // index into the message path
        int node = 0;
        int t_min = 0;     // earliest arrival; variables cover [t_min, t_h]
        std::vector<int> var;  // index per t, size t_h - t_min + 1
    };
    std::vector<NodeVars> node_vars;            // all (message, position) groups
    // Capacity groups: per (node, t) with at least one counted entry variable:
    // counted x indices (entries only, i.e. path position >= 1), slack indices.
    struct CapacityGroup {
        int node = 0;
        int t = 0;
        int capacity = 0;
        std::vector<int> entries;
        std::vector<int> slacks;
    };
    std::vector<CapacityGroup> pen1_groups;
    std::vector<std::pair<int, int>> pen2_pairs;  // (upstream var, downstream var)
    int t_h = 0;
    std::vector<int> message_costs;
    std::vector<int> message_durations;
    std::vector<int> message_t_sched;
};

struct InfoDecode {
    bool feasible = false;
    double pen1 = 0, pen2 = 0, pen3 = 0;  // unweighted group values
    // Per message: arrival time at each path node (-1 when not exactly one).
    std::vector<std::vector<int>> arrivals;
    std::vector<int> emissions;           // arrival at the sender node
    long long cost = 0;                   // sum c_i * (recipient arrival - D_i - t_sched_i)
};

// Exact oracle: enumerates emission-time tuples (guard: product of choice
// counts <= 1e7), checking capacities at every node-entry time; returns the
// minimal total delay cost, or nullopt when no tuple is capacity-feasible.
std::optional<long long> info_oracle(const InfoInstance& inst);

// Same enumeration, also reporting the first optimal emission-time tuple.
std::optional<std::pair<std::vector<int>, long long>> info_oracle_schedule(
    const InfoInstance& inst);

}  // namespace qaw
