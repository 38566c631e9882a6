// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Bounded-degree minimum spanning tree as a QUBO.
//
// Variables (root r fixed, degree bound D):
//   x(p,v)  "p is the parent of v"        for v != r, p a neighbor of v
//   y(v,l)  "v sits at tree level l"      for v != r, l in [2, n]
//   z(v,j)  unary slack bits              j in [1, D-1] (plain root: [1, D])
//   a(p,v,l) ancillas quadratizing the level-consistency products
//
// Cost: C0 = sum w(p,v) x(p,v), plus weight A = w_max + epsilon times
//   pen1: each non-root vertex has exactly one parent,
//   pen2: each non-root vertex has exactly one level,
//   pen3: child counts respect the degree bound via unary slacks,
//   pen4: a parent of a level-l vertex sits at level l-1, written as
//         x(p,v) * Y(v,l) * (1 - W(p,l-1)) with W the indicator that p can
//         and does sit at level l-1 (constant for the root or pruned levels).
//
// Preprocessing (on by default) prunes levels below the BFS distance bound,
// identifies level 2 of a root-adjacent vertex with x(r,v), and writes the
// root slack around "a tree root always has at least one child".  The plain
// form keeps the full level ranges and spends an ancilla on every
// (parent, vertex, level >= 3) product even when the upstream indicator is
// constant, which keeps its variable count at the documented closed form.

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "qaw/problems/instance.hpp"

namespace qaw {

namespace {

std::map<PairKey, int> edge_weights(const BdMstInstance& inst) {
    std::map<PairKey, int> w;
    for (const auto& [u, v, wt] : inst.edges) {
        if (u < 0 || v < 0 || u >= inst.n || v >= inst.n || u == v)
            throw std::invalid_argument("bdmst: edge endpoint out of range");
        if (wt < 1) throw std::invalid_argument("bdmst: edge weights must be >= 1");
        if (!w.emplace(make_pair_key(u, v), wt).second)
            throw std::invalid_argument("bdmst: duplicate edge");
    }
    return w;
}

void validate(const BdMstInstance& inst) {
    if (inst.n < 2) throw std::invalid_argument("bdmst: need at least two vertices");
    if (inst.delta < 1) throw std::invalid_argument("bdmst: degree bound must be >= 1");
    if (inst.epsilon <= 0.0) throw std::invalid_argument("bdmst: epsilon must be positive");
    edge_weights(inst);
    if (!inst.connected()) throw std::invalid_argument("bdmst: graph must be connected");
    if (inst.root && (*inst.root < 0 || *inst.root >= inst.n))
        throw std::invalid_argument("bdmst: root out of range");
}

std::string idx2(const char* name, int i, int j) {
    return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string idx3(const char* name, int i, int j, int k) {
    return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

}  // namespace

int BdMstInstance::resolved_root() const {
    if (root) return *root;
    auto adj = adjacency();
    int best = 0;
    for (int v = 1; v < n; ++v)
        if (adj[v].size() > adj[best].size()) best = v;
    return best;
}

std::vector<std::vector<int>> BdMstInstance::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v, w] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

int BdMstInstance::max_weight() const {
    int m = 0;
    for (const auto& [u, v, w] : edges) m = std::max(m, w);
    return m;
}

bool BdMstInstance::connected() const {
    if (n <= 0) return false;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

std::map<int, int> level_preprocess(const BdMstInstance& inst) {
    validate(inst);
    auto adj = inst.adjacency();
    int root = inst.resolved_root();
    std::vector<int> dist(inst.n, -1);
    std::queue<int> q;
    q.push(root);
    dist[root] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    std::map<int, int> min_level;
    for (int v = 0; v < inst.n; ++v) min_level[v] = 1 + dist[v];
    return min_level;
}

ProblemInstance build_bdmst_qubo(const BdMstInstance& inst, const BdMstBuildOptions& options,
                                 bool with_oracle) {
    validate(inst);
    const int n = inst.n;
    const int root = inst.resolved_root();
    const auto adj = inst.adjacency();
    const auto weights = edge_weights(inst);
    const bool pre = options.preprocess;
    const double A = inst.max_weight() + inst.epsilon;

    std::map<int, int> min_level;
    if (pre) {
        min_level = level_preprocess(inst);
    } else {
        for (int v = 0; v < n; ++v) min_level[v] = (v == root) ? 1 : 2;
    }

    ProblemInstance pi;
    pi.cls = ProblemClass::bdmst;
    pi.source = inst;
    pi.bdmst_options = options;
    pi.penalty_weights["A"] = A;

    VariableRegistry& reg = pi.registry;
    BdMstDecoderInfo info;
    info.root = root;

    // --- x(p, v): parent selectors, grouped per child vertex.
    std::map<PairKey, int> x_index;  // key (p, v) ordered as stored, p first
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        for (int p : adj[v]) {
            int idx = reg.add(idx2("x", p, v));
            x_index[{p, v}] = idx;
            info.parent_vars.emplace_back(p, v, weights.at(make_pair_key(p, v)), idx);
            info.pen1_groups[v].push_back(idx);
        }
    }

    // --- y(v, l) / identified level variables.
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        for (int l = min_level.at(v); l <= n; ++l) {
            if (pre && l == 2) {
                // Root-adjacent vertex: level 2 holds iff the root is its parent.
                info.level_var[{v, 2}] = x_index.at({root, v});
                continue;
            }
            int idx = reg.add(idx2("y", v, l));
            info.level_var[{v, l}] = idx;
        }
    }

    // --- z(v, j): unary degree slacks.
    std::map<int, std::vector<int>> z_index;
    for (int v = 0; v < n; ++v) {
        int bits = (v == root && !pre) ? inst.delta : inst.delta - 1;
        for (int j = 1; j <= bits; ++j) z_index[v].push_back(reg.add(idx2("z", v, j)));
    }

    // --- pen4 term skeletons (registering ancillas in iteration order).
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        for (int p : adj[v]) {
            for (int l = min_level.at(v); l <= n; ++l) {
                if (p == root && l == 2) continue;  // W(root,1) = 1: term vanishes
                BdMstPen4Term term;
                term.x = x_index.at({p, v});
                term.y = info.level_var.at({v, l});
                // Upstream indicator W(p, l-1): a variable when p is a non-root
                // vertex that can sit at level l-1, constant 0 otherwise.
                if (p != root && l >= 3) {
                    auto it = info.level_var.find({p, l - 1});
                    if (it != info.level_var.end()) term.w = it->second;
                }
                const bool ancilla = pre ? term.w >= 0 : l >= 3;
                if (ancilla) term.a = reg.add(idx3("a", p, v, l));
                info.pen4_terms.push_back(term);
            }
        }
    }

    // --- pen2 groups: level indicators per vertex (includes the identified x).
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        for (int l = min_level.at(v); l <= n; ++l)
            info.pen2_groups[v].push_back(info.level_var.at({v, l}));
    }

    // --- pen3 groups: child counts vs unary slacks.
    for (int p = 0; p < n; ++p) {
        BdMstDecoderInfo::Pen3Group g;
        g.vertex = p;
        for (int v : adj[p])
            if (v != root) g.child_x.push_back(x_index.at({p, v}));
        g.slack_z = z_index[p];
        g.constant = (p == root && pre) ? -1 : 0;
        info.pen3_groups.push_back(g);
    }

    // --- assemble the QUBO.
    QuboModel q;
    q.n_vars = static_cast<int>(reg.size());

    for (const auto& [p, v, w, xi] : info.parent_vars) q.add_linear(xi, w);

    for (const auto& [v, xs] : info.pen1_groups) {
        std::vector<std::pair<int, double>> terms;
        for (int xi : xs) terms.emplace_back(xi, 1.0);
        add_weighted_square(q, terms, -1.0, A);
    }
    for (const auto& [v, ys] : info.pen2_groups) {
        std::vector<std::pair<int, double>> terms;
        for (int yi : ys) terms.emplace_back(yi, 1.0);
        add_weighted_square(q, terms, -1.0, A);
    }
    for (const auto& g : info.pen3_groups) {
        std::vector<std::pair<int, double>> terms;
        for (int xi : g.child_x) terms.emplace_back(xi, 1.0);
        for (int zi : g.slack_z) terms.emplace_back(zi, -1.0);
        add_weighted_square(q, terms, g.constant, A);
    }
    for (const auto& t : info.pen4_terms) {
        if (t.a < 0) {
            q.add_quadratic(t.x, t.y, A);
            continue;
        }
        // 4a - a w + x y - 2 a x - 2 a y; min over a equals x y (1 - w).
        q.add_linear(t.a, 4.0 * A);
        if (t.w >= 0) q.add_quadratic(t.a, t.w, -A);
        q.add_quadratic(t.x, t.y, A);
        q.add_quadratic(t.a, t.x, -2.0 * A);
        q.add_quadratic(t.a, t.y, -2.0 * A);
    }

    pi.qubo = std::move(q);
    pi.decoder = std::move(info);
    if (with_oracle && n <= 9) {
        auto opt = bdmst_oracle(inst);
        if (opt) pi.oracle_optimum = static_cast<double>(*opt);
    }
    return pi;
}

BdMstDecode decode_bdmst(const Assignment& a, const ProblemInstance& pi) {
    if (pi.cls != ProblemClass::bdmst) throw std::invalid_argument("decode_bdmst: wrong class");
    if (a.mode != VarMode::binary || static_cast<int>(a.values.size()) != pi.qubo.n_vars)
        throw std::invalid_argument("decode_bdmst: need a binary assignment of QUBO size");
    const auto& info = std::get<BdMstDecoderInfo>(pi.decoder);
    const auto& x = a.values;

    BdMstDecode d;
    long long pen1 = 0, pen2 = 0, pen3 = 0, pen4 = 0;
    for (const auto& [v, xs] : info.pen1_groups) {
        long long s = -1;
        for (int xi : xs) s += x[xi];
        pen1 += s * s;
        if (s != 0) d.pen1_vertices.push_back(v);
    }
    for (const auto& [v, ys] : info.pen2_groups) {
        long long s = -1;
        for (int yi : ys) s += x[yi];
        pen2 += s * s;
        if (s != 0) d.pen2_vertices.push_back(v);
    }
    for (const auto& g : info.pen3_groups) {
        long long s = g.constant;
        for (int xi : g.child_x) s += x[xi];
        for (int zi : g.slack_z) s -= x[zi];
        pen3 += s * s;
    }
    for (const auto& t : info.pen4_terms) {
        long long xv = x[t.x], yv = x[t.y];
        if (t.a < 0) {
            pen4 += xv * yv;
        } else {
            long long av = x[t.a], wv = t.w >= 0 ? x[t.w] : 0;
            pen4 += 4 * av - av * wv + xv * yv - 2 * av * xv - 2 * av * yv;
        }
    }
    d.pen1 = static_cast<double>(pen1);
    d.pen2 = static_cast<double>(pen2);
    d.pen3 = static_cast<double>(pen3);
    d.pen4 = static_cast<double>(pen4);

    for (const auto& [p, v, w, xi] : info.parent_vars) {
        if (x[xi]) {
            d.cost += w;
            d.tree_edges.emplace_back(p, v);
        }
    }
    d.feasible = pen1 == 0 && pen2 == 0 && pen3 == 0 && pen4 == 0;
    return d;
}

Assignment encode_bdmst(const ProblemInstance& pi,
                        const std::vector<std::pair<int, int>>& parent_child_edges) {
    if (pi.cls != ProblemClass::bdmst) throw std::invalid_argument("encode_bdmst: wrong class");
    const auto& inst = pi.bdmst();
    const auto& info = std::get<BdMstDecoderInfo>(pi.decoder);
    const int n = inst.n;
    if (static_cast<int>(parent_child_edges.size()) != n - 1)
        throw std::invalid_argument("encode_bdmst: a spanning tree has n - 1 edges");

    std::vector<int> parent(n, -1);
    for (const auto& [p, v] : parent_child_edges) {
        if (v == info.root || v < 0 || v >= n || p < 0 || p >= n || parent[v] != -1)
            throw std::invalid_argument("encode_bdmst: invalid parent list");
        parent[v] = p;
    }
    std::vector<int> level(n, -1);
    level[info.root] = 1;
    for (int v = 0; v < n; ++v) {
        if (level[v] >= 0) continue;
        // Walk up to a leveled ancestor, then unwind.
        std::vector<int> chain;
        int u = v;
        while (level[u] < 0) {
            if (parent[u] < 0) throw std::invalid_argument("encode_bdmst: vertex without parent");
            chain.push_back(u);
            u = parent[u];
            if (static_cast<int>(chain.size()) > n)
                throw std::invalid_argument("encode_bdmst: parent list contains a cycle");
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            level[*it] = level[u] + 1;
            u = *it;
        }
    }

    std::vector<int8_t> bits(pi.qubo.n_vars, 0);
    std::vector<int> children(n, 0);
    for (const auto& [p, v, w, xi] : info.parent_vars) {
        if (parent[v] == p) {
            bits[xi] = 1;
            ++children[p];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v == info.root) continue;
        auto it = info.level_var.find({v, level[v]});
        if (it == info.level_var.end())
            throw std::invalid_argument("encode_bdmst: level outside the variable range");
        bits[it->second] = 1;  // identified levels coincide with the x bit already set
    }
    for (const auto& g : info.pen3_groups) {
        int slack = children[g.vertex] + g.constant;
        if (slack < 0 || slack > static_cast<int>(g.slack_z.size()))
            throw std::invalid_argument("encode_bdmst: tree violates the degree bound");
        for (int j = 0; j < slack; ++j) bits[g.slack_z[j]] = 1;
    }
    for (const auto& t : info.pen4_terms) {
        if (t.a < 0) continue;
        int wv = t.w >= 0 ? bits[t.w] : 0;
        bits[t.a] = static_cast<int8_t>(bits[t.x] & bits[t.y] & wv);
    }
    return Assignment::binary(std::move(bits));
}

double quad_f(int x, int y, int a) { return 3.0 * a + x * y - 2.0 * a * x - 2.0 * a * y; }

double quad_replacement(int x, int y, int w, int a) {
    return 4.0 * a - a * w + x * y - 2.0 * a * x - 2.0 * a * y;
}

namespace {

// Prüfer-sequence spanning-tree enumeration.  Decodes every labeled tree on n
// vertices, keeps those whose edges all exist in the instance graph and whose
// maximum degree respects the bound.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& code, int n) {
    std::vector<int> degree(n, 1);
    for (int v : code) ++degree[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> work = code;
    for (int v : work) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1) leaves.push(v);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return edges;
}

}  // namespace

std::optional<long long> bdmst_oracle(const BdMstInstance& inst) {
    validate(inst);
    const int n = inst.n;
    if (n > 9) throw std::invalid_argument("bdmst_oracle: guard n <= 9 exceeded");
    const auto weights = edge_weights(inst);

    auto tree_weight = [&](const std::vector<std::pair<int, int>>& edges)
        -> std::optional<long long> {
        std::vector<int> degree(n, 0);
        long long w = 0;
        for (const auto& [u, v] : edges) {
            auto it = weights.find({u, v});
            if (it == weights.end()) return std::nullopt;
            w += it->second;
            if (++degree[u] > inst.delta || ++degree[v] > inst.delta) return std::nullopt;
        }
        return w;
    };

    std::optional<long long> best;
    if (n == 2) {
        best = tree_weight({{0, 1}});
        return best;
    }
    std::vector<int> code(n - 2, 0);
    while (true) {
        auto w = tree_weight(prufer_decode(code, n));
        if (w && (!best || *w < *best)) best = w;
        int pos = n - 3;
        while (pos >= 0 && code[pos] == n - 1) {
            code[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++code[pos];
    }
    return best;
}

}  // namespace qaw
