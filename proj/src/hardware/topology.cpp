// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/hardware/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaw {

namespace {

void finalize(HardwareGraph& g) {
    std::sort(g.couplers.begin(), g.couplers.end());
    g.couplers.erase(std::unique(g.couplers.begin(), g.couplers.end()), g.couplers.end());
    g.adj.assign(g.n_qubits, {});
    for (auto [a, b] : g.couplers) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
}

}  // namespace

bool HardwareGraph::has_coupler(int a, int b) const {
    if (a == b) return false;
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), b);
}

void HardwareGraph::kill_qubits(const std::vector<int>& dead) {
    for (int q : dead) {
        if (q < 0 || q >= n_qubits) throw std::out_of_range("dead qubit id out of range");
        alive[q] = 0;
    }
    std::vector<std::pair<int, int>> keep;
    keep.reserve(couplers.size());
    for (auto [a, b] : couplers)
        if (alive[a] && alive[b]) keep.push_back({a, b});
    couplers = std::move(keep);
    finalize(*this);
}

int chimera_index(int m, int i, int j, int u, int k) {
    return ((i * m + j) * 2 + u) * 4 + k;
}

HardwareGraph chimera_graph(int m) {
    if (m < 1) throw std::invalid_argument("chimera_graph: m must be >= 1");
    HardwareGraph g;
    g.family = "chimera";
    g.m = m;
    g.n_qubits = 8 * m * m;
    g.alive.assign(g.n_qubits, 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // Complete bipartite cell.
            for (int k0 = 0; k0 < 4; ++k0)
                for (int k1 = 0; k1 < 4; ++k1)
                    g.couplers.push_back({chimera_index(m, i, j, 0, k0), chimera_index(m, i, j, 1, k1)});
            // External couplers: vertical shore down the column, horizontal shore along the row.
            if (i + 1 < m)
                for (int k = 0; k < 4; ++k)
                    g.couplers.push_back({chimera_index(m, i, j, 0, k), chimera_index(m, i + 1, j, 0, k)});
            if (j + 1 < m)
                for (int k = 0; k < 4; ++k)
                    g.couplers.push_back({chimera_index(m, i, j, 1, k), chimera_index(m, i, j + 1, 1, k)});
        }
    }
    finalize(g);
    return g;
}

int pegasus_index(int m, int u, int w, int k, int z) {
    return ((u * m + w) * 12 + k) * (m - 1) + z;
}

HardwareGraph pegasus_graph(int m) {
    if (m < 2) throw std::invalid_argument("pegasus_graph: m must be >= 2");
    // Per-track segment offsets; tracks come in groups of four.
    static constexpr std::array<int, 12> kOffset = {2, 2, 2, 2, 6, 6, 6, 6, 10, 10, 10, 10};
    HardwareGraph g;
    g.family = "pegasus";
    g.m = m;
    g.n_qubits = 24 * m * (m - 1);
    g.alive.assign(g.n_qubits, 1);

    for (int w = 0; w < m; ++w) {
        for (int k = 0; k < 12; ++k) {
            for (int z = 0; z + 1 <= m - 2; ++z) {
                // External couplers join consecutive collinear segments.
                g.couplers.push_back({pegasus_index(m, 0, w, k, z), pegasus_index(m, 0, w, k, z + 1)});
                g.couplers.push_back({pegasus_index(m, 1, w, k, z), pegasus_index(m, 1, w, k, z + 1)});
            }
            if (k % 2 == 0) {
                for (int z = 0; z <= m - 2; ++z) {
                    // Odd couplers join the even/odd track pair at equal (w, z).
                    g.couplers.push_back({pegasus_index(m, 0, w, k, z), pegasus_index(m, 0, w, k + 1, z)});
                    g.couplers.push_back({pegasus_index(m, 1, w, k, z), pegasus_index(m, 1, w, k + 1, z)});
                }
            }
        }
    }

    // Internal couplers: a vertical qubit (0, w, k, z) occupies grid column
    // X = 12 w + k over rows [12 z + off(k), 12 z + off(k) + 11]; a horizontal
    // qubit (1, w', k', z') occupies row Y = 12 w' + k' over columns
    // [12 z' + off(k'), 12 z' + off(k') + 11].  They are coupled when the
    // segments cross, i.e. X lies in the horizontal span and Y in the vertical.
    for (int w = 0; w < m; ++w) {
        for (int k = 0; k < 12; ++k) {
            const int X = 12 * w + k;
            for (int z = 0; z <= m - 2; ++z) {
                const int y0 = 12 * z + kOffset[k];
                for (int Y = y0; Y < y0 + 12; ++Y) {
                    const int wp = Y / 12;
                    const int kp = Y % 12;
                    // Unique z' with X in [12 z' + off(k'), 12 z' + off(k') + 11].
                    const int num = X - kOffset[kp];
                    if (num < 0) continue;
                    const int zp = num / 12;
                    if (zp > m - 2) continue;
                    g.couplers.push_back({pegasus_index(m, 0, w, k, z), pegasus_index(m, 1, wp, kp, zp)});
                }
            }
        }
    }
    finalize(g);
    return g;
}

bool is_bipartite(const HardwareGraph& g) {
    std::vector<int8_t> color(g.n_qubits, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n_qubits; ++s) {
        if (color[s] != -1 || !g.alive[s]) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int nb : g.adj[v]) {
                if (color[nb] == -1) {
                    color[nb] = static_cast<int8_t>(1 - color[v]);
                    stack.push_back(nb);
                } else if (color[nb] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool find_triangle(const HardwareGraph& g, std::array<int, 3>& out) {
    for (auto [a, b] : g.couplers) {
        const auto& la = g.adj[a];
        const auto& lb = g.adj[b];
        auto ia = la.begin();
        auto ib = lb.begin();
        while (ia != la.end() && ib != lb.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                out = {a, b, *ia};
                return true;
            }
        }
    }
    return false;
}

}  // namespace qaw
