// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Annealer hardware connectivity graphs.
//
// Chimera C_m: an m x m grid of 8-qubit bipartite K_{4,4} cells.  Qubits are
// addressed (i, j, u, k) with row i, column j, side u (0 = vertical /
// left-of-cell partition, 1 = horizontal), and in-shore position k in [0, 4).
// Couplers: the complete bipartite graph inside each cell, plus external
// couplers joining (i, j, 0, k) ~ (i+1, j, 0, k) and (i, j, 1, k) ~
// (i, j+1, 1, k).  Interior qubits have degree 6 and the graph is bipartite
// (no odd cycles): sides 0/1 alternate along every coupler except the external
// ones, which stay within a side but flip the parity of i + j.
//
// Pegasus P_m: qubits addressed (u, w, k, z) with orientation u in {0, 1}
// (0 = vertical), perpendicular offset w in [0, m), track k in [0, 12) and
// parallel position z in [0, m-1); 24 m (m-1) qubits total.  Each qubit is a
// length-12 segment in a 12m x 12m grid whose start is shifted by a per-track
// offset; two perpendicular qubits are coupled when their segments cross
// (internal couplers), consecutive collinear segments are coupled (external),
// and same-orientation qubits in adjacent even/odd tracks at equal (w, z) are
// coupled (odd couplers).  Interior qubits reach degree 15 = 12 internal + 2
// external + 1 odd, and odd couplers create triangles.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qaw {

struct HardwareGraph {
    std::string family;  // "chimera" | "pegasus" | "custom"
    int m = 0;           // size parameter
    int n_qubits = 0;
    std::vector<std::pair<int, int>> couplers;  // i < j, sorted, unique
    std::vector<std::vector<int>> adj;          // adjacency lists (sorted)
    std::vector<uint8_t> alive;                 // dead-qubit mask; 1 = usable

    bool has_coupler(int a, int b) const;
    int degree(int q) const { return static_cast<int>(adj[q].size()); }

    // Marks qubits dead and removes them (and their couplers) from adjacency.
    void kill_qubits(const std::vector<int>& dead);
};

// Coordinate helpers (also used by tests to cross-check the generators).
int chimera_index(int m, int i, int j, int u, int k);
int pegasus_index(int m, int u, int w, int k, int z);

HardwareGraph chimera_graph(int m);
HardwareGraph pegasus_graph(int m);

// True when the graph admits a proper 2-coloring (i.e. has no odd cycle).
bool is_bipartite(const HardwareGraph& g);

// Finds one triangle (a, b, c) if any exists; returns false otherwise.
bool find_triangle(const HardwareGraph& g, std::array<int, 3>& out);

}  // namespace qaw
