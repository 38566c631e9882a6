// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random instance generators for the three problem classes.  All are
// deterministic functions of their arguments; the ensembles match the shapes
// used by the benchmarking protocol (complete weighted graphs for BD-MST,
// regular graphs for GC, small contention networks for INFO).

#pragma once

#include <cstdint>

#include "qaw/problems/types.hpp"

namespace qaw {

// Random connected graph on n vertices with integer weights in [1, w_max].
// complete=true gives K_n; otherwise a random spanning tree plus each
// remaining edge with probability 1/2.
BdMstInstance random_bdmst_instance(std::uint64_t seed, int n, int delta, bool complete = true,
                                    int w_max = 10);

// Random k-colorable simple graph: vertices are planted into k color classes
// and ~n*degree/2 edges are drawn between distinct classes, so a proper
// coloring always exists and the one-hot QUBO minimum is exactly zero.
// `degree` is the target average degree.
GcInstance random_gc_instance(std::uint64_t seed, int n, int k, int degree = 4);

// Random information-sharing instance with n_messages messages routed along
// shortest paths of a small random network.  At most one capacity override is
// placed, at a node/time where at least two messages would enter
// simultaneously, reduced just enough to force a single unit of delay.  This
// keeps the emission-time oracle exact for the generated ensemble.
InfoInstance random_info_instance(std::uint64_t seed, int n_messages, int n_nodes = 5,
                                  int horizon_slack = 2);

}  // namespace qaw
