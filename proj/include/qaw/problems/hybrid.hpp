// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Hybrid path/delay optimization for information sharing: alternate a
// classical rerouting heuristic with a delay solver that works on fixed paths.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaw/problems/types.hpp"

namespace qaw {

// A delay solver gets an instance with fixed paths and returns the optimal
// emission times and their total delay cost, or nullopt when no
// capacity-feasible schedule exists within the horizon.  Exceptions propagate.
using InfoSolver =
    std::function<std::optional<std::pair<std::vector<int>, long long>>(const InfoInstance&)>;

struct HybridResult {
    std::vector<std::vector<int>> paths;  // final path per message
    std::vector<int> emissions;           // emission times under the final paths
    long long cost = 0;                   // total delay cost
    int reroutes_tried = 0;
    int reroutes_kept = 0;
    std::vector<std::string> log;         // one line per algorithm step
};

// The full loop: (1) classical shortest paths by travel time; (2) delay
// optimization via `solver`; (3) reroute the message with the costliest delay
// around the first node/time where capacity blocked it; (4) re-solve;
// (5) keep the change if cost drops, roll it back if the new path itself
// arrives later, keep-and-recurse on the affected message when the change
// merely moved the delay elsewhere; (6) stop once every delayed message has
// been considered.  Never returns a configuration costlier than the best one
// seen.  Iterations are capped at 2 * messages * distinct paths encountered.
HybridResult hybrid_path_delay(const InfoInstance& inst, const InfoSolver& solver);

// Exact reference solver backed by the emission-time enumeration oracle.
InfoSolver make_exact_info_solver();

}  // namespace qaw
