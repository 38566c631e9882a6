// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical JSON serialization for models:
//   {"n_vars": n, "linear": [[i, v], ...], "quadratic": [[i, j, v], ...], "offset": o}
// Indices ascending, pairs with i < j — the canonical form used by golden
// tests and by the CLI file formats.  Ising models use the same shape with
// "n_spins", "h" and "J" keys.

#pragma once

#include <json.hpp>

#include "qaw/model.hpp"

namespace qaw {

nlohmann::json to_json(const QuboModel& q);
QuboModel qubo_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IsingModel& m);
IsingModel ising_from_json(const nlohmann::json& j);

// Locale-independent shortest-round-trip formatting for doubles; used by all
// CSV writers so reruns are byte-identical.
std::string format_double(double v);

}  // namespace qaw
