// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Artifact emission for sweep results: a per-(instance, point) CSV, a JSON
// summary with provenance (config, hash, seeds), and per-axis plot data files
// at the best point's remaining coordinates.  Output is byte-deterministic
// for a fixed config.

#pragma once

#include <string>

#include "qaw/bench/harness.hpp"

namespace qaw {

// Directory a run lands in: <out_dir>/run_<config hash>.
std::string run_directory(const SweepConfig& cfg);

// Writes results.csv, summary.json and plot_<axis>.csv files into `dir`
// (created if needed).  Throws on an empty outcome or I/O failure; returns
// the list of files written (relative to dir).
std::vector<std::string> emit_report(const SweepOutcome& outcome, const SweepConfig& cfg,
                                     const std::string& dir);

}  // namespace qaw
