// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Protocol statistics: expected time-to-solution at 99% confidence, and the
// bootstrap median-of-medians with a percentile band used for error bars.

#pragma once

#include <cstdint>
#include <vector>

namespace qaw {

// T_S = t_tot * log(1 - 0.99) / log(1 - p), floored at t_tot (one anneal is
// the minimum possible run).  p = 0 -> +infinity; p = 1 -> t_tot.
// Throws std::invalid_argument outside 0 <= p <= 1 or t_tot <= 0.
double time_to_solution(double p_success, double t_tot_us);

// Midpoint-convention median of a copy of `v` (even count -> mean of the two
// middle values).  +infinity participates like any other value.
double median_of(std::vector<double> v);

struct BootstrapSummary {
    double median = 0.0;  // median of the resample medians
    double lo = 0.0;      // lower percentile of the resample medians
    double hi = 0.0;      // upper percentile (nearest-rank)
};

// Draws `resamples` same-size resamples of `values` with replacement, takes
// each resample's median, and summarizes those medians: their median plus the
// [lo_percentile, hi_percentile] nearest-rank band.  Deterministic in `seed`.
BootstrapSummary bootstrap_median(const std::vector<double>& values, long long resamples,
                                  double lo_percentile, double hi_percentile, std::uint64_t seed);

}  // namespace qaw
