// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/bench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qaw/rng.hpp"

namespace qaw {

double time_to_solution(double p_success, double t_tot_us) {
    if (!(p_success >= 0.0 && p_success <= 1.0)) {
        throw std::invalid_argument("p_success must be in [0, 1]");
    }
    if (!(t_tot_us > 0.0)) throw std::invalid_argument("t_tot must be positive");
    if (p_success == 0.0) return std::numeric_limits<double>::infinity();
    if (p_success == 1.0) return t_tot_us;
    const double ratio = std::log(1.0 - 0.99) / std::log(1.0 - p_success);
    return t_tot_us * std::max(1.0, ratio);
}

double median_of(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty set");
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    const double a = v[n / 2 - 1];
    const double b = v[n / 2];
    if (std::isinf(a) && std::isinf(b)) return a;  // avoid inf - inf style traps
    return a + (b - a) / 2.0;
}

namespace {

// Nearest-rank percentile of a sorted vector: the ceil(p/100 * n)-th value.
double nearest_rank(const std::vector<double>& sorted, double pct) {
    const size_t n = sorted.size();
    const double raw = std::ceil(pct / 100.0 * static_cast<double>(n));
    size_t rank = raw < 1.0 ? 1 : static_cast<size_t>(raw);
    if (rank > n) rank = n;
    return sorted[rank - 1];
}

}  // namespace

BootstrapSummary bootstrap_median(const std::vector<double>& values, long long resamples,
                                  double lo_percentile, double hi_percentile,
                                  std::uint64_t seed) {
    if (values.empty()) throw std::invalid_argument("bootstrap over empty set");
    if (resamples < 1) throw std::invalid_argument("resamples must be >= 1");
    if (!(lo_percentile >= 0 && hi_percentile <= 100 && lo_percentile <= hi_percentile)) {
        throw std::invalid_argument("bad percentile band");
    }
    Rng rng(seed);
    const size_t n = values.size();
    std::vector<double> medians;
    medians.reserve(static_cast<size_t>(resamples));
    std::vector<double> draw(n);
    for (long long r = 0; r < resamples; ++r) {
        for (size_t i = 0; i < n; ++i) draw[i] = values[rng.uniform_int(n)];
        medians.push_back(median_of(draw));
    }
    std::sort(medians.begin(), medians.end());
    BootstrapSummary out;
    const size_t m = medians.size();
    out.median = m % 2 == 1 ? medians[m / 2]
                            : (std::isinf(medians[m / 2 - 1]) && std::isinf(medians[m / 2])
                                   ? medians[m / 2]
                                   : medians[m / 2 - 1] +
                                         (medians[m / 2] - medians[m / 2 - 1]) / 2.0);
    out.lo = nearest_rank(medians, lo_percentile);
    out.hi = nearest_rank(medians, hi_percentile);
    return out;
}

}  // namespace qaw
