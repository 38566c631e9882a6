// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "qaw/rng.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {

IsingModel ice_perturb(const IsingModel& m, double sigma_h, double sigma_j, std::uint64_t seed) {
    if (sigma_h < 0 || sigma_j < 0) throw std::invalid_argument("noise sigma must be >= 0");
    IsingModel noisy = m;
    Rng rng(seed);
    // Maps iterate in key order, so the draw sequence is reproducible.
    for (auto& [i, hv] : noisy.h) hv += rng.normal(0.0, sigma_h);
    for (auto& [key, jv] : noisy.J) jv += rng.normal(0.0, sigma_j);
    return noisy;
}

}  // namespace qaw
