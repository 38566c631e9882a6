// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Mock samplers for exercising the benchmarking pipeline without Monte Carlo
// noise.  They operate at the physical (embedded, gauged) level, exactly like
// a real sampler: the harness hands them the gauged model plus the gauge that
// produced it, and they plant answers relative to that gauge.

#pragma once

#include <functional>

#include "qaw/solve/solvers.hpp"

namespace qaw {

// Returns the planted target on every read (gauged appropriately).
class MockOptimalSampler : public Sampler {
  public:
    explicit MockOptimalSampler(Assignment physical_target);
    std::string name() const override { return "mock_optimal"; }
    SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) override;

  private:
    Assignment target_;
};

// Returns the planted target with one fixed physical qubit flipped — the
// caller picks a qubit inside a multi-qubit logical model, so every read has
// exactly one broken model.
class MockBrokenSampler : public Sampler {
  public:
    MockBrokenSampler(Assignment physical_target, int flip_qubit);
    std::string name() const override { return "mock_broken"; }
    SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) override;

  private:
    Assignment target_;
    int flip_ = 0;
};

// Plants a success probability f(|J_F|, s_p) in [0, 1]: each gauge's reads
// contain exactly round(f * reads) copies of the success target and the rest
// failure copies.  Deterministic; ideal for validating sweep argmax logic.
class MockPlantedSampler : public Sampler {
  public:
    MockPlantedSampler(Assignment success_physical, Assignment failure_physical,
                       std::function<double(double jf, double s_p)> success_probability);
    std::string name() const override { return "mock_planted"; }
    SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) override;

  private:
    Assignment success_;
    Assignment failure_;
    std::function<double(double, double)> probability_;
};

}  // namespace qaw
