// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Adapters that expose the Monte Carlo solvers through the harness Sampler
// interface.

#include <stdexcept>

#include "qaw/solve/solvers.hpp"

namespace qaw {

namespace {

class SvmcSampler : public Sampler {
  public:
    explicit SvmcSampler(int sweeps_per_us) : sweeps_per_us_(sweeps_per_us) {}
    std::string name() const override { return "svmc"; }
    SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) override {
        if (ctx.schedule == nullptr || ctx.functions == nullptr) {
            throw std::invalid_argument("svmc sampler needs a schedule and anneal functions");
        }
        SvmcParams params;
        params.schedule = *ctx.schedule;
        params.functions = *ctx.functions;
        params.sweeps_per_us = sweeps_per_us_;
        params.seed = ctx.seed;
        return svmc_anneal(gauged, params, reads);
    }

  private:
    int sweeps_per_us_;
};

class SaSampler : public Sampler {
  public:
    SaSampler(int sweeps, double beta_start, double beta_end)
        : sweeps_(sweeps), beta_start_(beta_start), beta_end_(beta_end) {}
    std::string name() const override { return "sa"; }
    SampleSet sample(const IsingModel& gauged, const AnnealContext& ctx, int reads) override {
        SaParams params;
        params.sweeps = sweeps_;
        params.beta_start = beta_start_;
        params.beta_end = beta_end_;
        params.seed = ctx.seed;
        return simulated_anneal(gauged, params, reads);
    }

  private:
    int sweeps_;
    double beta_start_;
    double beta_end_;
};

}  // namespace

std::unique_ptr<Sampler> make_svmc_sampler(int sweeps_per_us) {
    return std::make_unique<SvmcSampler>(sweeps_per_us);
}

std::unique_ptr<Sampler> make_sa_sampler(int sweeps, double beta_start, double beta_end) {
    return std::make_unique<SaSampler>(sweeps, beta_start, beta_end);
}

}  // namespace qaw
