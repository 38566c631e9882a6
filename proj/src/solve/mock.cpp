// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/solve/mock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qaw {

namespace {

Assignment gauged_copy(const Assignment& a, const GaugeVector* g) {
    Assignment out = a;
    if (g != nullptr) {
        if (g->signs.size() != a.values.size()) {
            throw std::invalid_argument("gauge width mismatch");
        }
        for (size_t i = 0; i < out.values.size(); ++i) {
            out.values[i] = static_cast<int8_t>(out.values[i] * g->signs[i]);
        }
    }
    return out;
}

SampleSet make_set(const IsingModel& gauged, const std::string& solver, std::uint64_t seed) {
    SampleSet out;
    out.mode = VarMode::spin;
    out.n_vars = gauged.n_spins;
    out.solver = solver;
    out.seed = seed;
    return out;
}

}  // namespace

MockOptimalSampler::MockOptimalSampler(Assignment physical_target)
    : target_(std::move(physical_target)) {}

SampleSet MockOptimalSampler::sample(const IsingModel& gauged, const AnnealContext& ctx,
                                     int reads) {
    if (static_cast<int>(target_.values.size()) != gauged.n_spins) {
        throw std::invalid_argument("mock target width mismatch");
    }
    SampleSet out = make_set(gauged, name(), ctx.seed);
    const Assignment sample = gauged_copy(target_, ctx.gauge);
    const double e = energy(gauged, sample);
    for (int r = 0; r < reads; ++r) out.push(sample, e);
    return out;
}

MockBrokenSampler::MockBrokenSampler(Assignment physical_target, int flip_qubit)
    : target_(std::move(physical_target)), flip_(flip_qubit) {
    if (flip_ < 0 || flip_ >= static_cast<int>(target_.values.size())) {
        throw std::invalid_argument("flip qubit out of range");
    }
}

SampleSet MockBrokenSampler::sample(const IsingModel& gauged, const AnnealContext& ctx,
                                    int reads) {
    if (static_cast<int>(target_.values.size()) != gauged.n_spins) {
        throw std::invalid_argument("mock target width mismatch");
    }
    SampleSet out = make_set(gauged, name(), ctx.seed);
    Assignment sample = gauged_copy(target_, ctx.gauge);
    sample.values[flip_] = static_cast<int8_t>(-sample.values[flip_]);
    const double e = energy(gauged, sample);
    for (int r = 0; r < reads; ++r) out.push(sample, e);
    return out;
}

MockPlantedSampler::MockPlantedSampler(Assignment success_physical, Assignment failure_physical,
                                       std::function<double(double, double)> success_probability)
    : success_(std::move(success_physical)),
      failure_(std::move(failure_physical)),
      probability_(std::move(success_probability)) {
    if (success_.values.size() != failure_.values.size()) {
        throw std::invalid_argument("mock targets must have equal width");
    }
    if (!probability_) throw std::invalid_argument("success probability function required");
}

SampleSet MockPlantedSampler::sample(const IsingModel& gauged, const AnnealContext& ctx,
                                     int reads) {
    if (static_cast<int>(success_.values.size()) != gauged.n_spins) {
        throw std::invalid_argument("mock target width mismatch");
    }
    const double f = std::clamp(probability_(ctx.jf, ctx.s_p), 0.0, 1.0);
    const int n_success = static_cast<int>(std::llround(f * reads));
    SampleSet out = make_set(gauged, name(), ctx.seed);
    const Assignment good = gauged_copy(success_, ctx.gauge);
    const Assignment bad = gauged_copy(failure_, ctx.gauge);
    const double e_good = energy(gauged, good);
    const double e_bad = energy(gauged, bad);
    for (int r = 0; r < reads; ++r) {
        if (r < n_success) {
            out.push(good, e_good);
        } else {
            out.push(bad, e_bad);
        }
    }
    return out;
}

}  // namespace qaw
