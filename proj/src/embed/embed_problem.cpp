// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/embed/embed_problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qaw/rng.hpp"

namespace qaw {

EmbeddedProblem embed_ising(const IsingModel& logical, const Embedding& e,
                            const HardwareGraph& hw, double jf) {
    if (jf <= 0.0) throw std::invalid_argument("embed_ising: |J_F| must be positive");
    auto violations = verify_embedding(e, logical_graph_of(logical), hw);
    if (!violations.empty())
        throw std::invalid_argument("embed_ising: invalid embedding: " + violations.front());

    EmbeddedProblem ep;
    ep.logical = logical;
    ep.embedding = e;
    ep.jf = std::abs(jf);
    ep.qubit_ids = e.all_qubits();

    std::map<int, int> compact;  // hardware qubit -> compact index
    for (size_t i = 0; i < ep.qubit_ids.size(); ++i)
        compact[ep.qubit_ids[i]] = static_cast<int>(i);

    ep.physical.n_spins = static_cast<int>(ep.qubit_ids.size());
    ep.physical.offset = logical.offset;

    ep.model_compact.resize(e.models.size());
    for (size_t v = 0; v < e.models.size(); ++v)
        for (int q : e.models[v]) ep.model_compact[v].push_back(compact.at(q));

    // Fields: equal split over the vertex model.
    for (const auto& [v, hv] : logical.h) {
        const auto& model = ep.model_compact[v];
        for (int ci : model) ep.physical.add_h(ci, hv / static_cast<double>(model.size()));
    }

    // Logical couplings: equal split over every available physical coupler.
    for (const auto& [edge, jv] : logical.J) {
        if (jv == 0.0) continue;
        std::vector<PairKey> couplers;
        for (int a : e.models[edge.first])
            for (int b : e.models[edge.second])
                if (hw.has_coupler(a, b))
                    couplers.push_back(make_pair_key(compact.at(a), compact.at(b)));
        // verify_embedding guarantees at least one coupler.
        for (const auto& c : couplers) {
            ep.physical.add_J(c.first, c.second, jv / static_cast<double>(couplers.size()));
            ep.coupler_source[c] = edge;
        }
    }

    // Ferromagnetic chains: every coupler internal to a model gets -|J_F|.
    for (size_t v = 0; v < e.models.size(); ++v) {
        const auto& model = e.models[v];
        for (size_t a = 0; a < model.size(); ++a) {
            for (size_t b = a + 1; b < model.size(); ++b) {
                if (!hw.has_coupler(model[a], model[b])) continue;
                PairKey c = make_pair_key(compact.at(model[a]), compact.at(model[b]));
                ep.physical.add_J(c.first, c.second, -ep.jf);
                ep.coupler_source[c] = {static_cast<int>(v), -1};
            }
        }
    }
    return ep;
}

EmbeddedProblem embed_problem(const ProblemInstance& pi, const Embedding& e,
                              const HardwareGraph& hw, double jf) {
    return embed_ising(qubo_to_ising(pi.qubo), e, hw, jf);
}

nlohmann::json EmbeddingDiagnostics::to_json() const {
    nlohmann::json j;
    j["R_J"] = r_j ? nlohmann::json(*r_j) : nlohmann::json(nullptr);
    j["R_h"] = r_h ? nlohmann::json(*r_h) : nlohmann::json(nullptr);
    j["distinct_J"] = distinct_j;
    j["distinct_h"] = distinct_h;
    j["model_size_mean"] = model_size_mean;
    j["model_size_median"] = model_size_median;
    j["model_size_max"] = model_size_max;
    j["avg_logical_degree"] = avg_logical_degree;
    j["physical_qubits"] = physical_qubits;
    j["precision_warning"] = precision_warning;
    return j;
}

EmbeddingDiagnostics diagnostics(const EmbeddedProblem& ep, double granularity) {
    EmbeddingDiagnostics d;
    double min_j = 0, max_j = 0, min_h = 0, max_h = 0;
    std::set<long long> j_values, h_values;
    bool any_j = false, any_h = false;

    for (const auto& [key, jv] : ep.physical.J) {
        auto src = ep.coupler_source.find(key);
        if (src != ep.coupler_source.end() && src->second.second == -1) continue;  // chain
        if (jv == 0.0) continue;
        double a = std::abs(jv);
        if (!any_j) {
            min_j = max_j = a;
            any_j = true;
        } else {
            min_j = std::min(min_j, a);
            max_j = std::max(max_j, a);
        }
        j_values.insert(llround(a / granularity));
    }
    for (const auto& [i, hv] : ep.physical.h) {
        if (hv == 0.0) continue;
        double a = std::abs(hv);
        if (!any_h) {
            min_h = max_h = a;
            any_h = true;
        } else {
            min_h = std::min(min_h, a);
            max_h = std::max(max_h, a);
        }
        h_values.insert(llround(a / granularity));
    }
    if (any_j) d.r_j = max_j / min_j;
    if (any_h) d.r_h = max_h / min_h;
    d.distinct_j = static_cast<int>(j_values.size());
    d.distinct_h = static_cast<int>(h_values.size());

    std::vector<int> sizes;
    for (const auto& m : ep.embedding.models) sizes.push_back(static_cast<int>(m.size()));
    std::sort(sizes.begin(), sizes.end());
    if (!sizes.empty()) {
        long long total = 0;
        for (int s : sizes) total += s;
        d.model_size_mean = static_cast<double>(total) / sizes.size();
        size_t mid = sizes.size() / 2;
        d.model_size_median = sizes.size() % 2 ? sizes[mid]
                                               : 0.5 * (sizes[mid - 1] + sizes[mid]);
        d.model_size_max = sizes.back();
    }
    d.avg_logical_degree =
        ep.logical.n_spins > 0
            ? 2.0 * static_cast<double>(logical_graph_of(ep.logical).edges.size()) /
                  ep.logical.n_spins
            : 0.0;
    d.physical_qubits = static_cast<int>(ep.qubit_ids.size());
    d.precision_warning = (d.r_j && *d.r_j > kDefaultPrecisionRatio) ||
                          (d.r_h && *d.r_h > kDefaultPrecisionRatio);
    return d;
}

UnembedResult unembed(const SampleSet& physical, const EmbeddedProblem& ep, UnembedPolicy policy,
                      std::uint64_t seed) {
    if (physical.mode != VarMode::spin)
        throw std::invalid_argument("unembed: physical samples must be spins");
    if (physical.n_vars != ep.physical.n_spins)
        throw std::invalid_argument("unembed: sample width does not match the embedded problem");

    UnembedResult res;
    res.logical.mode = VarMode::spin;
    res.logical.n_vars = static_cast<int>(ep.model_compact.size());

    size_t broken_samples = 0;
    for (size_t s = 0; s < physical.samples.size(); ++s) {
        const auto& values = physical.samples[s].values;
        std::vector<int8_t> logical(ep.model_compact.size());
        bool any_broken = false;
        for (size_t v = 0; v < ep.model_compact.size(); ++v) {
            int plus = 0, minus = 0;
            for (int ci : ep.model_compact[v]) (values[ci] > 0 ? plus : minus) += 1;
            if (plus > 0 && minus > 0) any_broken = true;
            if (plus > minus) {
                logical[v] = 1;
            } else if (minus > plus) {
                logical[v] = -1;
            } else {
                Rng coin(derive_seed(seed, {static_cast<std::uint64_t>(s),
                                            static_cast<std::uint64_t>(v)}));
                logical[v] = coin.sign();
            }
        }
        if (any_broken) {
            ++broken_samples;
            if (policy == UnembedPolicy::discard) continue;
        }
        Assignment a = Assignment::spin(std::move(logical));
        double e = energy(ep.logical, a);
        res.logical.push(std::move(a), e);
    }
    res.broken_fraction = physical.samples.empty()
                              ? 0.0
                              : static_cast<double>(broken_samples) / physical.samples.size();
    return res;
}

}  // namespace qaw
