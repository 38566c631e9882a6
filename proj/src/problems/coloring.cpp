// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Graph coloring as a QUBO: one binary variable x(v, i) per vertex/color pair,
// H = sum_v (1 - sum_i x(v,i))^2 + sum_{(u,v) in E} sum_i x(u,i) x(v,i).
// The one-hot square is the penalty group; the conflict count is the
// objective.  H = 0 exactly when a proper k-coloring exists.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qaw/problems/instance.hpp"

namespace qaw {

namespace {

void validate(const GcInstance& inst) {
    if (inst.n < 1) throw std::invalid_argument("gc: need at least one vertex");
    if (inst.k < 1) throw std::invalid_argument("gc: need at least one color");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : inst.edges) {
        if (u < 0 || v < 0 || u >= inst.n || v >= inst.n || u == v)
            throw std::invalid_argument("gc: edge endpoint out of range");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("gc: duplicate edge");
    }
}

}  // namespace

ProblemInstance build_gc_qubo(const GcInstance& inst, bool with_oracle) {
    validate(inst);
    ProblemInstance pi;
    pi.cls = ProblemClass::graph_coloring;
    pi.source = inst;
    pi.penalty_weights["onehot"] = 1.0;

    GcDecoderInfo info;
    info.n = inst.n;
    info.k = inst.k;
    for (const auto& [u, v] : inst.edges)
        info.edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(info.edges.begin(), info.edges.end());

    for (int v = 0; v < inst.n; ++v)
        for (int i = 0; i < inst.k; ++i)
            pi.registry.add("x(" + std::to_string(v) + "," + std::to_string(i) + ")");

    QuboModel q;
    q.n_vars = inst.n * inst.k;
    for (int v = 0; v < inst.n; ++v) {
        std::vector<std::pair<int, double>> terms;
        for (int i = 0; i < inst.k; ++i) terms.emplace_back(v * inst.k + i, 1.0);
        add_weighted_square(q, terms, -1.0, 1.0);
    }
    for (const auto& [u, v] : info.edges)
        for (int i = 0; i < inst.k; ++i) q.add_quadratic(u * inst.k + i, v * inst.k + i, 1.0);

    pi.qubo = std::move(q);
    pi.decoder = std::move(info);

    double size = 1.0;
    for (int v = 0; v < inst.n; ++v) size *= inst.k;
    if (with_oracle && size <= 1e7) pi.oracle_optimum = static_cast<double>(gc_oracle(inst));
    return pi;
}

GcDecode decode_gc(const Assignment& a, const ProblemInstance& pi) {
    if (pi.cls != ProblemClass::graph_coloring) throw std::invalid_argument("decode_gc: wrong class");
    if (a.mode != VarMode::binary || static_cast<int>(a.values.size()) != pi.qubo.n_vars)
        throw std::invalid_argument("decode_gc: need a binary assignment of QUBO size");
    const auto& info = std::get<GcDecoderInfo>(pi.decoder);
    const auto& x = a.values;

    GcDecode d;
    d.colors.assign(info.n, -1);
    long long onehot = 0;
    for (int v = 0; v < info.n; ++v) {
        long long s = -1;
        int color = -1;
        for (int i = 0; i < info.k; ++i)
            if (x[v * info.k + i]) {
                s += 1;
                color = i;
            }
        onehot += s * s;
        if (s == 0) d.colors[v] = color;
    }
    long long conflicts = 0;
    for (const auto& [u, v] : info.edges)
        for (int i = 0; i < info.k; ++i) conflicts += x[u * info.k + i] * x[v * info.k + i];
    d.onehot_penalty = static_cast<double>(onehot);
    d.conflicts = conflicts;
    d.feasible = onehot == 0;
    return d;
}

Assignment encode_gc(const ProblemInstance& pi, const std::vector<int>& colors) {
    if (pi.cls != ProblemClass::graph_coloring) throw std::invalid_argument("encode_gc: wrong class");
    const auto& info = std::get<GcDecoderInfo>(pi.decoder);
    if (static_cast<int>(colors.size()) != info.n)
        throw std::invalid_argument("encode_gc: one color per vertex required");
    std::vector<int8_t> bits(pi.qubo.n_vars, 0);
    for (int v = 0; v < info.n; ++v) {
        if (colors[v] < 0 || colors[v] >= info.k)
            throw std::invalid_argument("encode_gc: color out of range");
        bits[v * info.k + colors[v]] = 1;
    }
    return Assignment::binary(std::move(bits));
}

long long gc_oracle(const GcInstance& inst) {
    validate(inst);
    double size = 1.0;
    for (int v = 0; v < inst.n; ++v) size *= inst.k;
    if (size > 1e7) throw std::invalid_argument("gc_oracle: guard k^n <= 1e7 exceeded");

    std::vector<int> colors(inst.n, 0);
    long long best = -1;
    while (true) {
        long long conflicts = 0;
        for (const auto& [u, v] : inst.edges)
            if (colors[u] == colors[v]) ++conflicts;
        if (best < 0 || conflicts < best) best = conflicts;
        if (best == 0) break;  // cannot do better than a proper coloring
        int pos = inst.n - 1;
        while (pos >= 0 && colors[pos] == inst.k - 1) {
            colors[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++colors[pos];
    }
    return best;
}

}  // namespace qaw
