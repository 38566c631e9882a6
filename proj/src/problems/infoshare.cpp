// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Information sharing as a QUBO.  Binary variable x(i, v, t) says "message i
// arrives at path node v at time t"; the sender node carries variables too
// (arrival = emission), so path connectivity constrains the first hop like any
// other.  Variables are pruned to t in [earliest arrival, t_h].
//
//   objective  sum_i c_i * (recipient arrival - duration - scheduled emission)
//   pen1       per (node, time): entering messages <= capacity, written as
//              (sum entries - sum unary slacks)^2; a group is emitted only
//              where the capacity is finite and at least one entry variable
//              exists, with B slack bits (none when B = 0).
//   pen2       per hop: pairs x(i,v,t) * x(i,v+1,t') for every t' < t + l --
//              the downstream node cannot fire sooner than the travel time
//              allows (and in particular not before the upstream node at all).
//   pen3       per (message, path node): exactly one arrival time.
//
// Weights: A1 = max_i c_i * (t_h - D_i - t_sched_i) + eps,
//          A2 = max(A1 bound, max over path hops of c_i * l) + eps,
//          A3 = max_i c_i * t_h + eps,
// or the single uniform weight 0.5 * sum_i c_i * sum_{t = earliest}^{t_h} t
// + eps when requested.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qaw/problems/instance.hpp"

namespace qaw {

int InfoMessage::hop_time(int u, int v) const {
    auto it = travel.find({std::min(u, v), std::max(u, v)});
    if (it == travel.end())
        throw std::invalid_argument("info: missing travel time for edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    return it->second;
}

int InfoMessage::duration() const {
    int d = 0;
    for (size_t j = 0; j + 1 < path.size(); ++j) d += hop_time(path[j], path[j + 1]);
    return d;
}

int InfoMessage::earliest_at(int position) const {
    int t = t_sched;
    for (int j = 0; j < position; ++j) t += hop_time(path[j], path[j + 1]);
    return t;
}

int InfoInstance::capacity(int node, int t) const {
    auto it = capacity_overrides.find({node, t});
    return it != capacity_overrides.end() ? it->second : default_capacity;
}

std::vector<std::string> InfoInstance::validate() const {
    std::vector<std::string> errors;
    if (n_nodes < 1) errors.push_back("need at least one node");
    if (messages.empty()) errors.push_back("need at least one message");
    if (epsilon <= 0.0) errors.push_back("epsilon must be positive");
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_nodes || v >= n_nodes || u == v) {
            errors.push_back("edge endpoint out of range");
            continue;
        }
        if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second)
            errors.push_back("duplicate edge");
    }
    for (size_t i = 0; i < messages.size(); ++i) {
        const auto& m = messages[i];
        const std::string tag = "message " + std::to_string(i) + ": ";
        if (m.path.size() < 2) {
            errors.push_back(tag + "path needs at least two nodes");
            continue;
        }
        bool path_ok = true;
        for (size_t j = 0; j + 1 < m.path.size(); ++j) {
            int u = m.path[j], v = m.path[j + 1];
            if (u < 0 || v < 0 || u >= n_nodes || v >= n_nodes ||
                !edge_set.count({std::min(u, v), std::max(u, v)})) {
                errors.push_back(tag + "path hop is not a network edge");
                path_ok = false;
                break;
            }
            auto it = m.travel.find({std::min(u, v), std::max(u, v)});
            if (it == m.travel.end() || it->second < 1) {
                errors.push_back(tag + "path hop lacks a positive travel time");
                path_ok = false;
                break;
            }
        }
        if (!path_ok) continue;
        if (m.delay_cost < 1) errors.push_back(tag + "delay cost must be >= 1");
        if (m.t_sched < 0) errors.push_back(tag + "scheduled emission must be >= 0");
        if (m.t_sched + m.duration() > t_h)
            errors.push_back(tag + "time horizon leaves no feasible arrival");
    }
    for (const auto& [key, b] : capacity_overrides)
        if (b < 0) errors.push_back("capacity overrides must be >= 0");
    return errors;
}

namespace {

std::string var_label(int i, int v, int t) {
    return "x(" + std::to_string(i) + "," + std::to_string(v) + "," + std::to_string(t) + ")";
}

}  // namespace

ProblemInstance build_info_qubo(const InfoInstance& inst, const InfoBuildOptions& options,
                                bool with_oracle) {
    auto errors = inst.validate();
    if (!errors.empty()) throw std::invalid_argument("info: " + errors.front());

    ProblemInstance pi;
    pi.cls = ProblemClass::info_sharing;
    pi.source = inst;
    pi.info_options = options;

    InfoDecoderInfo info;
    info.t_h = inst.t_h;

    VariableRegistry& reg = pi.registry;

    // --- arrival variables, pruned to [earliest, t_h].
    for (size_t i = 0; i < inst.messages.size(); ++i) {
        const auto& m = inst.messages[i];
        info.message_costs.push_back(m.delay_cost);
        info.message_durations.push_back(m.duration());
        info.message_t_sched.push_back(m.t_sched);
        for (size_t j = 0; j < m.path.size(); ++j) {
            InfoDecoderInfo::NodeVars nv;
            nv.message = static_cast<int>(i);
            nv.position = static_cast<int>(j);
            nv.node = m.path[j];
            nv.t_min = m.earliest_at(static_cast<int>(j));
            for (int t = nv.t_min; t <= inst.t_h; ++t)
                nv.var.push_back(reg.add(var_label(static_cast<int>(i), m.path[j], t)));
            info.node_vars.push_back(std::move(nv));
        }
    }

    // --- capacity groups: entries (path position >= 1) per (node, time).
    std::map<std::pair<int, int>, std::vector<int>> entries;  // (node, t) -> x indices
    for (const auto& nv : info.node_vars) {
        if (nv.position == 0) continue;  // the sender node is not "entered"
        for (size_t k = 0; k < nv.var.size(); ++k)
            entries[{nv.node, nv.t_min + static_cast<int>(k)}].push_back(nv.var[k]);
    }
    for (const auto& [key, xs] : entries) {
        int b = inst.capacity(key.first, key.second);
        if (b < 0) continue;  // unconstrained
        InfoDecoderInfo::CapacityGroup g;
        g.node = key.first;
        g.t = key.second;
        g.capacity = b;
        g.entries = xs;
        for (int k = 1; k <= b; ++k)
            g.slacks.push_back(reg.add("s(" + std::to_string(key.first) + "," +
                                       std::to_string(key.second) + "," + std::to_string(k) +
                                       ")"));
        info.pen1_groups.push_back(std::move(g));
    }

    // --- connectivity pairs per hop: the downstream node cannot fire before
    // upstream arrival + travel time.  Every pair (t_up, t_down) with
    // t_down < t_up + l is penalized -- including t_down <= t_up, so a
    // time-reversed assignment cannot dodge capacity groups by claiming an
    // early recipient arrival while parking intermediate nodes late.  Holding
    // (t_down > t_up + l) stays free: a node may buffer a message.
    {
        size_t base = 0;
        for (const auto& m : inst.messages) {
            for (size_t j = 0; j + 1 < m.path.size(); ++j) {
                const auto& up = info.node_vars[base + j];
                const auto& down = info.node_vars[base + j + 1];
                int l = m.hop_time(m.path[j], m.path[j + 1]);
                for (int t = up.t_min; t <= inst.t_h; ++t) {
                    int tp_max = std::min(t + l - 1, inst.t_h);
                    for (int tp = down.t_min; tp <= tp_max; ++tp)
                        info.pen2_pairs.emplace_back(up.var[t - up.t_min],
                                                     down.var[tp - down.t_min]);
                }
            }
            base += m.path.size();
        }
    }

    // --- penalty weights.  A single violated connectivity pair can buy at
    // most the full objective span (recipient jumps from t_h to its earliest
    // slot while one upstream node stays put), so A2 must cover that gain,
    // not just one hop's worth.
    double a1 = 0, a2 = 0, a3 = 0;
    for (size_t i = 0; i < inst.messages.size(); ++i) {
        const auto& m = inst.messages[i];
        a1 = std::max(a1, static_cast<double>(m.delay_cost) *
                              (inst.t_h - info.message_durations[i] - m.t_sched));
        for (size_t j = 0; j + 1 < m.path.size(); ++j)
            a2 = std::max(a2, static_cast<double>(m.delay_cost) *
                                  m.hop_time(m.path[j], m.path[j + 1]));
        a3 = std::max(a3, static_cast<double>(m.delay_cost) * inst.t_h);
    }
    a2 = std::max(a2, a1);
    double A1 = a1 + inst.epsilon, A2 = a2 + inst.epsilon, A3 = a3 + inst.epsilon;
    if (options.uniform_penalty_weight) {
        double sum = 0;
        for (size_t i = 0; i < inst.messages.size(); ++i) {
            int t_min = inst.messages[i].t_sched + info.message_durations[i];
            for (int t = t_min; t <= inst.t_h; ++t) sum += inst.messages[i].delay_cost * t;
        }
        A1 = A2 = A3 = 0.5 * sum + inst.epsilon;
    }
    pi.penalty_weights = {{"A1", A1}, {"A2", A2}, {"A3", A3}};

    // --- assemble.
    QuboModel q;
    q.n_vars = static_cast<int>(reg.size());

    for (const auto& nv : info.node_vars) {
        if (nv.position != static_cast<int>(inst.messages[nv.message].path.size()) - 1) continue;
        double c = info.message_costs[nv.message];
        for (size_t k = 0; k < nv.var.size(); ++k)
            q.add_linear(nv.var[k], c * (nv.t_min + static_cast<int>(k)));
        q.offset -= c * (info.message_durations[nv.message] + info.message_t_sched[nv.message]);
    }
    for (const auto& g : info.pen1_groups) {
        std::vector<std::pair<int, double>> terms;
        for (int xi : g.entries) terms.emplace_back(xi, 1.0);
        for (int si : g.slacks) terms.emplace_back(si, -1.0);
        add_weighted_square(q, terms, 0.0, A1);
    }
    for (const auto& [u, d] : info.pen2_pairs) q.add_quadratic(u, d, A2);
    for (const auto& nv : info.node_vars) {
        std::vector<std::pair<int, double>> terms;
        for (int xi : nv.var) terms.emplace_back(xi, 1.0);
        add_weighted_square(q, terms, -1.0, A3);
    }

    pi.qubo = std::move(q);
    pi.decoder = std::move(info);

    if (with_oracle) {
        double size = 1.0;
        for (size_t i = 0; i < inst.messages.size() && size <= 1e7; ++i) {
            const auto& m = inst.messages[i];
            size *= inst.t_h - m.duration() - m.t_sched + 1;
        }
        if (size <= 1e7) {
            auto opt = info_oracle(inst);
            if (opt) pi.oracle_optimum = static_cast<double>(*opt);
        }
    }
    return pi;
}

InfoDecode decode_info(const Assignment& a, const ProblemInstance& pi) {
    if (pi.cls != ProblemClass::info_sharing)
        throw std::invalid_argument("decode_info: wrong class");
    if (a.mode != VarMode::binary || static_cast<int>(a.values.size()) != pi.qubo.n_vars)
        throw std::invalid_argument("decode_info: need a binary assignment of QUBO size");
    const auto& info = std::get<InfoDecoderInfo>(pi.decoder);
    const auto& inst = pi.info();
    const auto& x = a.values;

    InfoDecode d;
    d.arrivals.resize(inst.messages.size());
    d.emissions.assign(inst.messages.size(), -1);

    long long pen1 = 0, pen2 = 0, pen3 = 0;
    for (const auto& g : info.pen1_groups) {
        long long s = 0;
        for (int xi : g.entries) s += x[xi];
        for (int si : g.slacks) s -= x[si];
        pen1 += s * s;
    }
    for (const auto& [u, v] : info.pen2_pairs) pen2 += x[u] * x[v];
    for (const auto& nv : info.node_vars) {
        long long s = -1;
        int when = -1;
        for (size_t k = 0; k < nv.var.size(); ++k)
            if (x[nv.var[k]]) {
                s += 1;
                when = nv.t_min + static_cast<int>(k);
            }
        pen3 += s * s;
        auto& arr = d.arrivals[nv.message];
        if (arr.empty()) arr.assign(inst.messages[nv.message].path.size(), -1);
        arr[nv.position] = (s == 0) ? when : -1;
        if (nv.position == 0 && s == 0) d.emissions[nv.message] = when;
    }
    // Raw objective, exactly as built: sum over recipient variables of c*t*x,
    // minus the per-message constant.
    long long cost = 0;
    for (const auto& nv : info.node_vars) {
        if (nv.position != static_cast<int>(inst.messages[nv.message].path.size()) - 1) continue;
        long long c = info.message_costs[nv.message];
        for (size_t k = 0; k < nv.var.size(); ++k)
            cost += c * (nv.t_min + static_cast<int>(k)) * x[nv.var[k]];
        cost -= c * (info.message_durations[nv.message] + info.message_t_sched[nv.message]);
    }
    d.pen1 = static_cast<double>(pen1);
    d.pen2 = static_cast<double>(pen2);
    d.pen3 = static_cast<double>(pen3);
    d.cost = cost;
    d.feasible = pen1 == 0 && pen2 == 0 && pen3 == 0;
    return d;
}

Assignment encode_info(const ProblemInstance& pi, const std::vector<int>& emission_times) {
    if (pi.cls != ProblemClass::info_sharing)
        throw std::invalid_argument("encode_info: wrong class");
    const auto& info = std::get<InfoDecoderInfo>(pi.decoder);
    const auto& inst = pi.info();
    if (emission_times.size() != inst.messages.size())
        throw std::invalid_argument("encode_info: one emission time per message required");

    std::vector<int8_t> bits(pi.qubo.n_vars, 0);
    for (const auto& nv : info.node_vars) {
        const auto& m = inst.messages[nv.message];
        int t_em = emission_times[nv.message];
        if (t_em < m.t_sched)
            throw std::invalid_argument("encode_info: emission before the scheduled time");
        int t = t_em + (nv.t_min - m.t_sched);  // earliest_at is t_sched + prefix
        if (t > inst.t_h)
            throw std::invalid_argument("encode_info: arrival beyond the time horizon");
        bits[nv.var[t - nv.t_min]] = 1;
    }
    for (const auto& g : info.pen1_groups) {
        int count = 0;
        for (int xi : g.entries) count += bits[xi];
        if (count > static_cast<int>(g.slacks.size()))
            throw std::invalid_argument("encode_info: schedule violates a node capacity");
        for (int k = 0; k < count; ++k) bits[g.slacks[k]] = 1;
    }
    return Assignment::binary(std::move(bits));
}

std::optional<std::pair<std::vector<int>, long long>> info_oracle_schedule(
    const InfoInstance& inst) {
    auto errors = inst.validate();
    if (!errors.empty()) throw std::invalid_argument("info_oracle: " + errors.front());

    const size_t n = inst.messages.size();
    std::vector<int> lo(n), hi(n);
    double size = 1.0;
    for (size_t i = 0; i < n; ++i) {
        lo[i] = inst.messages[i].t_sched;
        hi[i] = inst.t_h - inst.messages[i].duration();
        size *= hi[i] - lo[i] + 1;
        if (size > 1e7)
            throw std::invalid_argument("info_oracle: guard on emission tuples exceeded");
    }

    // Precompute entry offsets (prefix travel times) per message.
    std::vector<std::vector<int>> offsets(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& m = inst.messages[i];
        int acc = 0;
        for (size_t j = 0; j + 1 < m.path.size(); ++j) {
            acc += m.hop_time(m.path[j], m.path[j + 1]);
            offsets[i].push_back(acc);  // arrival offset of path node j+1
        }
    }

    std::vector<int> t_em = lo;
    std::optional<std::pair<std::vector<int>, long long>> best;
    std::map<std::pair<int, int>, int> load;
    while (true) {
        load.clear();
        bool ok = true;
        long long cost = 0;
        for (size_t i = 0; i < n && ok; ++i) {
            const auto& m = inst.messages[i];
            cost += static_cast<long long>(m.delay_cost) * (t_em[i] - m.t_sched);
            for (size_t j = 0; j < offsets[i].size() && ok; ++j) {
                int node = m.path[j + 1];
                int t = t_em[i] + offsets[i][j];
                int b = inst.capacity(node, t);
                if (b >= 0 && ++load[{node, t}] > b) ok = false;
            }
        }
        if (ok && (!best || cost < best->second)) best = {t_em, cost};
        size_t pos = 0;
        while (pos < n && t_em[pos] == hi[pos]) {
            t_em[pos] = lo[pos];
            ++pos;
        }
        if (pos == n) break;
        ++t_em[pos];
    }
    return best;
}

std::optional<long long> info_oracle(const InfoInstance& inst) {
    auto best = info_oracle_schedule(inst);
    if (!best) return std::nullopt;
    return best->second;
}

}  // namespace qaw
