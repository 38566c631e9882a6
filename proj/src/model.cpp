// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/model.hpp"

#include <algorithm>
#include <cmath>

namespace qaw {

namespace {

void check_assignment(VarMode expected, int n, const Assignment& a, const char* kind) {
    if (a.mode != expected) throw std::invalid_argument(std::string(kind) + ": assignment mode mismatch");
    if (static_cast<int>(a.values.size()) != n)
        throw std::invalid_argument(std::string(kind) + ": assignment length mismatch");
    for (int8_t v : a.values) {
        if (expected == VarMode::binary ? (v != 0 && v != 1) : (v != -1 && v != 1))
            throw std::invalid_argument(std::string(kind) + ": assignment value outside alphabet");
    }
}

}  // namespace

double energy(const IsingModel& m, const Assignment& a) {
    check_assignment(VarMode::spin, m.n_spins, a, "ising energy");
    double e = m.offset;
    for (const auto& [i, hi] : m.h) e += hi * a.values[i];
    for (const auto& [k, j] : m.J) e += j * a.values[k.first] * a.values[k.second];
    return e;
}

double energy(const QuboModel& q, const Assignment& a) {
    check_assignment(VarMode::binary, q.n_vars, a, "qubo energy");
    double e = q.offset;
    for (const auto& [i, c] : q.linear) e += c * a.values[i];
    for (const auto& [k, c] : q.quadratic) e += c * a.values[k.first] * a.values[k.second];
    return e;
}

IsingModel qubo_to_ising(const QuboModel& q) {
    IsingModel m;
    m.n_spins = q.n_vars;
    m.offset = q.offset;
    // x_i = (1 + s_i)/2:  a x_i -> a/2 s_i + a/2;  b x_i x_j -> b/4 (s_i s_j + s_i + s_j + 1).
    for (const auto& [i, a] : q.linear) {
        m.add_h(i, a / 2.0);
        m.offset += a / 2.0;
    }
    for (const auto& [k, b] : q.quadratic) {
        m.add_J(k.first, k.second, b / 4.0);
        m.add_h(k.first, b / 4.0);
        m.add_h(k.second, b / 4.0);
        m.offset += b / 4.0;
    }
    return m;
}

QuboModel ising_to_qubo(const IsingModel& m) {
    QuboModel q;
    q.n_vars = m.n_spins;
    q.offset = m.offset;
    // s_i = 2 x_i - 1:  h s_i -> 2h x_i - h;  J s_i s_j -> 4J x_i x_j - 2J x_i - 2J x_j + J.
    for (const auto& [i, h] : m.h) {
        q.add_linear(i, 2.0 * h);
        q.offset -= h;
    }
    for (const auto& [k, j] : m.J) {
        q.add_quadratic(k.first, k.second, 4.0 * j);
        q.add_linear(k.first, -2.0 * j);
        q.add_linear(k.second, -2.0 * j);
        q.offset += j;
    }
    return q;
}

Assignment to_spin(const Assignment& a) {
    if (a.mode == VarMode::spin) return a;
    Assignment out;
    out.mode = VarMode::spin;
    out.values.reserve(a.values.size());
    for (int8_t v : a.values) out.values.push_back(v ? 1 : -1);
    return out;
}

Assignment to_binary(const Assignment& a) {
    if (a.mode == VarMode::binary) return a;
    Assignment out;
    out.mode = VarMode::binary;
    out.values.reserve(a.values.size());
    for (int8_t v : a.values) out.values.push_back(v > 0 ? 1 : 0);
    return out;
}

GaugeVector effective_gauge(const IsingModel& m, const GaugeVector& g,
                            std::optional<double> partial_threshold) {
    if (static_cast<int>(g.signs.size()) != m.n_spins)
        throw std::invalid_argument("gauge length mismatch");
    GaugeVector eff = g;
    if (partial_threshold) {
        for (const auto& [k, j] : m.J) {
            if (std::abs(j) > *partial_threshold) {
                eff.signs[k.first] = 1;
                eff.signs[k.second] = 1;
            }
        }
    }
    return eff;
}

IsingModel apply_gauge(const IsingModel& m, const GaugeVector& g,
                       std::optional<double> partial_threshold) {
    GaugeVector eff = effective_gauge(m, g, partial_threshold);
    IsingModel out;
    out.n_spins = m.n_spins;
    out.offset = m.offset;
    for (const auto& [i, h] : m.h) out.add_h(i, eff.signs[i] * h);
    for (const auto& [k, j] : m.J) out.add_J(k.first, k.second, eff.signs[k.first] * eff.signs[k.second] * j);
    return out;
}

Assignment apply_gauge(const Assignment& a, const GaugeVector& g) {
    if (a.mode != VarMode::spin) throw std::invalid_argument("gauge applies to spin assignments");
    if (a.values.size() != g.signs.size()) throw std::invalid_argument("gauge length mismatch");
    Assignment out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = static_cast<int8_t>(out.values[i] * g.signs[i]);
    return out;
}

namespace {

template <typename Lin, typename Quad>
std::optional<double> ratio_impl(const Lin& lin, const Quad& quad) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    auto feed = [&](double v) {
        double av = std::abs(v);
        if (av == 0.0) return;
        if (!any) {
            lo = hi = av;
            any = true;
        } else {
            lo = std::min(lo, av);
            hi = std::max(hi, av);
        }
    };
    for (const auto& [i, v] : lin) {
        (void)i;
        feed(v);
    }
    for (const auto& [k, v] : quad) {
        (void)k;
        feed(v);
    }
    if (!any) return std::nullopt;
    return hi / lo;
}

}  // namespace

void add_weighted_square(QuboModel& q, const std::vector<std::pair<int, double>>& terms,
                         double constant, double weight) {
    // Accumulate repeated indices first so the cross-term expansion stays exact.
    std::map<int, double> coef;
    for (const auto& [i, c] : terms) coef[i] += c;
    q.offset += weight * constant * constant;
    for (auto it = coef.begin(); it != coef.end(); ++it) {
        const auto& [i, ci] = *it;
        q.add_linear(i, weight * (ci * ci + 2.0 * constant * ci));
        for (auto jt = std::next(it); jt != coef.end(); ++jt)
            q.add_quadratic(i, jt->first, weight * 2.0 * ci * jt->second);
    }
}

std::optional<double> coefficient_ratio(const IsingModel& m) { return ratio_impl(m.h, m.J); }
std::optional<double> coefficient_ratio(const QuboModel& q) { return ratio_impl(q.linear, q.quadratic); }

}  // namespace qaw
