// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/model_io.hpp"

#include <charconv>

namespace qaw {

using nlohmann::json;

json to_json(const QuboModel& q) {
    json lin = json::array();
    for (const auto& [i, v] : q.linear) lin.push_back(json::array({i, v}));
    json quad = json::array();
    for (const auto& [k, v] : q.quadratic) quad.push_back(json::array({k.first, k.second, v}));
    return json{{"n_vars", q.n_vars}, {"linear", lin}, {"quadratic", quad}, {"offset", q.offset}};
}

QuboModel qubo_from_json(const json& j) {
    QuboModel q;
    q.n_vars = j.at("n_vars").get<int>();
    q.offset = j.value("offset", 0.0);
    for (const auto& e : j.at("linear")) q.add_linear(e.at(0).get<int>(), e.at(1).get<double>());
    for (const auto& e : j.at("quadratic"))
        q.add_quadratic(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
    return q;
}

json to_json(const IsingModel& m) {
    json h = json::array();
    for (const auto& [i, v] : m.h) h.push_back(json::array({i, v}));
    json J = json::array();
    for (const auto& [k, v] : m.J) J.push_back(json::array({k.first, k.second, v}));
    return json{{"n_spins", m.n_spins}, {"h", h}, {"J", J}, {"offset", m.offset}};
}

IsingModel ising_from_json(const json& j) {
    IsingModel m;
    m.n_spins = j.at("n_spins").get<int>();
    m.offset = j.value("offset", 0.0);
    for (const auto& e : j.at("h")) m.add_h(e.at(0).get<int>(), e.at(1).get<double>());
    for (const auto& e : j.at("J")) m.add_J(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
    return m;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

}  // namespace qaw
