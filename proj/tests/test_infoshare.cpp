// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "qaw/problems/generators.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/rng.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {
namespace {

// Line network 0-1-2, unit travel times.
InfoInstance line_instance() {
    InfoInstance inst;
    inst.n_nodes = 3;
    inst.edges = {{0, 1}, {1, 2}};
    return inst;
}

InfoMessage message(std::vector<int> path, int cost, int t_sched = 0) {
    InfoMessage m;
    m.path = std::move(path);
    m.travel = {{{0, 1}, 1}, {{1, 2}, 1}};
    m.delay_cost = cost;
    m.t_sched = t_sched;
    return m;
}

// Two messages crossing the line in opposite directions; node 1 admits only
// one of them at t = 1, so one message must lose a step.
InfoInstance contention_instance(int c0 = 3, int c1 = 2) {
    auto inst = line_instance();
    inst.messages = {message({0, 1, 2}, c0), message({2, 1, 0}, c1)};
    inst.default_capacity = -1;
    inst.capacity_overrides[{1, 1}] = 1;
    inst.t_h = 4;
    return inst;
}

TEST_CASE("info message helpers") {
    auto m = message({0, 1, 2}, 2, 1);
    CHECK(m.hop_time(0, 1) == 1);
    CHECK(m.hop_time(1, 0) == 1);  // order-insensitive
    CHECK_THROWS_AS(m.hop_time(0, 2), std::invalid_argument);
    CHECK(m.duration() == 2);
    CHECK(m.earliest_at(0) == 1);  // the scheduled emission time
    CHECK(m.earliest_at(1) == 2);
    CHECK(m.earliest_at(2) == 3);
}

TEST_CASE("info instance validation") {
    auto inst = line_instance();
    inst.messages = {message({0, 1, 2}, 1)};
    inst.t_h = 2;
    CHECK(inst.validate().empty());

    inst.t_h = 1;  // horizon below duration + schedule
    CHECK(!inst.validate().empty());
    CHECK_THROWS_AS(build_info_qubo(inst), std::invalid_argument);

    inst.t_h = 3;
    inst.messages[0].path = {0, 2};  // not a graph edge
    CHECK(!inst.validate().empty());
}

TEST_CASE("info oracle: hand instances") {
    // A single unconstrained message is never delayed.
    auto free_inst = line_instance();
    free_inst.messages = {message({0, 1, 2}, 2)};
    free_inst.t_h = 3;
    CHECK(info_oracle(free_inst) == 0);

    // Crossing messages, capacity 1 at the shared node: delay the cheap one.
    CHECK(info_oracle(contention_instance(3, 2)) == 2);
    auto sched = info_oracle_schedule(contention_instance(3, 2));
    REQUIRE(sched.has_value());
    CHECK(sched->first == std::vector<int>{0, 1});
    CHECK(sched->second == 2);

    // The c = (2, 1) variant: optimal cost is exactly the cheap cost.
    CHECK(info_oracle(contention_instance(2, 1)) == 1);

    // A capacity that blocks every tuple is reported as infeasible.
    auto blocked = contention_instance();
    for (int t = 0; t <= blocked.t_h; ++t) blocked.capacity_overrides[{1, t}] = 0;
    CHECK(!info_oracle(blocked).has_value());
}

TEST_CASE("info qubo: variable pruning follows earliest arrivals") {
    auto inst = line_instance();
    inst.messages = {message({0, 1, 2}, 1)};
    inst.default_capacity = 1;
    inst.t_h = 3;
    auto pi = build_info_qubo(inst);

    // Sender variables start at the scheduled time, the intermediate node one
    // hop later, the recipient two hops later.
    for (int t = 0; t <= 3; ++t) CHECK(pi.registry.contains("x(0,0," + std::to_string(t) + ")"));
    CHECK(!pi.registry.contains("x(0,1,0)"));
    for (int t = 1; t <= 3; ++t) CHECK(pi.registry.contains("x(0,1," + std::to_string(t) + ")"));
    CHECK(!pi.registry.contains("x(0,2,1)"));
    for (int t = 2; t <= 3; ++t) CHECK(pi.registry.contains("x(0,2," + std::to_string(t) + ")"));

    // Ground state: on-time delivery, zero cost, zero penalties.
    CHECK(pi.oracle_optimum == 0.0);
    auto bf = brute_force(qubo_to_ising(pi.qubo));
    CHECK(bf.energy == doctest::Approx(0.0).epsilon(1e-9));
    for (const auto& g : bf.ground_states) {
        auto d = decode_info(to_binary(g), pi);
        CHECK(d.feasible);
        CHECK(d.cost == 0);
    }
}

TEST_CASE("info qubo: contention grounds at the oracle cost") {
    auto inst = contention_instance();
    auto pi = build_info_qubo(inst);
    CHECK(pi.oracle_optimum == 2.0);

    auto bf = brute_force(qubo_to_ising(pi.qubo));
    CHECK(bf.energy == doctest::Approx(2.0).epsilon(1e-9));
    // Every ground state is a feasible schedule at the oracle cost; reversed
    // or compressed arrival times would have to pay a connectivity penalty.
    bool found_oracle_schedule = false;
    for (const auto& g : bf.ground_states) {
        auto d = decode_info(to_binary(g), pi);
        CHECK(d.feasible);
        CHECK(d.cost == 2);
        CHECK(is_oracle_optimum(to_binary(g), pi));
        for (const auto& arr : d.arrivals)
            for (size_t j = 1; j < arr.size(); ++j) CHECK(arr[j] > arr[j - 1]);
        if (d.emissions == std::vector<int>{0, 1}) found_oracle_schedule = true;
    }
    CHECK(found_oracle_schedule);

    // The c = (2, 1) variant grounds at cost 1.
    auto cheap = build_info_qubo(contention_instance(2, 1));
    CHECK(brute_force(qubo_to_ising(cheap.qubo)).energy == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("info qubo: uniform penalty weight variant") {
    auto inst = contention_instance();
    auto pi = build_info_qubo(inst, {true});
    CHECK(pi.penalty_weights.at("A1") == pi.penalty_weights.at("A2"));
    CHECK(pi.penalty_weights.at("A2") == pi.penalty_weights.at("A3"));
    // Heavier weights, same ground energy and decoded optimum.
    auto bf = brute_force(qubo_to_ising(pi.qubo));
    CHECK(bf.energy == doctest::Approx(2.0).epsilon(1e-9));
    for (const auto& g : bf.ground_states) CHECK(is_oracle_optimum(to_binary(g), pi));
}

TEST_CASE("info encode / decode round trip") {
    auto inst = contention_instance();
    auto pi = build_info_qubo(inst);
    auto enc = encode_info(pi, {0, 1});
    CHECK(energy(pi.qubo, enc) == doctest::Approx(2.0).epsilon(1e-9));
    auto d = decode_info(enc, pi);
    CHECK(d.feasible);
    CHECK(d.emissions == std::vector<int>{0, 1});
    CHECK(d.arrivals[0] == std::vector<int>{0, 1, 2});
    CHECK(d.arrivals[1] == std::vector<int>{1, 2, 3});
    CHECK(d.cost == 2);

    CHECK_THROWS_AS(encode_info(pi, {0}), std::invalid_argument);       // wrong arity
    CHECK_THROWS_AS(encode_info(pi, {0, 0}), std::invalid_argument);    // violates capacity
    CHECK_THROWS_AS(encode_info(pi, {0, 4}), std::invalid_argument);    // beyond the horizon
}

TEST_CASE("info generator: single-step contention with exact oracle") {
    for (int i = 0; i < 10; ++i) {
        auto inst = random_info_instance(derive_seed(77, {static_cast<std::uint64_t>(i)}), 2);
        CHECK(inst.validate().empty());
        CHECK(inst.capacity_overrides.size() <= 1);
        auto opt = info_oracle(inst);
        REQUIRE(opt.has_value());
        CHECK(*opt >= 0);
    }
    auto a = random_info_instance(11, 3);
    auto b = random_info_instance(11, 3);
    CHECK(a.messages.size() == b.messages.size());
    CHECK(a.t_h == b.t_h);
    CHECK(a.capacity_overrides == b.capacity_overrides);
}

}  // namespace
}  // namespace qaw
