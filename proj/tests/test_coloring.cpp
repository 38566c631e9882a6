// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "qaw/problems/generators.hpp"
#include "qaw/rng.hpp"
#include "qaw/problems/instance.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {
namespace {

GcInstance cycle(int n, int k) {
    GcInstance inst;
    inst.n = n;
    inst.k = k;
    for (int v = 0; v < n; ++v) inst.edges.emplace_back(std::min(v, (v + 1) % n),
                                                        std::max(v, (v + 1) % n));
    return inst;
}

GcInstance petersen(int k) {
    GcInstance inst;
    inst.n = 10;
    inst.k = k;
    // Outer 5-cycle, inner pentagram, spokes.
    for (int v = 0; v < 5; ++v) {
        inst.edges.emplace_back(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5));
        inst.edges.emplace_back(5 + std::min(v, (v + 2) % 5), 5 + std::max(v, (v + 2) % 5));
        inst.edges.emplace_back(v, v + 5);
    }
    return inst;
}

TEST_CASE("gc oracle: hand instances") {
    CHECK(gc_oracle(cycle(3, 3)) == 0);  // triangle is 3-colorable
    CHECK(gc_oracle(cycle(3, 2)) == 1);  // one edge must clash
    CHECK(gc_oracle(cycle(5, 2)) == 1);  // odd cycle
    CHECK(gc_oracle(cycle(6, 2)) == 0);  // even cycle is bipartite

    GcInstance k4;
    k4.n = 4;
    k4.k = 3;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.edges.emplace_back(u, v);
    CHECK(gc_oracle(k4) == 1);

    CHECK(gc_oracle(petersen(2)) == 3);  // odd girth forces one clash per odd cycle
    CHECK(gc_oracle(petersen(3)) == 0);  // Petersen is 3-chromatic

    GcInstance big = cycle(30, 4);  // 4^30 colorings: over the guard
    CHECK_THROWS_AS(gc_oracle(big), std::invalid_argument);
}

TEST_CASE("gc qubo: triangle grounds at the oracle with all proper colorings") {
    auto pi3 = build_gc_qubo(cycle(3, 3));
    CHECK(pi3.qubo.n_vars == 9);
    CHECK(pi3.oracle_optimum == 0.0);
    auto bf = brute_force(qubo_to_ising(pi3.qubo));
    CHECK(bf.energy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bf.ground_states.size() == 6);  // 3! proper colorings
    for (const auto& g : bf.ground_states) {
        auto d = decode_gc(to_binary(g), pi3);
        CHECK(d.feasible);
        CHECK(d.conflicts == 0);
        CHECK(d.onehot_penalty == 0.0);
        CHECK(is_oracle_optimum(to_binary(g), pi3));
    }

    // k = 2 cannot color a triangle: ground energy 1, matching the oracle.
    auto pi2 = build_gc_qubo(cycle(3, 2));
    auto bf2 = brute_force(qubo_to_ising(pi2.qubo));
    CHECK(bf2.energy == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gc qubo: petersen at k=2 grounds at three conflicts") {
    auto pi = build_gc_qubo(petersen(2));
    CHECK(pi.qubo.n_vars == 20);
    CHECK(pi.oracle_optimum == 3.0);
    auto bf = brute_force(qubo_to_ising(pi.qubo));
    CHECK(bf.energy == doctest::Approx(3.0).epsilon(1e-12));
    // At least one ground state is a genuine 2-coloring with 3 clashes (not a
    // one-hot cheat).
    bool found_proper = false;
    for (const auto& g : bf.ground_states) {
        auto d = decode_gc(to_binary(g), pi);
        if (d.feasible && d.conflicts == 3) found_proper = true;
    }
    CHECK(found_proper);
}

TEST_CASE("gc encode / decode round trip") {
    auto pi = build_gc_qubo(cycle(5, 3));
    std::vector<int> colors = {0, 1, 0, 1, 2};
    auto enc = encode_gc(pi, colors);
    CHECK(energy(pi.qubo, enc) == doctest::Approx(0.0).epsilon(1e-12));
    auto d = decode_gc(enc, pi);
    CHECK(d.feasible);
    CHECK(d.colors == colors);
    CHECK(d.conflicts == 0);

    CHECK_THROWS_AS(encode_gc(pi, {0, 1}), std::invalid_argument);      // wrong length
    CHECK_THROWS_AS(encode_gc(pi, {0, 1, 0, 1, 3}), std::invalid_argument);  // color out of range
}

TEST_CASE("gc decode: one-hot violations are penalized, not misread") {
    auto pi = build_gc_qubo(cycle(3, 3));
    // Vertex 0 with no color at all: penalty (0-1)^2 = 1.
    std::vector<int8_t> vals(pi.qubo.n_vars, 0);
    vals[1 * 3 + 0] = 1;  // vertex 1 color 0
    vals[2 * 3 + 1] = 1;  // vertex 2 color 1
    auto d0 = decode_gc(Assignment::binary(vals), pi);
    CHECK(!d0.feasible);
    CHECK(d0.onehot_penalty == doctest::Approx(1.0));

    // Vertex 0 with two colors: penalty (2-1)^2 = 1 and energy adds any
    // conflicts those colors create.
    vals[0 * 3 + 0] = 1;
    vals[0 * 3 + 1] = 1;
    auto d2 = decode_gc(Assignment::binary(vals), pi);
    CHECK(!d2.feasible);
    CHECK(d2.onehot_penalty == doctest::Approx(1.0));
}

TEST_CASE("gc generator: planted instances are k-colorable") {
    for (int i = 0; i < 12; ++i) {
        int n = 6 + i % 5;
        int k = 2 + i % 3;
        auto inst = random_gc_instance(derive_seed(31, {static_cast<std::uint64_t>(i)}), n, k);
        CHECK(inst.n == n);
        CHECK(inst.k == k);
        CHECK(gc_oracle(inst) == 0);
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : inst.edges) {
            CHECK(u < v);
            CHECK(v < n);
            CHECK(seen.insert(std::pair<int, int>{u, v}).second);  // simple graph
        }
    }
    // Deterministic in the seed.
    auto a = random_gc_instance(7, 8, 3);
    auto b = random_gc_instance(7, 8, 3);
    CHECK(a.edges == b.edges);
    CHECK_THROWS_AS(random_gc_instance(1, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_gc_instance(1, 1, 2), std::invalid_argument);
}

}  // namespace
}  // namespace qaw
