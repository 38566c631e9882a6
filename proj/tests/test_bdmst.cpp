// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "qaw/problems/instance.hpp"
#include "qaw/solve/solvers.hpp"

namespace qaw {
namespace {

// Star center 0 with cheap spokes and an expensive rim; at delta = 2 the
// center cannot keep all three spokes, so one rim edge (weight 10) is forced.
BdMstInstance star_instance(int delta) {
    BdMstInstance inst;
    inst.n = 4;
    inst.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 10}, {2, 3, 10}};
    inst.delta = delta;
    return inst;
}

BdMstInstance triangle_instance() {
    BdMstInstance inst;
    inst.n = 3;
    inst.edges = {{0, 1, 2}, {0, 2, 3}, {1, 2, 5}};
    inst.delta = 2;
    return inst;
}

Assignment ground_of(const QuboModel& q) {
    auto bf = brute_force(qubo_to_ising(q));
    REQUIRE(!bf.ground_states.empty());
    return to_binary(bf.ground_states.front());
}

TEST_CASE("bdmst oracle: hand instances") {
    // Triangle with weights (1,2,3): three spanning trees, best drops the
    // heaviest edge.
    BdMstInstance tri;
    tri.n = 3;
    tri.edges = {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}};
    tri.delta = 2;
    CHECK(bdmst_oracle(tri) == 3);

    // Pure star K_{1,3}: the center is forced to degree 3, so delta = 2 has
    // no qualifying tree at all.
    BdMstInstance k13;
    k13.n = 4;
    k13.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    k13.delta = 2;
    CHECK(!bdmst_oracle(k13).has_value());
    k13.delta = 3;
    CHECK(bdmst_oracle(k13) == 3);  // a tree input is its own unique tree

    CHECK(bdmst_oracle(star_instance(2)) == 12);  // two spokes + one rim edge
    CHECK(bdmst_oracle(star_instance(3)) == 3);   // all three spokes

    // Oracle refuses instances beyond the enumeration guard.
    BdMstInstance big;
    big.n = 10;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) big.edges.emplace_back(u, v, 1);
    big.delta = 3;
    CHECK_THROWS_AS(bdmst_oracle(big), std::invalid_argument);
}

TEST_CASE("bdmst level preprocessing") {
    BdMstInstance path;
    path.n = 3;
    path.edges = {{0, 1, 1}, {1, 2, 1}};
    path.delta = 2;
    path.root = 0;
    auto levels = level_preprocess(path);
    CHECK(levels.at(0) == 1);  // the root sits at level 1
    CHECK(levels.at(1) == 2);
    CHECK(levels.at(2) == 3);  // distance 2 from the root

    BdMstInstance k5;
    k5.n = 5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.edges.emplace_back(u, v, 1);
    k5.delta = 4;
    k5.root = 2;
    auto k5_levels = level_preprocess(k5);
    for (int v = 0; v < 5; ++v) CHECK(k5_levels.at(v) == (v == 2 ? 1 : 2));

    BdMstInstance split;
    split.n = 4;
    split.edges = {{0, 1, 1}, {2, 3, 1}};
    split.delta = 2;
    CHECK_THROWS_AS(level_preprocess(split), std::invalid_argument);
}

TEST_CASE("bdmst qubo: preprocessing changes size, not the optimum") {
    auto tri = triangle_instance();
    auto pre = build_bdmst_qubo(tri, {true});
    auto plain = build_bdmst_qubo(tri, {false});
    CHECK(pre.qubo.n_vars == 11);
    CHECK(plain.qubo.n_vars == 16);
    CHECK(pre.oracle_optimum == 5.0);
    CHECK(plain.oracle_optimum == 5.0);

    // Both variants brute-force to the oracle optimum and their ground states
    // decode to the same tree cost with zero penalties.
    for (const auto* pi : {&pre, &plain}) {
        auto bf = brute_force(qubo_to_ising(pi->qubo));
        CHECK(bf.energy == doctest::Approx(5.0).epsilon(1e-12));
        for (const auto& g : bf.ground_states) {
            auto d = decode_bdmst(to_binary(g), *pi);
            CHECK(d.feasible);
            CHECK(d.cost == 5);
            CHECK(d.pen1 == 0.0);
            CHECK(d.pen2 == 0.0);
            CHECK(d.pen3 == 0.0);
            CHECK(d.pen4 == 0.0);
            CHECK(is_oracle_optimum(to_binary(g), *pi));
        }
    }
}

TEST_CASE("bdmst qubo: degree bound is active at the ground state") {
    // At delta = 2 the cheap all-spokes tree (weight 3) is infeasible; the
    // QUBO minimum must pay for a rim edge instead.
    auto pi2 = build_bdmst_qubo(star_instance(2));
    REQUIRE(pi2.qubo.n_vars == 25);
    auto g2 = ground_of(pi2.qubo);
    auto d2 = decode_bdmst(g2, pi2);
    CHECK(d2.feasible);
    CHECK(d2.cost == 12);
    int center_degree = 0;
    for (auto [p, v] : d2.tree_edges) center_degree += (p == 0) + (v == 0);
    CHECK(center_degree <= 2);

    // delta = 3 (29 variables, past the brute-force guard): the all-spokes
    // tree encodes to the oracle optimum.
    auto pi3 = build_bdmst_qubo(star_instance(3));
    auto enc = encode_bdmst(pi3, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(energy(pi3.qubo, enc) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(is_oracle_optimum(enc, pi3));
}

TEST_CASE("bdmst decode: violation reporting") {
    auto tri = triangle_instance();
    auto pi = build_bdmst_qubo(tri);
    int root = tri.resolved_root();

    // All zeros: every non-root vertex has no parent (pen1) and no level
    // (pen2).
    Assignment zeros = Assignment::binary(std::vector<int8_t>(pi.qubo.n_vars, 0));
    auto dz = decode_bdmst(zeros, pi);
    CHECK(!dz.feasible);
    CHECK(dz.pen1_vertices.size() == 2);
    CHECK(dz.pen2_vertices.size() == 2);
    CHECK(dz.pen1 == doctest::Approx(2.0));  // (0-1)^2 per vertex
    CHECK(dz.pen2 == doctest::Approx(2.0));

    // Start from a feasible encoding and give one vertex a second parent:
    // pen1 becomes (2-1)^2 = 1 at exactly that vertex.
    auto enc = encode_bdmst(pi, {{0, 1}, {0, 2}});
    auto base = decode_bdmst(enc, pi);
    REQUIRE(base.feasible);
    const auto& info = std::get<BdMstDecoderInfo>(pi.decoder);
    int doubled = -1;
    auto vals = enc.values;
    for (const auto& [v, xs] : info.pen1_groups) {
        for (int xi : xs)
            if (vals[xi] == 0 && doubled < 0) {
                vals[xi] = 1;
                doubled = v;
            }
        if (doubled >= 0) break;
    }
    REQUIRE(doubled >= 0);
    REQUIRE(doubled != root);
    auto dd = decode_bdmst(Assignment::binary(std::move(vals)), pi);
    CHECK(!dd.feasible);
    CHECK(dd.pen1_vertices == std::vector<int>{doubled});
    CHECK(dd.pen1 == doctest::Approx(1.0));
}

TEST_CASE("bdmst encode / decode round trip") {
    auto pi = build_bdmst_qubo(star_instance(2));
    // Optimal tree: spokes 0-1, 0-2 plus rim 2-3.
    std::vector<std::pair<int, int>> tree = {{0, 1}, {0, 2}, {2, 3}};
    auto enc = encode_bdmst(pi, tree);
    CHECK(energy(pi.qubo, enc) == doctest::Approx(12.0).epsilon(1e-12));
    auto d = decode_bdmst(enc, pi);
    CHECK(d.feasible);
    CHECK(d.cost == 12);
    std::set<std::pair<int, int>> got(d.tree_edges.begin(), d.tree_edges.end());
    std::set<std::pair<int, int>> want(tree.begin(), tree.end());
    CHECK(got == want);
    CHECK(is_oracle_optimum(enc, pi));

    // Encoding a tree that breaks the degree bound must be rejected.
    CHECK_THROWS_AS(encode_bdmst(pi, {{0, 1}, {0, 2}, {0, 3}}), std::invalid_argument);
}

TEST_CASE("bdmst quadratization primitives") {
    // The ancilla penalty is zero exactly on consistent rows and positive on
    // the four inconsistent ones.
    for (int x : {0, 1})
        for (int y : {0, 1})
            for (int a : {0, 1}) {
                if (a == x * y)
                    CHECK(quad_f(x, y, a) == 0.0);
                else
                    CHECK(quad_f(x, y, a) > 0.0);
            }
    // With a consistent ancilla the replacement reproduces x*y*(1-w); an
    // inconsistent ancilla never goes below it.
    for (int x : {0, 1})
        for (int y : {0, 1})
            for (int w : {0, 1}) {
                double original = x * y * (1 - w);
                CHECK(quad_replacement(x, y, w, x * y) == doctest::Approx(original));
                CHECK(quad_replacement(x, y, w, 1 - x * y) >= original);
            }
}

}  // namespace
}  // namespace qaw
