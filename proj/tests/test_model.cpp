// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <set>

#include "qaw/model.hpp"
#include "qaw/rng.hpp"

namespace qaw {
namespace {

// Every binary assignment of n variables, in counting order.
std::vector<Assignment> all_binary(int n) {
    std::vector<Assignment> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int8_t> v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        out.push_back(Assignment::binary(std::move(v)));
    }
    return out;
}

std::vector<Assignment> all_spin(int n) {
    std::vector<Assignment> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int8_t> v(n);
        for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1) ? 1 : -1;
        out.push_back(Assignment::spin(std::move(v)));
    }
    return out;
}

IsingModel random_ising(Rng& rng, int n) {
    IsingModel m;
    m.n_spins = n;
    m.offset = rng.uniform(-2.0, 2.0);
    for (int i = 0; i < n; ++i) m.add_h(i, rng.uniform(-2.0, 2.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(0.6)) m.add_J(i, j, rng.uniform(-2.0, 2.0));
    return m;
}

TEST_CASE("qubo energy on a hand-computed 2-variable model") {
    QuboModel q;
    q.n_vars = 2;
    q.offset = 1.0;
    q.add_linear(0, 2.0);
    q.add_linear(1, -3.0);
    q.add_quadratic(0, 1, 4.0);

    CHECK(energy(q, Assignment::binary({0, 0})) == doctest::Approx(1.0));
    CHECK(energy(q, Assignment::binary({1, 0})) == doctest::Approx(3.0));
    CHECK(energy(q, Assignment::binary({0, 1})) == doctest::Approx(-2.0));
    CHECK(energy(q, Assignment::binary({1, 1})) == doctest::Approx(4.0));
}

TEST_CASE("coefficient accumulation erases exact zeros and rejects bad indices") {
    QuboModel q;
    q.n_vars = 3;
    q.add_linear(1, 2.5);
    q.add_linear(1, -2.5);
    CHECK(q.linear.empty());
    q.add_quadratic(0, 2, 1.0);
    q.add_quadratic(2, 0, -1.0);  // same unordered pair
    CHECK(q.quadratic.empty());
    CHECK_THROWS_AS(q.add_linear(3, 1.0), std::out_of_range);
    CHECK_THROWS_AS(q.add_quadratic(0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair_key(2, 2), std::invalid_argument);
}

TEST_CASE("qubo <-> ising conversion preserves the energy of every assignment") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_int(5));
        QuboModel q;
        q.n_vars = n;
        q.offset = rng.uniform(-1.0, 1.0);
        for (int i = 0; i < n; ++i) q.add_linear(i, rng.uniform(-3.0, 3.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(0.5)) q.add_quadratic(i, j, rng.uniform(-3.0, 3.0));

        const IsingModel m = qubo_to_ising(q);
        const QuboModel q2 = ising_to_qubo(m);
        for (const auto& a : all_binary(n)) {
            const Assignment s = to_spin(a);
            CHECK(energy(m, s) == doctest::Approx(energy(q, a)).epsilon(1e-12));
            CHECK(energy(q2, a) == doctest::Approx(energy(q, a)).epsilon(1e-12));
            // x = (1+s)/2 maps back exactly
            const Assignment back = to_binary(s);
            CHECK(back.values == a.values);
        }
    }
}

TEST_CASE("full gauge transforms coefficients and preserves gauged energies") {
    Rng rng(42);
    const IsingModel m = random_ising(rng, 5);
    GaugeVector g;
    for (int i = 0; i < 5; ++i) g.signs.push_back(rng.sign() > 0 ? 1 : -1);

    const IsingModel gm = apply_gauge(m, g);
    for (const auto& [i, hv] : m.h) CHECK(gm.h.at(i) == doctest::Approx(g.signs[i] * hv));
    for (const auto& [k, jv] : m.J)
        CHECK(gm.J.at(k) == doctest::Approx(g.signs[k.first] * g.signs[k.second] * jv));

    for (const auto& s : all_spin(5)) {
        const Assignment gs = apply_gauge(s, g);
        CHECK(energy(gm, gs) == doctest::Approx(energy(m, s)).epsilon(1e-12));
        // involution
        const Assignment back = apply_gauge(gs, g);
        CHECK(back.values == s.values);
    }
}

TEST_CASE("partial gauge exempts strong couplings and their endpoints") {
    IsingModel m;
    m.n_spins = 4;
    m.add_h(0, 0.5);
    m.add_h(1, -0.25);
    m.add_h(3, 1.0);
    m.add_J(0, 1, -1.2);  // |J| > 1: endpoints must stay unflipped
    m.add_J(1, 2, 0.8);
    m.add_J(2, 3, -0.6);

    GaugeVector g{{-1, -1, -1, -1}};
    const GaugeVector eff = effective_gauge(m, g, 1.0);
    CHECK(eff.signs[0] == 1);  // forced by the strong coupling
    CHECK(eff.signs[1] == 1);
    CHECK(eff.signs[2] == -1);
    CHECK(eff.signs[3] == -1);

    const IsingModel gm = apply_gauge(m, g, 1.0);
    CHECK(gm.J.at({0, 1}) == doctest::Approx(-1.2));  // untouched
    CHECK(gm.h.at(0) == doctest::Approx(0.5));
    CHECK(gm.J.at({1, 2}) == doctest::Approx(-0.8));  // one endpoint flipped
    CHECK(gm.J.at({2, 3}) == doctest::Approx(-0.6));  // both endpoints flipped
    CHECK(gm.h.at(3) == doctest::Approx(-1.0));

    // Energy identity still holds with the effective gauge.
    for (const auto& s : all_spin(4))
        CHECK(energy(gm, apply_gauge(s, eff)) == doctest::Approx(energy(m, s)).epsilon(1e-12));
}

TEST_CASE("add_weighted_square expands (sum coef x + c)^2 exactly") {
    QuboModel q;
    q.n_vars = 3;
    // 2.5 * (x0 - 2 x1 + 3 x2 - 1)^2, with a repeated index folding via x^2 = x
    add_weighted_square(q, {{0, 1.0}, {1, -2.0}, {2, 3.0}}, -1.0, 2.5);
    for (const auto& a : all_binary(3)) {
        const double x0 = a.values[0], x1 = a.values[1], x2 = a.values[2];
        const double direct = 2.5 * std::pow(x0 - 2 * x1 + 3 * x2 - 1.0, 2);
        CHECK(energy(q, a) == doctest::Approx(direct).epsilon(1e-12));
    }

    QuboModel r;
    r.n_vars = 2;
    add_weighted_square(r, {{0, 1.0}, {0, 1.0}, {1, -1.0}}, 0.0, 1.0);  // (2 x0 - x1)^2
    for (const auto& a : all_binary(2)) {
        const double direct = std::pow(2.0 * a.values[0] - a.values[1], 2);
        CHECK(energy(r, a) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("coefficient ratio flags wide dynamic ranges") {
    IsingModel m;
    m.n_spins = 2;
    CHECK(!coefficient_ratio(m).has_value());
    m.add_h(0, 0.001);
    m.add_J(0, 1, -20.0);
    CHECK(coefficient_ratio(m).value() == doctest::Approx(20000.0));
    CHECK(coefficient_ratio(m).value() > kDefaultPrecisionRatio);
}

}  // namespace
}  // namespace qaw
