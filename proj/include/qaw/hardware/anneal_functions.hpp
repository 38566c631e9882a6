// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Tabulated annealing energy scales A(s) (driver) and B(s) (problem), in GHz
// with h = 1, plus the operating temperature in mK.  From these follow the two
// dimensionless fluctuation scales that delineate the anneal's regimes:
// Q(s) = A(s)/B(s) (quantum) and C(s) = k_B T / B(s) (thermal).
//
// Real devices publish these tables; the repo ships two synthetic defaults
// that only match the qualitative shapes (one B-ends-higher table at 12.1 mK,
// one earlier-A-decay table at 15.8 mK).  They are clearly labeled synthetic
// and carry no quantitative claim.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qaw {

// k_B in GHz per mK with h = 1 (k_B / h).
inline constexpr double kBoltzmannGHzPerMilliKelvin = 0.020836619;

struct AnnealFunctions {
    std::vector<double> s;  // strictly increasing in [0, 1]
    std::vector<double> A;  // GHz, non-increasing, A(1) ~ 0
    std::vector<double> B;  // GHz, non-decreasing, B(0) ~ 0
    double temperature_mK = 0.0;
    std::string label;

    // Linear interpolation on the sample grid, clamped at the ends.
    double A_at(double sv) const;
    double B_at(double sv) const;

    // Checks grid monotonicity, A/B monotonicity and endpoint conditions.
    std::vector<std::string> validate(double endpoint_tol = 0.05) const;
};

struct ScaleTables {
    std::vector<double> s;
    std::vector<double> Q;  // A/B; +infinity where B ~ 0
    std::vector<double> C;  // k_B T / B; +infinity where B ~ 0
};

// Q(s) and C(s) on the table's own grid.  Entries where B is (near) zero are
// reported as +infinity markers rather than dividing by zero.
ScaleTables scales(const AnnealFunctions& f, double b_floor = 1e-12);

struct RegimeReport {
    // Regime I: Q/C > rho (quantum fluctuations dominate).
    // Regime III: Q/C < 1/rho (thermal fluctuations dominate).
    // Regime II: in between.  Boundaries are interpolated s values; absent
    // when the regime does not occur on the grid.
    std::optional<double> s_I_end;
    std::optional<double> s_III_start;
    std::vector<double> crossings;  // all s with Q = C, interpolated
    bool monotone = true;           // false => Q/C was non-monotone (warning)
};

// Classifies the anneal into the three regimes given threshold rho > 1 and
// reports the Q = C crossing point(s).
RegimeReport classify_regimes(const ScaleTables& t, double rho = 10.0);

// CSV format: first line "temperature_mK=<value>", then a "s,A_GHz,B_GHz"
// header, then one row per sample.
std::string anneal_functions_to_csv(const AnnealFunctions& f);
AnnealFunctions anneal_functions_from_csv(const std::string& csv);

// Built-in synthetic tables: "dw2000q_like" (12.1 mK, B ends higher) and
// "advantage_like" (15.8 mK, A decays earlier).  Throws on unknown names.
AnnealFunctions builtin_anneal_functions(const std::string& name);

}  // namespace qaw
