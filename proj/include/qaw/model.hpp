// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical QUBO / Ising data model: energy evaluation, exact conversion
// between the binary (x in {0,1}) and spin (s in {-1,+1}) forms under
// x = (1+s)/2, and full / partial gauge (spin-reversal) transforms.
//
// Models are plain value types with ordered coefficient maps; keys are
// unordered index pairs stored with i < j.  Models are immutable by
// convention once built and safe to share across threads.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaw {

using PairKey = std::pair<int, int>;

inline PairKey make_pair_key(int i, int j) {
    if (i == j) throw std::invalid_argument("coefficient pair must join distinct indices");
    return i < j ? PairKey{i, j} : PairKey{j, i};
}

struct QuboModel {
    int n_vars = 0;
    std::map<int, double> linear;
    std::map<PairKey, double> quadratic;
    double offset = 0.0;

    void add_linear(int i, double v) {
        check_index(i);
        if (v == 0.0) return;
        if ((linear[i] += v) == 0.0) linear.erase(i);
    }
    void add_quadratic(int i, int j, double v) {
        check_index(i);
        check_index(j);
        if (v == 0.0) return;
        PairKey k = make_pair_key(i, j);
        if ((quadratic[k] += v) == 0.0) quadratic.erase(k);
    }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= n_vars) throw std::out_of_range("variable index out of range");
    }
};

struct IsingModel {
    int n_spins = 0;
    std::map<int, double> h;
    std::map<PairKey, double> J;
    double offset = 0.0;

    void add_h(int i, double v) {
        check_index(i);
        if (v == 0.0) return;
        if ((h[i] += v) == 0.0) h.erase(i);
    }
    void add_J(int i, int j, double v) {
        check_index(i);
        check_index(j);
        if (v == 0.0) return;
        PairKey k = make_pair_key(i, j);
        if ((J[k] += v) == 0.0) J.erase(k);
    }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= n_spins) throw std::out_of_range("spin index out of range");
    }
};

enum class VarMode { binary, spin };

struct Assignment {
    VarMode mode = VarMode::spin;
    std::vector<int8_t> values;  // {0,1} in binary mode, {-1,+1} in spin mode

    static Assignment binary(std::vector<int8_t> v) { return {VarMode::binary, std::move(v)}; }
    static Assignment spin(std::vector<int8_t> v) { return {VarMode::spin, std::move(v)}; }
};

struct GaugeVector {
    std::vector<int8_t> signs;  // {-1,+1}
};

// Energy of an assignment.  Throws on mode or length mismatch.
double energy(const IsingModel& m, const Assignment& a);
double energy(const QuboModel& q, const Assignment& a);

// Exact conversions under x = (1+s)/2; energies agree on every assignment.
IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& m);

// Map a binary assignment to the equivalent spin assignment and back.
Assignment to_spin(const Assignment& a);
Assignment to_binary(const Assignment& a);

// Gauge transforms.  A full gauge maps h_i -> g_i h_i, J_ij -> g_i g_j J_ij.
// When partial_threshold is set, couplings with |J_ij| > threshold are exempt:
// the gauge signs of their endpoints are forced to +1 before the transform, so
// those couplings (and their endpoint fields) are left unchanged.
// effective_gauge returns the sign vector actually applied, which callers need
// to un-gauge samples drawn from the transformed model.
GaugeVector effective_gauge(const IsingModel& m, const GaugeVector& g,
                            std::optional<double> partial_threshold);
IsingModel apply_gauge(const IsingModel& m, const GaugeVector& g,
                       std::optional<double> partial_threshold = std::nullopt);

// Apply gauge signs to a spin assignment (an involution: g ⊙ (g ⊙ s) = s).
Assignment apply_gauge(const Assignment& a, const GaugeVector& g);

// Adds weight * (sum_i coef_i * x_i + constant)^2 to the model (binary x, so
// x^2 = x).  The expansion constant lands in q.offset.  Indices may repeat;
// repeated indices accumulate as x * x = x.
void add_weighted_square(QuboModel& q, const std::vector<std::pair<int, double>>& terms,
                         double constant, double weight);

// Ratio max|coef| / min|nonzero coef| across h and J (or linear/quadratic).
// Returns nullopt when the model has no nonzero coefficients.  Callers emit a
// warning when the ratio exceeds a precision budget (default 1e4): coupler
// programming resolution makes such models unreliable on hardware.
std::optional<double> coefficient_ratio(const IsingModel& m);
std::optional<double> coefficient_ratio(const QuboModel& q);
inline constexpr double kDefaultPrecisionRatio = 1e4;

}  // namespace qaw
