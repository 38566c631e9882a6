// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/hardware/anneal_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qaw/model_io.hpp"

namespace qaw {

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (xs.empty()) throw std::logic_error("empty anneal function table");
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    // Binary search for the bracketing segment.
    size_t lo = 0, hi = xs.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (xs[mid] <= x)
            lo = mid;
        else
            hi = mid;
    }
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace

double AnnealFunctions::A_at(double sv) const { return interp(s, A, sv); }
double AnnealFunctions::B_at(double sv) const { return interp(s, B, sv); }

std::vector<std::string> AnnealFunctions::validate(double endpoint_tol) const {
    std::vector<std::string> v;
    if (s.size() < 2 || s.size() != A.size() || s.size() != B.size()) {
        v.push_back("table sizes inconsistent or too small");
        return v;
    }
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] <= s[i - 1]) v.push_back("s grid not strictly increasing");
        if (A[i] > A[i - 1] + 1e-9) v.push_back("A(s) not non-increasing");
        if (B[i] < B[i - 1] - 1e-9) v.push_back("B(s) not non-decreasing");
    }
    if (s.front() < 0.0 || s.back() > 1.0) v.push_back("s grid outside [0, 1]");
    const double a_scale = std::max(A.front(), 1e-30);
    const double b_scale = std::max(B.back(), 1e-30);
    if (A.back() > endpoint_tol * a_scale) v.push_back("A(1) not close to zero");
    if (B.front() > endpoint_tol * b_scale) v.push_back("B(0) not close to zero");
    if (temperature_mK < 0.0) v.push_back("temperature must be >= 0");
    return v;
}

ScaleTables scales(const AnnealFunctions& f, double b_floor) {
    ScaleTables t;
    t.s = f.s;
    const double kT = kBoltzmannGHzPerMilliKelvin * f.temperature_mK;
    const double inf = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < f.s.size(); ++i) {
        if (f.B[i] <= b_floor) {
            t.Q.push_back(inf);
            t.C.push_back(f.temperature_mK == 0.0 ? 0.0 : inf);
        } else {
            t.Q.push_back(f.A[i] / f.B[i]);
            t.C.push_back(kT / f.B[i]);
        }
    }
    return t;
}

RegimeReport classify_regimes(const ScaleTables& t, double rho) {
    if (rho <= 1.0 && !std::isinf(rho)) throw std::invalid_argument("rho must be > 1");
    RegimeReport r;
    // Ratio Q/C = A / (k_B T); C = 0 (zero temperature) makes the ratio infinite.
    auto ratio = [&](size_t i) {
        if (t.C[i] == 0.0) return std::numeric_limits<double>::infinity();
        if (std::isinf(t.Q[i]) && std::isinf(t.C[i])) return std::numeric_limits<double>::quiet_NaN();
        return t.Q[i] / t.C[i];
    };
    // Crossings of Q = C, i.e. ratio = 1, linearly interpolated on s.
    double prev = ratio(0);
    for (size_t i = 1; i < t.s.size(); ++i) {
        double cur = ratio(i);
        if (std::isnan(prev) || std::isnan(cur)) {
            prev = cur;
            continue;
        }
        if ((prev - 1.0) * (cur - 1.0) < 0.0) {
            const double f = (1.0 - prev) / (cur - prev);
            r.crossings.push_back(t.s[i - 1] + f * (t.s[i] - t.s[i - 1]));
        } else if (cur == 1.0 && prev != 1.0) {
            r.crossings.push_back(t.s[i]);
        }
        prev = cur;
    }
    // Regime boundaries: last grid point with ratio > rho, first with ratio < 1/rho.
    if (!std::isinf(rho)) {
        for (size_t i = 0; i < t.s.size(); ++i) {
            double q = ratio(i);
            if (!std::isnan(q) && q > rho) r.s_I_end = t.s[i];
        }
        for (size_t i = 0; i < t.s.size(); ++i) {
            double q = ratio(i);
            if (!std::isnan(q) && q < 1.0 / rho) {
                r.s_III_start = t.s[i];
                break;
            }
        }
    }
    // Monotonicity warning: the ratio should decrease through the anneal.
    double last = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.s.size(); ++i) {
        double q = ratio(i);
        if (std::isnan(q)) continue;
        if (q > last + 1e-9) {
            r.monotone = false;
            break;
        }
        last = q;
    }
    return r;
}

std::string anneal_functions_to_csv(const AnnealFunctions& f) {
    std::string out = "temperature_mK=" + format_double(f.temperature_mK) + "\n";
    out += "s,A_GHz,B_GHz\n";
    for (size_t i = 0; i < f.s.size(); ++i)
        out += format_double(f.s[i]) + "," + format_double(f.A[i]) + "," + format_double(f.B[i]) + "\n";
    return out;
}

AnnealFunctions anneal_functions_from_csv(const std::string& csv) {
    AnnealFunctions f;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line.rfind("temperature_mK=", 0) != 0)
        throw std::invalid_argument("anneal functions CSV must start with temperature_mK=<value>");
    f.temperature_mK = std::stod(line.substr(std::string("temperature_mK=").size()));
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        double vals[3];
        for (double& val : vals) {
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("bad anneal CSV row: " + line);
            val = std::stod(cell);
        }
        f.s.push_back(vals[0]);
        f.A.push_back(vals[1]);
        f.B.push_back(vals[2]);
    }
    auto violations = f.validate();
    if (!violations.empty()) throw std::invalid_argument("anneal functions invalid: " + violations.front());
    return f;
}

AnnealFunctions builtin_anneal_functions(const std::string& name) {
    // Synthetic shapes only: smooth monotone curves with the right qualitative
    // relationship between the two tables (see header).  101-point grid.
    AnnealFunctions f;
    f.label = name;
    double a0, ap, b1, bp;
    if (name == "dw2000q_like") {
        f.temperature_mK = 12.1;
        a0 = 10.0;
        ap = 2.8;
        b1 = 12.0;
        bp = 1.7;
    } else if (name == "advantage_like") {
        f.temperature_mK = 15.8;
        a0 = 9.0;
        ap = 4.5;  // faster/earlier driver decay
        b1 = 10.0;
        bp = 1.5;
    } else {
        throw std::invalid_argument("unknown builtin anneal functions: " + name);
    }
    for (int i = 0; i <= 100; ++i) {
        const double s = i / 100.0;
        f.s.push_back(s);
        f.A.push_back(a0 * std::pow(1.0 - s, ap));
        f.B.push_back(b1 * std::pow(s, bp));
    }
    return f;
}

}  // namespace qaw
