// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Piecewise-linear anneal-fraction schedules s(t), with optional mid-anneal
// pause.  A pause holds s fixed (ds/dt = 0) at location s_p for duration t_p;
// both ramps use the baseline rate 1/t_a, so the pause is inserted into a
// linear-t_a schedule and the total time is t_tot = t_a + t_p.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qaw {

struct Pause {
    double s_p = 0.0;  // pause location, 0 < s_p < 1
    double t_p = 0.0;  // pause duration in microseconds, >= 0
};

struct Schedule {
    std::vector<std::pair<double, double>> breakpoints;  // (t in us, s)
    double t_a = 0.0;
    double t_p = 0.0;
    std::optional<double> s_p;

    double t_tot() const { return breakpoints.empty() ? 0.0 : breakpoints.back().first; }

    // s(t) by linear interpolation; clamped to [0, t_tot].
    double s_at(double t) const;
};

struct ScheduleLimits {
    double min_t_a = 1.0;       // device minimum anneal time, microseconds
    double max_slope = 1.0;     // maximum |ds/dt| in 1/us
    int max_slope_changes = 12; // device limit on the number of ramp segments
};

// Builds a schedule: without a pause, s(t) = t / t_a; with a pause, ramp to
// s_p at t_a * s_p, hold for t_p, then ramp to 1 at t_a + t_p.  Throws when
// t_a is below the device minimum, s_p is outside (0, 1), t_p is negative, a
// segment slope would exceed the limit, or too many slope changes result.
Schedule build_schedule(double t_a_us, std::optional<Pause> pause = std::nullopt,
                        const ScheduleLimits& limits = {});

// Re-checks the invariants the builder guarantees (monotone s, endpoints 0/1,
// slope bound, breakpoint count).  Returns a list of violations; empty = ok.
std::vector<std::string> validate_schedule(const Schedule& s, const ScheduleLimits& limits = {});

// CSV with rows "t_us,s", one breakpoint per row.
std::string schedule_to_csv(const Schedule& s);
Schedule schedule_from_csv(const std::string& csv);

}  // namespace qaw
