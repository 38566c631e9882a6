// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0

#include "qaw/hardware/schedule.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qaw/model_io.hpp"

namespace qaw {

double Schedule::s_at(double t) const {
    if (breakpoints.empty()) throw std::logic_error("empty schedule");
    if (t <= breakpoints.front().first) return breakpoints.front().second;
    if (t >= breakpoints.back().first) return breakpoints.back().second;
    for (size_t i = 1; i < breakpoints.size(); ++i) {
        const auto& [t1, s1] = breakpoints[i];
        if (t <= t1) {
            const auto& [t0, s0] = breakpoints[i - 1];
            if (t1 == t0) return s1;
            return s0 + (s1 - s0) * (t - t0) / (t1 - t0);
        }
    }
    return breakpoints.back().second;
}

Schedule build_schedule(double t_a_us, std::optional<Pause> pause, const ScheduleLimits& limits) {
    if (t_a_us < limits.min_t_a)
        throw std::invalid_argument("anneal time below device minimum");
    const double ramp_slope = 1.0 / t_a_us;
    if (ramp_slope > limits.max_slope + 1e-12)
        throw std::invalid_argument("schedule slope exceeds device limit");

    Schedule sched;
    sched.t_a = t_a_us;
    if (!pause || pause->t_p == 0.0) {
        if (pause) {
            if (pause->s_p <= 0.0 || pause->s_p >= 1.0)
                throw std::invalid_argument("pause location must be inside (0, 1)");
            if (pause->t_p < 0.0) throw std::invalid_argument("pause duration must be >= 0");
        }
        sched.breakpoints = {{0.0, 0.0}, {t_a_us, 1.0}};
    } else {
        if (pause->s_p <= 0.0 || pause->s_p >= 1.0)
            throw std::invalid_argument("pause location must be inside (0, 1)");
        if (pause->t_p < 0.0) throw std::invalid_argument("pause duration must be >= 0");
        sched.t_p = pause->t_p;
        sched.s_p = pause->s_p;
        const double t_hold = t_a_us * pause->s_p;
        sched.breakpoints = {{0.0, 0.0},
                             {t_hold, pause->s_p},
                             {t_hold + pause->t_p, pause->s_p},
                             {t_a_us + pause->t_p, 1.0}};
    }
    auto violations = validate_schedule(sched, limits);
    if (!violations.empty()) throw std::invalid_argument("schedule invalid: " + violations.front());
    return sched;
}

std::vector<std::string> validate_schedule(const Schedule& s, const ScheduleLimits& limits) {
    std::vector<std::string> v;
    if (s.breakpoints.size() < 2) {
        v.push_back("fewer than two breakpoints");
        return v;
    }
    if (s.breakpoints.front().first != 0.0 || s.breakpoints.front().second != 0.0)
        v.push_back("schedule must start at (0, 0)");
    if (std::abs(s.breakpoints.back().second - 1.0) > 1e-12)
        v.push_back("schedule must end at s = 1");
    if (static_cast<int>(s.breakpoints.size()) - 1 > limits.max_slope_changes)
        v.push_back("too many slope changes");
    for (size_t i = 1; i < s.breakpoints.size(); ++i) {
        const auto& [t0, s0] = s.breakpoints[i - 1];
        const auto& [t1, s1] = s.breakpoints[i];
        if (t1 < t0) v.push_back("time breakpoints must be non-decreasing");
        if (s1 < s0) v.push_back("s must be non-decreasing");
        if (t1 > t0 && (s1 - s0) / (t1 - t0) > limits.max_slope + 1e-12)
            v.push_back("segment slope exceeds limit");
        if (t1 == t0 && s1 != s0) v.push_back("vertical segment");
    }
    return v;
}

std::string schedule_to_csv(const Schedule& s) {
    std::string out = "t_us,s\n";
    for (const auto& [t, sv] : s.breakpoints) out += format_double(t) + "," + format_double(sv) + "\n";
    return out;
}

Schedule schedule_from_csv(const std::string& csv) {
    Schedule s;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad schedule CSV row: " + line);
        s.breakpoints.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    if (s.breakpoints.size() < 2) throw std::invalid_argument("schedule CSV needs at least two rows");
    // Recover derived fields: a 4-point schedule with a flat middle segment is a pause schedule.
    if (s.breakpoints.size() == 4 && s.breakpoints[1].second == s.breakpoints[2].second) {
        s.s_p = s.breakpoints[1].second;
        s.t_p = s.breakpoints[2].first - s.breakpoints[1].first;
        s.t_a = s.breakpoints.back().first - s.t_p;
    } else {
        s.t_a = s.breakpoints.back().first;
        s.t_p = 0.0;
    }
    return s;
}

}  // namespace qaw
