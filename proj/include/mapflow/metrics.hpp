#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapflow/architecture.hpp"
#include "mapflow/dynamics.hpp"
#include "mapflow/errors.hpp"

namespace mapflow {

/// Steady-state work of one agent per step, normalized by the supply rate:
/// W_i = e*w*x_eq_i / b. Summed over agents this is 1 for a lossless design.
inline std::vector<double> per_agent_work(const std::vector<double>& x_eq,
                                          const FlowSystem& sys) {
    std::vector<double> out(x_eq.size());
    for (std::size_t i = 0; i < x_eq.size(); ++i) out[i] = sys.e * sys.w * x_eq[i] / sys.b;
    return out;
}

inline double total_work(const std::vector<double>& x_eq, const FlowSystem& sys) {
    const std::vector<double> wi = per_agent_work(x_eq, sys);
    return std::accumulate(wi.begin(), wi.end(), 0.0);
}

/// Raw cumulative work per agent over a whole trajectory, e*w*sum_t x_i(t);
/// unnormalized, grows with the horizon.
inline std::vector<double> cumulative_work(const Trajectory& traj) {
    std::vector<double> out(traj.n_agents(), 0.0);
    for (std::size_t t = 0; t < traj.states.rows(); ++t)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += traj.system.e * traj.system.w * traj.states(t, i);
    return out;
}

/// Population standard deviation of the equilibrium states (divide by n).
/// Callers report it on b = 1 normalized equilibria.
inline double dispersion(const std::vector<double>& x_eq) {
    const std::size_t n = x_eq.size();
    if (n < 2) throw std::invalid_argument("dispersion: need at least 2 agents");
    const double mean = std::accumulate(x_eq.begin(), x_eq.end(), 0.0) / static_cast<double>(n);
    double var = 0.0;
    for (double v : x_eq) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(n));
}

/// First step at which each agent individually reaches `threshold` of its
/// own equilibrium value.
inline std::vector<int> per_agent_transition_times(const Trajectory& traj,
                                                   const std::vector<double>& x_eq,
                                                   double threshold = 0.8) {
    const std::size_t n = traj.n_agents();
    if (x_eq.size() != n)
        throw std::invalid_argument("per_agent_transition_times: equilibrium length mismatch");

    std::vector<int> out(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < traj.states.rows(); ++t) {
            if (traj.states(t, i) >= threshold * x_eq[i]) {
                out[i] = static_cast<int>(t);
                break;
            }
        }
        if (out[i] < 0)
            throw HorizonTooShort("horizon too short: agent " + std::to_string(i + 1) +
                                  " never reaches the threshold within " +
                                  std::to_string(traj.steps()) + " steps");
    }
    return out;
}

/// Architecture-level transition time: the earliest per-agent crossing.
/// In every catalog design this is the agent supplied directly by the
/// source; agents sharing a configuration cross together.
inline int transition_time(const Trajectory& traj, const std::vector<double>& x_eq,
                           double threshold = 0.8) {
    const std::vector<int> times = per_agent_transition_times(traj, x_eq, threshold);
    return *std::min_element(times.begin(), times.end());
}

/// Stricter variant: first step at which all agents are simultaneously at
/// or above the threshold (the last per-agent crossing, since trajectories
/// from the zero start are monotone).
inline int transition_time_all_agents(const Trajectory& traj, const std::vector<double>& x_eq,
                                      double threshold = 0.8) {
    const std::size_t n = traj.n_agents();
    for (std::size_t t = 0; t < traj.states.rows(); ++t) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            all = traj.states(t, i) >= threshold * x_eq[i];
        if (all) return static_cast<int>(t);
    }
    throw HorizonTooShort("horizon too short: not all agents reach the threshold within " +
                          std::to_string(traj.steps()) + " steps");
}

struct MassBalance {
    double work_rate = 0.0;  // e * sum(x_eq)
    double waste_rate = 0.0; // f * sum of wasted agents' states
    double residual = 0.0;   // |b - work_rate - waste_rate|
};

/// Conservation diagnostic at equilibrium: supply b splits into transformed
/// resource and wasted forward flow.
inline MassBalance mass_balance(const std::vector<double>& x_eq, const FlowSystem& sys) {
    MassBalance mb;
    for (std::size_t i = 0; i < x_eq.size(); ++i) {
        mb.work_rate += sys.e * x_eq[i];
        if (sys.waste_mask[i]) mb.waste_rate += sys.f * x_eq[i];
    }
    mb.residual = std::abs(sys.b - mb.work_rate - mb.waste_rate);
    return mb;
}

/// The three performance parameters of one run, plus its parameters.
struct MetricsRecord {
    std::string arch;
    double s = 0.0, f = 0.0, e = 0.0, b = 0.0, w = 1.0;
    double total_work = 0.0;
    std::vector<double> per_agent_work;
    double dispersion = 0.0;
    int transition_time = 0;
};

inline MetricsRecord compute_metrics(std::string arch, const FlowSystem& sys,
                                     const Trajectory& traj, const SteadyState& steady,
                                     double threshold = 0.8) {
    MetricsRecord rec;
    rec.arch = std::move(arch);
    rec.s = sys.s;
    rec.f = sys.f;
    rec.e = sys.e;
    rec.b = sys.b;
    rec.w = sys.w;
    rec.per_agent_work = per_agent_work(steady.x_eq, sys);
    rec.total_work = std::accumulate(rec.per_agent_work.begin(), rec.per_agent_work.end(), 0.0);

    // dispersion is reported on the b = 1 normalized equilibrium
    std::vector<double> unit = steady.x_eq;
    for (double& v : unit) v /= sys.b;
    rec.dispersion = dispersion(unit);

    rec.transition_time = transition_time(traj, steady.x_eq, threshold);
    return rec;
}

} // namespace mapflow
