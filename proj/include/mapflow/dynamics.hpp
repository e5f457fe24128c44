#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mapflow/architecture.hpp"
#include "mapflow/errors.hpp"
#include "mapflow/linalg.hpp"

namespace mapflow {

/// States along one simulation run. Row t holds x_1(t)..x_n(t); row 0 is
/// the state right after the first injection, i.e. the source vector.
struct Trajectory {
    Matrix states;
    FlowSystem system;

    [[nodiscard]] std::size_t steps() const { return states.rows() == 0 ? 0 : states.rows() - 1; }
    [[nodiscard]] std::size_t n_agents() const { return states.cols(); }
};

struct SteadyState {
    std::vector<double> x_eq;
    double residual = 0.0; // max-norm of step(x_eq) - x_eq
};

/// One synchronous update: x'_i = s*x_i + sum_j forward(i,j)*x_j + source_i.
/// Every right-hand-side state is the pre-step value.
inline std::vector<double> step(const FlowSystem& sys, const std::vector<double>& x) {
    const auto n = static_cast<std::size_t>(sys.n_agents);
    if (x.size() != n) throw std::invalid_argument("step: state vector has wrong length");

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = sys.s * x[i];
        for (std::size_t j = 0; j < n; ++j) acc += sys.forward(i, j) * x[j];
        out[i] = acc + sys.source[i];
    }
    return out;
}

/// Runs `steps` updates from the all-zero start. The returned trajectory
/// has steps+1 rows; from a zero start every column is non-decreasing.
inline Trajectory simulate(const FlowSystem& sys, int steps) {
    if (steps < 0) throw std::invalid_argument("simulate: steps must be nonnegative");
    const auto n = static_cast<std::size_t>(sys.n_agents);

    Trajectory traj;
    traj.system = sys;
    traj.states = Matrix(static_cast<std::size_t>(steps) + 1, n);

    std::vector<double> x = step(sys, std::vector<double>(n, 0.0));
    for (std::size_t t = 0;; ++t) {
        for (std::size_t i = 0; i < n; ++i) traj.states(t, i) = x[i];
        if (t == static_cast<std::size_t>(steps)) break;
        x = step(sys, x);
    }
    return traj;
}

/// Exact steady state: solves (I - s*I - F) x = source directly. Throws
/// NoSteadyState when that system is singular to working precision, which
/// happens exactly when e = 0 and no waste path drains the flow.
inline SteadyState equilibrium(const FlowSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n_agents);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = (i == j ? 1.0 - sys.s : 0.0) - sys.forward(i, j);

    SteadyState out;
    try {
        out.x_eq = solve_dense(std::move(a), sys.source);
    } catch (const std::domain_error&) {
        throw NoSteadyState("no steady state: fixed-point system is singular "
                            "(e = 0 with no waste path; states grow without bound)");
    }

    const std::vector<double> next = step(sys, out.x_eq);
    for (std::size_t i = 0; i < n; ++i)
        out.residual = std::max(out.residual, std::abs(next[i] - out.x_eq[i]));
    return out;
}

} // namespace mapflow
