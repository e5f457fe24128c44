#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapflow/architecture.hpp"
#include "mapflow/csv.hpp"
#include "mapflow/dynamics.hpp"
#include "mapflow/errors.hpp"
#include "mapflow/metrics.hpp"
#include "mapflow/pca.hpp"

namespace mapflow {

enum class OutputFormat { Csv, Svg };

/// Everything one run needs: architecture, parameters, horizon, reporting.
struct RunConfig {
    std::string arch = "ALL";
    int n_agents = 5;
    double s = 0.8;
    double f = 0.1;
    double b = 1.0;
    double w = 1.0;
    int steps = 200;
    double threshold = 0.8;
    std::string out;
    OutputFormat format = OutputFormat::Csv;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Rejects invalid configurations, naming the offending flag.
inline void validate_config(const RunConfig& cfg) {
    if (cfg.arch != "ALL" && !architecture_from_code(cfg.arch))
        throw std::invalid_argument("--arch: unknown architecture code '" + cfg.arch + "'");
    if (cfg.n_agents < 2)
        throw std::invalid_argument("--agents: must be at least 2, got " +
                                    std::to_string(cfg.n_agents));
    if (!(cfg.s >= 0.0) || !(cfg.f >= 0.0))
        throw std::invalid_argument("--s/--f: fractions must be nonnegative");
    if (cfg.s + cfg.f > 1.0)
        throw std::invalid_argument("--s/--f: fractions exceed unity, s + f = " +
                                    format_double(cfg.s + cfg.f));
    if (!(cfg.b > 0.0)) throw std::invalid_argument("--b: must be positive");
    if (!(cfg.w >= 0.0 && cfg.w <= 1.0)) throw std::invalid_argument("--w: must be in [0, 1]");
    if (cfg.steps < 1) throw std::invalid_argument("--steps: must be at least 1");
    if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
        throw std::invalid_argument("--threshold: must lie strictly between 0 and 1");
}

struct RunResult {
    FlowSystem system;
    Trajectory trajectory;
    SteadyState steady;
    MetricsRecord metrics;
};

/// Builds, simulates, solves and measures a single architecture.
inline RunResult run_single(const RunConfig& cfg) {
    validate_config(cfg);
    const auto kind = architecture_from_code(cfg.arch);
    if (!kind)
        throw std::invalid_argument("--arch: a concrete architecture code is required, not ALL");

    RunResult res;
    res.system = build_architecture({*kind, cfg.n_agents}, cfg.s, cfg.f, cfg.b, cfg.w);
    res.trajectory = simulate(res.system, cfg.steps);
    res.steady = equilibrium(res.system);
    try {
        res.metrics =
            compute_metrics(cfg.arch, res.system, res.trajectory, res.steady, cfg.threshold);
    } catch (const HorizonTooShort& ex) {
        throw HorizonTooShort("--steps: " + std::string(ex.what()));
    }
    return res;
}

/// The two reference parametric configurations.
struct ParamConfig {
    const char* label;
    double s;
    double f;
};

inline constexpr std::array<ParamConfig, 2> reference_configs = {{
    {"A", 0.8, 0.1},
    {"B", 0.1, 0.8},
}};

struct SuiteResult {
    std::vector<MetricsRecord> metrics; // 22 rows, catalog order, config A then B
    std::vector<RunLabel> labels;
    PcaResult pca;
};

namespace detail {

/// All 22 grid runs in catalog order, config A then B per architecture.
inline std::vector<RunResult> grid_runs(int steps, double threshold) {
    std::vector<RunResult> runs;
    runs.reserve(architecture_catalog.size() * reference_configs.size());
    for (Architecture arch : architecture_catalog) {
        for (const ParamConfig& pc : reference_configs) {
            RunConfig cfg;
            cfg.arch = std::string(to_code(arch));
            cfg.s = pc.s;
            cfg.f = pc.f;
            cfg.steps = steps;
            cfg.threshold = threshold;
            try {
                runs.push_back(run_single(cfg));
            } catch (const std::exception& ex) {
                throw std::runtime_error("suite run failed for " + cfg.arch + "@" + pc.label +
                                         ": " + ex.what());
            }
        }
    }
    return runs;
}

inline SuiteResult collect_suite(const std::vector<RunResult>& runs) {
    SuiteResult suite;
    Matrix table(runs.size(), 3);
    for (std::size_t row = 0; row < runs.size(); ++row) {
        const MetricsRecord& rec = runs[row].metrics;
        table(row, 0) = rec.total_work;
        table(row, 1) = rec.dispersion;
        table(row, 2) = static_cast<double>(rec.transition_time);
        suite.metrics.push_back(rec);
        suite.labels.push_back(
            {rec.arch, reference_configs[row % reference_configs.size()].label});
    }
    suite.pca = pca(table, suite.labels);
    return suite;
}

} // namespace detail

/// Runs the full 11 x 2 grid at N = 5, b = 1 and computes the PCA of the
/// (W_T, sigma_x, tau) table. Pure function of its inputs.
inline SuiteResult run_reference_grid(int steps = 200, double threshold = 0.8) {
    return detail::collect_suite(detail::grid_runs(steps, threshold));
}

/// Grid run plus file output: per-run trajectories, metrics.csv, pca.csv.
/// All results are computed first; a single collector then writes the
/// files, so output is deterministic and byte-identical across runs.
inline SuiteResult run_reference_suite(const std::filesystem::path& out_dir, int steps = 200,
                                   double threshold = 0.8) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir.string());

    const std::vector<RunResult> runs = detail::grid_runs(steps, threshold);
    SuiteResult suite = detail::collect_suite(runs);

    for (std::size_t i = 0; i < runs.size(); ++i) {
        const std::string name =
            "traj_" + suite.labels[i].arch + "_" + suite.labels[i].config + ".csv";
        write_text_file(out_dir / name, trajectory_csv(runs[i].trajectory));
    }
    write_text_file(out_dir / "metrics.csv", metrics_csv(suite.metrics));
    write_text_file(out_dir / "pca.csv", pca_csv(suite.pca));
    return suite;
}

} // namespace mapflow
