// mapflow command-line front end: list the architecture catalog, simulate
// single designs, compute metrics, run the full reference grid, and emit
// CSV/SVG outputs.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mapflow/mapflow.hpp"

namespace {

using mapflow::RunConfig;

void add_run_flags(CLI::App& cmd, RunConfig& cfg, bool* dump) {
    cmd.add_option("--arch", cfg.arch, "Architecture code (see `list`)");
    cmd.add_option("--agents", cfg.n_agents, "Number of processing agents");
    cmd.add_option("--s", cfg.s, "Fraction kept per step");
    cmd.add_option("--f", cfg.f, "Fraction forwarded per step");
    cmd.add_option("--b", cfg.b, "Resource units supplied per step");
    cmd.add_option("--w", cfg.w, "Work share of the transformed fraction");
    cmd.add_option("--steps", cfg.steps, "Simulation horizon T");
    cmd.add_option("--threshold", cfg.threshold, "Transition-time threshold");
    cmd.add_option("--out", cfg.out, "Output path (stdout when omitted)");
    cmd.add_option("--format", [&cfg](const std::vector<std::string>& vals) {
           if (vals.front() == "csv")
               cfg.format = mapflow::OutputFormat::Csv;
           else if (vals.front() == "svg")
               cfg.format = mapflow::OutputFormat::Svg;
           else
               return false;
           return true;
       },
       "Output format: csv | svg");
    if (dump)
        cmd.add_flag("--dump-config", *dump,
                     "Print the parsed configuration as flags and exit");
}

std::string dump_config(const RunConfig& cfg) {
    std::string out = "--arch " + cfg.arch;
    out += " --agents " + std::to_string(cfg.n_agents);
    out += " --s " + mapflow::format_double(cfg.s);
    out += " --f " + mapflow::format_double(cfg.f);
    out += " --b " + mapflow::format_double(cfg.b);
    out += " --w " + mapflow::format_double(cfg.w);
    out += " --steps " + std::to_string(cfg.steps);
    out += " --threshold " + mapflow::format_double(cfg.threshold);
    out += std::string(" --format ") + (cfg.format == mapflow::OutputFormat::Svg ? "svg" : "csv");
    if (!cfg.out.empty()) out += " --out " + cfg.out;
    return out;
}

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.out.empty())
        std::cout << content;
    else
        mapflow::write_text_file(cfg.out, content);
}

int do_list() {
    for (mapflow::Architecture a : mapflow::architecture_catalog)
        std::printf("%-4s %s\n", std::string(mapflow::to_code(a)).c_str(),
                    std::string(mapflow::describe(a)).c_str());
    return 0;
}

int do_simulate(const RunConfig& cfg) {
    // a trajectory needs no metrics, so short horizons are fine here
    mapflow::validate_config(cfg);
    const auto kind = mapflow::architecture_from_code(cfg.arch);
    if (!kind) throw std::invalid_argument("--arch: a concrete architecture code is required");
    const mapflow::FlowSystem sys =
        mapflow::build_architecture({*kind, cfg.n_agents}, cfg.s, cfg.f, cfg.b, cfg.w);
    const mapflow::Trajectory traj = mapflow::simulate(sys, cfg.steps);

    if (cfg.format == mapflow::OutputFormat::Svg) {
        std::optional<int> tau;
        try {
            tau = mapflow::transition_time(traj, mapflow::equilibrium(sys).x_eq, cfg.threshold);
        } catch (const mapflow::HorizonTooShort&) {
            // draw without the transition marker
        }
        emit(cfg, mapflow::trajectory_svg(traj, tau, cfg.arch + " states"));
    } else {
        emit(cfg, mapflow::trajectory_csv(traj));
    }
    return 0;
}

int do_metrics(const RunConfig& cfg) {
    if (cfg.arch == "ALL" && cfg.format == mapflow::OutputFormat::Svg)
        throw std::invalid_argument("--format svg needs a single --arch, not ALL");

    std::vector<mapflow::MetricsRecord> records;
    if (cfg.arch == "ALL") {
        mapflow::validate_config(cfg); // fail fast on bad numeric flags
        for (mapflow::Architecture a : mapflow::architecture_catalog) {
            RunConfig one = cfg;
            one.arch = std::string(mapflow::to_code(a));
            records.push_back(mapflow::run_single(one).metrics);
        }
    } else {
        records.push_back(mapflow::run_single(cfg).metrics);
    }
    if (cfg.format == mapflow::OutputFormat::Svg)
        emit(cfg, mapflow::work_bars_svg(records.front()));
    else
        emit(cfg, mapflow::metrics_csv(records));
    return 0;
}

int do_suite(const std::string& out_dir, int steps, double threshold) {
    mapflow::SuiteResult suite = mapflow::run_reference_suite(out_dir, steps, threshold);
    std::cout << "wrote " << out_dir << "/metrics.csv (" << suite.metrics.size() << " rows)\n";
    std::cout << "wrote " << out_dir << "/pca.csv (PC1+PC2 explain "
              << mapflow::format_double(suite.pca.explained_variance_ratio[0] +
                                            suite.pca.explained_variance_ratio[1],
                                        4)
              << " of variance)\n";
    std::cout << "wrote " << out_dir << "/traj_<arch>_<cfg>.csv (" << suite.metrics.size()
              << " files)\n";
    return 0;
}

int do_pca(const RunConfig& cfg) {
    mapflow::SuiteResult suite = mapflow::run_reference_grid(cfg.steps, cfg.threshold);
    emit(cfg, mapflow::pca_csv(suite.pca));
    return 0;
}

int do_plot(const RunConfig& cfg, const std::string& kind) {
    mapflow::RunResult res = mapflow::run_single(cfg);
    if (kind == "work")
        emit(cfg, mapflow::work_bars_svg(res.metrics, cfg.arch + " per-agent work"));
    else
        emit(cfg, mapflow::trajectory_svg(res.trajectory, res.metrics.transition_time,
                                          cfg.arch + " states"));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-agent production flow architectures: simulation and analysis"};
    app.require_subcommand(1);

    CLI::App* list = app.add_subcommand("list", "List the architecture catalog");

    RunConfig sim_cfg;
    bool sim_dump = false;
    CLI::App* simulate = app.add_subcommand("simulate", "Simulate one architecture");
    add_run_flags(*simulate, sim_cfg, &sim_dump);

    RunConfig met_cfg;
    met_cfg.arch = "ALL";
    bool met_dump = false;
    CLI::App* metrics =
        app.add_subcommand("metrics", "Performance metrics for one architecture or ALL");
    add_run_flags(*metrics, met_cfg, &met_dump);

    std::string suite_out = "suite_out";
    int suite_steps = 200;
    double suite_threshold = 0.8;
    CLI::App* suite =
        app.add_subcommand("suite", "Run the full 11 x 2 reference grid and write CSV outputs");
    suite->add_option("--out", suite_out, "Output directory");
    suite->add_option("--steps", suite_steps, "Simulation horizon T");
    suite->add_option("--threshold", suite_threshold, "Transition-time threshold");

    RunConfig pca_cfg;
    CLI::App* pca = app.add_subcommand("pca", "PCA of the reference-grid metrics table");
    pca->add_option("--out", pca_cfg.out, "Output path (stdout when omitted)");
    pca->add_option("--steps", pca_cfg.steps, "Simulation horizon T");
    pca->add_option("--threshold", pca_cfg.threshold, "Transition-time threshold");

    RunConfig plot_cfg;
    bool plot_dump = false;
    std::string plot_kind = "states";
    CLI::App* plot = app.add_subcommand("plot", "Render an SVG chart for one architecture");
    add_run_flags(*plot, plot_cfg, &plot_dump);
    plot->add_option("--kind", plot_kind, "Chart kind: states | work")
        ->check(CLI::IsMember({"states", "work"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (list->parsed()) return do_list();
        if (simulate->parsed()) {
            if (sim_dump) {
                std::cout << dump_config(sim_cfg) << '\n';
                return 0;
            }
            return do_simulate(sim_cfg);
        }
        if (metrics->parsed()) {
            if (met_dump) {
                std::cout << dump_config(met_cfg) << '\n';
                return 0;
            }
            return do_metrics(met_cfg);
        }
        if (suite->parsed()) return do_suite(suite_out, suite_steps, suite_threshold);
        if (pca->parsed()) return do_pca(pca_cfg);
        if (plot->parsed()) {
            if (plot_dump) {
                std::cout << dump_config(plot_cfg) << '\n';
                return 0;
            }
            plot_cfg.format = mapflow::OutputFormat::Svg;
            return do_plot(plot_cfg, plot_kind);
        }
    } catch (const mapflow::IoError& ex) {
        std::cerr << "I/O error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
