#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mapflow/suite.hpp"

using namespace mapflow;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GridRow {
    const char* arch;
    const char* config;
    double total_work;
    double dispersion;
    int transition_time;
};

// Frozen reference-grid results (N = 5, b = 1), cross-checked against an
// independent implementation of the recursions.
constexpr GridRow kGrid[22] = {
    {"P", "A", 0.5, 0.0, 7},
    {"P", "B", 0.1111111111111111, 0.0, 0},
    {"PDO", "A", 0.80625, 0.34095454242464673, 7},
    {"PDO", "B", 0.28788633169062977, 0.2363892143967923, 0},
    {"PDC", "A", 1.0, 0.0, 15},
    {"PDC", "B", 1.0, 0.0, 15},
    {"PNO", "A", 1.0, 0.3456073558887956, 13},
    {"PNO", "B", 1.0, 0.5553325196277862, 14},
    {"PNC", "A", 1.0, 0.0, 15},
    {"PNC", "B", 1.0, 0.0, 15},
    {"SDO", "A", 0.96875, 1.7047727121232321, 7},
    {"SDO", "B", 0.4450710426933563, 0.14774325899799512, 0},
    {"SDC", "A", 1.0, 1.7597653802562396, 7},
    {"SDC", "B", 1.0, 0.33195432824369764, 12},
    {"SNO", "A", 1.0, 2.1758700399699897, 9},
    {"SNO", "B", 1.0, 0.8479380740805769, 8},
    {"SNC", "A", 1.0, 1.9523407358938327, 9},
    {"SNC", "B", 1.0, 0.4702709737440758, 11},
    {"PA", "A", 1.0, 0.0, 15},
    {"PA", "B", 1.0, 0.0, 15},
    {"SA", "A", 1.0, 1.7777777777777786, 9},
    {"SA", "B", 1.0, 0.36363636363636387, 12},
};

} // namespace

TEST_CASE("config validation names the offending flag") {
    RunConfig cfg;
    cfg.arch = "SDO";
    REQUIRE_NOTHROW(validate_config(cfg));

    auto expect_flag = [](RunConfig bad, const std::string& flag) {
        REQUIRE_THROWS_WITH(validate_config(bad), Catch::Matchers::ContainsSubstring(flag));
    };
    RunConfig bad = cfg;
    bad.arch = "QQQ";
    expect_flag(bad, "--arch");
    bad = cfg;
    bad.n_agents = 1;
    expect_flag(bad, "--agents");
    bad = cfg;
    bad.s = 0.7;
    bad.f = 0.4;
    expect_flag(bad, "--s/--f");
    bad = cfg;
    bad.b = 0.0;
    expect_flag(bad, "--b");
    bad = cfg;
    bad.w = 1.2;
    expect_flag(bad, "--w");
    bad = cfg;
    bad.steps = 0;
    expect_flag(bad, "--steps");
    bad = cfg;
    bad.threshold = 1.0;
    expect_flag(bad, "--threshold");
}

TEST_CASE("run_single reproduces the headline numbers") {
    RunConfig cfg;
    cfg.arch = "SDO";
    cfg.s = 0.1;
    cfg.f = 0.8;
    const MetricsRecord sdo = run_single(cfg).metrics;
    REQUIRE(sdo.total_work == Catch::Approx(0.445).margin(5e-4));
    REQUIRE(sdo.dispersion == Catch::Approx(0.148).margin(1e-3));
    REQUIRE(sdo.transition_time == 0);

    cfg.arch = "P";
    cfg.s = 0.8;
    cfg.f = 0.1;
    const MetricsRecord p = run_single(cfg).metrics;
    REQUIRE(p.total_work == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(p.dispersion == 0.0);
    REQUIRE(p.transition_time == 7);

    cfg.arch = "PDC";
    cfg.s = 0.1;
    cfg.f = 0.8;
    const MetricsRecord pdc = run_single(cfg).metrics;
    REQUIRE(pdc.total_work == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(pdc.dispersion <= 1e-12);

    cfg.arch = "ALL";
    REQUIRE_THROWS_AS(run_single(cfg), std::invalid_argument);
}

TEST_CASE("the reference grid matches the frozen regression table") {
    const SuiteResult suite = run_reference_grid();
    REQUIRE(suite.metrics.size() == 22);

    for (std::size_t r = 0; r < 22; ++r) {
        CAPTURE(r, kGrid[r].arch, kGrid[r].config);
        REQUIRE(suite.labels[r].arch == kGrid[r].arch);
        REQUIRE(suite.labels[r].config == kGrid[r].config);
        REQUIRE(suite.metrics[r].total_work ==
                Catch::Approx(kGrid[r].total_work).margin(1e-9));
        REQUIRE(suite.metrics[r].dispersion ==
                Catch::Approx(kGrid[r].dispersion).margin(1e-9));
        REQUIRE(suite.metrics[r].transition_time == kGrid[r].transition_time);
    }
}

TEST_CASE("exactly the eight loss-free designs reach full work in both configs") {
    const SuiteResult suite = run_reference_grid();
    std::size_t full = 0;
    for (const MetricsRecord& rec : suite.metrics)
        if (std::abs(rec.total_work - 1.0) <= 1e-6) ++full;
    REQUIRE(full == 16);
}

TEST_CASE("PA, PNC and PDC share their metrics per configuration") {
    const SuiteResult suite = run_reference_grid();
    auto find = [&](const std::string& arch, const std::string& config) -> const MetricsRecord& {
        for (std::size_t r = 0; r < suite.labels.size(); ++r)
            if (suite.labels[r].arch == arch && suite.labels[r].config == config)
                return suite.metrics[r];
        FAIL("row not found");
        return suite.metrics.front();
    };
    for (const char* config : {"A", "B"}) {
        const MetricsRecord& pdc = find("PDC", config);
        for (const char* arch : {"PNC", "PA"}) {
            const MetricsRecord& other = find(arch, config);
            REQUIRE(other.total_work == Catch::Approx(pdc.total_work).margin(1e-12));
            REQUIRE(other.dispersion == Catch::Approx(pdc.dispersion).margin(1e-12));
            REQUIRE(other.transition_time == pdc.transition_time);
        }
    }
}

TEST_CASE("SNO with a strong forward flow peaks at the second agent") {
    RunConfig cfg;
    cfg.arch = "SNO";
    cfg.s = 0.1;
    cfg.f = 0.8;
    const MetricsRecord rec = run_single(cfg).metrics;
    REQUIRE(rec.per_agent_work[1] > rec.per_agent_work[0]);
    for (std::size_t i = 2; i < 5; ++i) REQUIRE(rec.per_agent_work[1] > rec.per_agent_work[i]);

    cfg.s = 0.8;
    cfg.f = 0.1;
    const MetricsRecord slow = run_single(cfg).metrics;
    for (std::size_t i = 1; i < 5; ++i) REQUIRE(slow.per_agent_work[0] > slow.per_agent_work[i]);
}

TEST_CASE("grid PCA reproduces the explained-variance split") {
    const SuiteResult suite = run_reference_grid();
    const auto& evr = suite.pca.explained_variance_ratio;
    REQUIRE(evr.size() == 3);
    REQUIRE(evr[0] + evr[1] == Catch::Approx(0.9835977306351622).margin(1e-9));
    REQUIRE(evr[0] == Catch::Approx(0.60937716).margin(1e-7));
    REQUIRE(evr[1] == Catch::Approx(0.37422057).margin(1e-7));
}

TEST_CASE("grid PCA projects the coincident designs onto one point") {
    const SuiteResult suite = run_reference_grid();
    auto point = [&](const std::string& arch, const std::string& config) {
        for (std::size_t r = 0; r < suite.labels.size(); ++r)
            if (suite.labels[r].arch == arch && suite.labels[r].config == config)
                return std::pair{suite.pca.projection(r, 0), suite.pca.projection(r, 1)};
        FAIL("row not found");
        return std::pair{0.0, 0.0};
    };
    for (const char* config : {"A", "B"}) {
        const auto [x0, y0] = point("PDC", config);
        for (const char* arch : {"PNC", "PA"}) {
            const auto [x1, y1] = point(arch, config);
            REQUIRE(std::hypot(x1 - x0, y1 - y0) <= 1e-9);
        }
    }
    const auto [px, py] = point("PDC", "A");
    REQUIRE(px == Catch::Approx(0.993898).margin(1e-5));
    REQUIRE(py == Catch::Approx(-1.024482).margin(1e-5));
}

TEST_CASE("the sequential designs at slow forwarding form a tight cluster") {
    const SuiteResult suite = run_reference_grid();
    std::vector<std::pair<double, double>> cluster;
    std::pair<double, double> pdc{0.0, 0.0};
    for (std::size_t r = 0; r < suite.labels.size(); ++r) {
        if (suite.labels[r].config != "A") continue;
        const std::string& arch = suite.labels[r].arch;
        const std::pair<double, double> pt{suite.pca.projection(r, 0),
                                           suite.pca.projection(r, 1)};
        if (arch == "SDO" || arch == "SDC" || arch == "SNO" || arch == "SNC" || arch == "SA")
            cluster.push_back(pt);
        else if (arch == "PDC")
            pdc = pt;
    }
    REQUIRE(cluster.size() == 5);

    double max_pairwise = 0.0;
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        cx += cluster[i].first / 5.0;
        cy += cluster[i].second / 5.0;
        for (std::size_t j = i + 1; j < cluster.size(); ++j)
            max_pairwise = std::max(max_pairwise,
                                    std::hypot(cluster[i].first - cluster[j].first,
                                               cluster[i].second - cluster[j].second));
    }
    REQUIRE(max_pairwise < std::hypot(cx - pdc.first, cy - pdc.second));
}

TEST_CASE("run_reference_suite writes the full artifact set deterministically") {
    const auto base = std::filesystem::temp_directory_path() / "mapflow_suite_test";
    std::filesystem::remove_all(base);
    const auto first = base / "run1";
    const auto second = base / "run2";

    const SuiteResult suite = run_reference_suite(first);
    REQUIRE(suite.metrics.size() == 22);
    run_reference_suite(second);

    REQUIRE(std::filesystem::exists(first / "metrics.csv"));
    REQUIRE(std::filesystem::exists(first / "pca.csv"));
    std::size_t traj_files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(first)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("traj_", 0) == 0) ++traj_files;
    }
    REQUIRE(traj_files == 22);
    REQUIRE(std::filesystem::exists(first / "traj_SDO_B.csv"));

    REQUIRE(read_file(first / "metrics.csv") == read_file(second / "metrics.csv"));
    REQUIRE(read_file(first / "pca.csv") == read_file(second / "pca.csv"));
    REQUIRE(read_file(first / "traj_PNC_A.csv") == read_file(second / "traj_PNC_A.csv"));

    const std::string metrics = read_file(first / "metrics.csv");
    REQUIRE(metrics.find("SDC,0.1,0.8,") != std::string::npos);

    std::filesystem::remove_all(base);
}
