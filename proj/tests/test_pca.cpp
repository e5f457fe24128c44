#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "mapflow/pca.hpp"

using namespace mapflow;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("standardize z-scores a column") {
    const Matrix table = from_rows({{1.0}, {2.0}, {3.0}});
    const StandardizeResult res = standardize(table);
    REQUIRE(res.warnings.empty());
    REQUIRE(res.data(0, 0) == Catch::Approx(-1.2247448713915890).margin(1e-12));
    REQUIRE(res.data(1, 0) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(res.data(2, 0) == Catch::Approx(1.2247448713915890).margin(1e-12));
}

TEST_CASE("standardize leaves a constant column centered, with a warning") {
    const Matrix table = from_rows({{5.0, 1.0}, {5.0, 2.0}, {5.0, 3.0}});
    const StandardizeResult res = standardize(table);
    REQUIRE(res.warnings.size() == 1);
    REQUIRE_THAT(res.warnings.front(), Catch::Matchers::ContainsSubstring("column 1"));
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(res.data(i, 0) == 0.0);
}

TEST_CASE("standardize is idempotent") {
    const Matrix table = from_rows({{1.0, 9.0}, {2.0, 4.0}, {3.0, 1.0}, {7.0, 0.5}});
    const StandardizeResult once = standardize(table);
    const StandardizeResult twice = standardize(once.data);
    for (std::size_t i = 0; i < table.rows(); ++i)
        for (std::size_t j = 0; j < table.cols(); ++j)
            REQUIRE(twice.data(i, j) == Catch::Approx(once.data(i, j)).margin(1e-12));
}

TEST_CASE("pca rejects undersized or non-finite input") {
    REQUIRE_THROWS_AS(pca(from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}})), std::invalid_argument);
    REQUIRE_THROWS_AS(
        pca(from_rows({{1.0, 2.0, std::numeric_limits<double>::quiet_NaN()},
                       {4.0, 5.0, 6.0},
                       {7.0, 8.0, 9.0}})),
        std::invalid_argument);
    REQUIRE_THROWS_AS(pca(from_rows({{1.0, 2.0, 3.0}, {2.0, 3.0, 4.0}, {3.0, 4.0, 5.0}}),
                          {RunLabel{"P", "A"}}),
                      std::invalid_argument);
}

TEST_CASE("data on a line is explained entirely by the first component") {
    std::vector<std::vector<double>> rows;
    for (int t = 1; t <= 6; ++t)
        rows.push_back({static_cast<double>(t), 2.0 * t, -0.5 * t + 3.0});
    const PcaResult res = pca(from_rows(rows));
    REQUIRE(res.explained_variance_ratio[0] == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(res.explained_variance_ratio[1] == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(res.explained_variance_ratio[2] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("explained variance ratios are a descending unit partition") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unit(-5.0, 5.0);
    std::vector<std::vector<double>> rows(12, std::vector<double>(3));
    for (auto& row : rows)
        for (double& v : row) v = unit(rng);

    const PcaResult res = pca(from_rows(rows));
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(res.explained_variance_ratio[i] >= 0.0);
        if (i > 0)
            REQUIRE(res.explained_variance_ratio[i] <= res.explained_variance_ratio[i - 1]);
        sum += res.explained_variance_ratio[i];
    }
    REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("loading rows are orthonormal and sign-fixed") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 10.0);
    std::vector<std::vector<double>> rows(9, std::vector<double>(3));
    for (auto& row : rows)
        for (double& v : row) v = unit(rng);

    const PcaResult res = pca(from_rows(rows));
    for (std::size_t a = 0; a < 3; ++a) {
        double largest = 0.0;
        for (std::size_t b = 0; b < 3; ++b) {
            double dot = 0.0;
            for (std::size_t j = 0; j < 3; ++j) dot += res.loadings(a, j) * res.loadings(b, j);
            REQUIRE(dot == Catch::Approx(a == b ? 1.0 : 0.0).margin(1e-10));
            largest = std::max(largest, res.loadings(a, b));
        }
        double max_abs_loading = 0.0;
        for (std::size_t j = 0; j < 3; ++j)
            max_abs_loading = std::max(max_abs_loading, std::abs(res.loadings(a, j)));
        REQUIRE(largest == Catch::Approx(max_abs_loading)); // biggest loading is positive
    }
}

TEST_CASE("row permutation does not change the analysis") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 4.0);
    std::vector<std::vector<double>> rows(10, std::vector<double>(3));
    for (auto& row : rows)
        for (double& v : row) v = unit(rng);

    const PcaResult base = pca(from_rows(rows));
    std::vector<std::size_t> order{7, 2, 9, 0, 4, 6, 1, 8, 3, 5};
    std::vector<std::vector<double>> shuffled;
    for (std::size_t idx : order) shuffled.push_back(rows[idx]);
    const PcaResult perm = pca(from_rows(shuffled));

    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(perm.explained_variance_ratio[i] ==
                Catch::Approx(base.explained_variance_ratio[i]).margin(1e-9));
        for (std::size_t j = 0; j < 3; ++j)
            REQUIRE(perm.loadings(i, j) == Catch::Approx(base.loadings(i, j)).margin(1e-9));
    }
    for (std::size_t r = 0; r < order.size(); ++r)
        for (std::size_t c = 0; c < 2; ++c)
            REQUIRE(perm.projection(r, c) ==
                    Catch::Approx(base.projection(order[r], c)).margin(1e-9));
}

TEST_CASE("identical rows project to identical points") {
    std::vector<std::vector<double>> rows = {
        {1.0, 0.5, 3.0}, {2.0, 0.1, 9.0}, {1.0, 0.5, 3.0}, {4.0, 2.0, 1.0}, {1.0, 0.5, 3.0},
    };
    const PcaResult res = pca(from_rows(rows));
    for (std::size_t c = 0; c < 2; ++c) {
        REQUIRE(res.projection(2, c) == res.projection(0, c));
        REQUIRE(res.projection(4, c) == res.projection(0, c));
    }
}

TEST_CASE("projection never stretches pairwise distances") {
    std::mt19937 rng(57);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    std::vector<std::vector<double>> rows(8, std::vector<double>(3));
    for (auto& row : rows)
        for (double& v : row) v = unit(rng);

    const Matrix table = from_rows(rows);
    const PcaResult res = pca(table);
    const Matrix z = standardize(table).data;

    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            double d3 = 0.0, d2 = 0.0;
            for (std::size_t j = 0; j < 3; ++j) {
                const double diff = z(a, j) - z(b, j);
                d3 += diff * diff;
            }
            for (std::size_t c = 0; c < 2; ++c) {
                const double diff = res.projection(a, c) - res.projection(b, c);
                d2 += diff * diff;
            }
            REQUIRE(std::sqrt(d2) <= std::sqrt(d3) + 1e-12);
        }
    }
}
