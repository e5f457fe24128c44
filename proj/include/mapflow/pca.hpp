#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapflow/linalg.hpp"

namespace mapflow {

struct StandardizeResult {
    Matrix data;
    std::vector<std::string> warnings; // one per zero-variance column
};

/// Shifts each column to zero mean and scales it to unit population
/// standard deviation. A zero-variance column is left centered but
/// unscaled, with a warning attached.
inline StandardizeResult standardize(const Matrix& table) {
    const std::size_t m = table.rows();
    const std::size_t k = table.cols();
    StandardizeResult out;
    out.data = Matrix(m, k);
    if (m == 0) return out;

    for (std::size_t j = 0; j < k; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += table(i, j);
        mean /= static_cast<double>(m);

        double var = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double d = table(i, j) - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / static_cast<double>(m));

        if (sd == 0.0) {
            out.warnings.push_back("column " + std::to_string(j + 1) +
                                   " has zero variance; centered but not scaled");
            for (std::size_t i = 0; i < m; ++i) out.data(i, j) = table(i, j) - mean;
        } else {
            for (std::size_t i = 0; i < m; ++i) out.data(i, j) = (table(i, j) - mean) / sd;
        }
    }
    return out;
}

struct RunLabel {
    std::string arch;
    std::string config;

    friend bool operator==(const RunLabel&, const RunLabel&) = default;
};

struct PcaResult {
    Matrix loadings;                             // rows = components, orthonormal
    std::vector<double> explained_variance_ratio; // descending, sums to 1
    Matrix projection;                           // m x 2 scores on the first two components
    std::vector<RunLabel> row_labels;
    std::vector<std::string> warnings;
};

/// Principal component analysis of a small metrics table: z-score columns,
/// eigendecompose the population covariance (cyclic Jacobi), order
/// components by descending eigenvalue, and fix each component's sign so
/// its largest-magnitude loading is positive.
inline PcaResult pca(const Matrix& table, std::vector<RunLabel> row_labels = {}) {
    const std::size_t m = table.rows();
    const std::size_t k = table.cols();
    if (m < 3) throw std::invalid_argument("pca: need at least 3 rows");
    if (k < 2) throw std::invalid_argument("pca: need at least 2 columns");
    if (!row_labels.empty() && row_labels.size() != m)
        throw std::invalid_argument("pca: row label count does not match row count");
    for (double v : table.data())
        if (!std::isfinite(v)) throw std::invalid_argument("pca: table has non-finite entries");

    StandardizeResult std_table = standardize(table);
    const Matrix& z = std_table.data;

    Matrix cov(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t c = a; c < k; ++c) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) acc += z(i, a) * z(i, c);
            cov(a, c) = cov(c, a) = acc / static_cast<double>(m);
        }
    }

    SymmetricEigen eig = eigen_symmetric(cov);

    PcaResult out;
    out.row_labels = std::move(row_labels);
    out.warnings = std::move(std_table.warnings);

    double total = 0.0;
    for (double& v : eig.values) {
        if (v < 0.0) v = 0.0; // rounding can leave tiny negative eigenvalues
        total += v;
    }
    out.explained_variance_ratio.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        out.explained_variance_ratio[i] = total > 0.0 ? eig.values[i] / total : 0.0;

    out.loadings = Matrix(k, k);
    for (std::size_t comp = 0; comp < k; ++comp) {
        std::size_t arg = 0;
        for (std::size_t j = 1; j < k; ++j)
            if (std::abs(eig.vectors(j, comp)) > std::abs(eig.vectors(arg, comp))) arg = j;
        const double sign = eig.vectors(arg, comp) < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < k; ++j) out.loadings(comp, j) = sign * eig.vectors(j, comp);
    }

    out.projection = Matrix(m, 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t comp = 0; comp < 2; ++comp) {
            double acc = 0.0;
            for (std::size_t j = 0; j < k; ++j) acc += z(i, j) * out.loadings(comp, j);
            out.projection(i, comp) = acc;
        }
    }
    return out;
}

} // namespace mapflow
