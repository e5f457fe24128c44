#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mapflow {

/// Dense row-major matrix of doubles. Everything in this project is tiny
/// (agent counts and 3x3 covariances), so there is no view machinery.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<double>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

/// Solves a*x = rhs by Gaussian elimination with partial pivoting.
/// A pivot with magnitude at most 1e-12 times the max-norm of the input
/// matrix counts as singular.
inline std::vector<double> solve_dense(Matrix a, std::vector<double> rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.size() != n)
        throw std::invalid_argument("solve_dense: dimension mismatch");
    const double tol = 1e-12 * max_abs(a);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        if (std::abs(a(pivot, k)) <= tol)
            throw std::domain_error("matrix is singular to working precision");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(rhs[k], rhs[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) / a(k, k);
            if (m == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= m * a(k, j);
            rhs[i] -= m * rhs[k];
        }
    }

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

struct SymmetricEigen {
    std::vector<double> values; // descending
    Matrix vectors;             // column k pairs with values[k]; orthonormal
};

/// Cyclic Jacobi iteration for small symmetric matrices.
inline SymmetricEigen eigen_symmetric(Matrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("eigen_symmetric: matrix not square");
    Matrix v = identity(n);

    const double scale = std::max(max_abs(a), 1.0);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= 1e-15 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-18 * scale) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

} // namespace mapflow
