#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace harmonic {

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t m, double fill = 0.0) : m_(m), data_(m * m, fill) {}

    static Matrix identity(std::size_t m)
    {
        Matrix out(m);
        for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
        return out;
    }

    [[nodiscard]] std::size_t size() const { return m_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }

    /// Bitwise symmetry.
    [[nodiscard]] bool is_symmetric() const
    {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i + 1; j < m_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    [[nodiscard]] double max_abs() const
    {
        double out = 0.0;
        for (double x : data_) out = std::max(out, std::abs(x));
        return out;
    }

    [[nodiscard]] double frobenius_norm() const
    {
        double sum = 0.0;
        for (double x : data_) sum += x * x;
        return std::sqrt(sum);
    }

    [[nodiscard]] Matrix principal_submatrix(const std::vector<std::size_t>& idx) const
    {
        Matrix out(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
        return out;
    }

private:
    std::size_t m_ = 0;
    std::vector<double> data_;
};

/// A = V diag(values) V^T with eigenvalues ascending; column k of `vectors`
/// belongs to values[k].
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
    int sweeps = 0;
    double off_diagonal_norm = 0.0;

    [[nodiscard]] Matrix reconstruct() const
    {
        const std::size_t m = values.size();
        Matrix out(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double sum = 0.0;
                for (std::size_t k = 0; k < m; ++k) sum += vectors(i, k) * values[k] * vectors(j, k);
                out(i, j) = sum;
            }
        return out;
    }
};

/// Cyclic Jacobi eigenvalue iteration for a real symmetric matrix. Sweeps
/// until the off-diagonal Frobenius norm drops below rel_tol * ||A||_F.
inline EigenDecomposition jacobi_eigen(Matrix a, double rel_tol = 1e-13, int max_sweeps = 100)
{
    if (!a.is_symmetric()) {
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
    }
    const std::size_t m = a.size();
    Matrix v = Matrix::identity(m);
    const double target = rel_tol * a.frobenius_norm();

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) sum += a(i, j) * a(i, j);
        return std::sqrt(sum);
    };

    EigenDecomposition out;
    double off = off_norm();
    while (off > target && out.sweeps < max_sweeps) {
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t r = 0; r < m; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t r = 0; r < m; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
        off = off_norm();
    }
    out.off_diagonal_norm = off;

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    out.values.resize(m);
    out.vectors = Matrix(m);
    for (std::size_t k = 0; k < m; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < m; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

} // namespace harmonic
