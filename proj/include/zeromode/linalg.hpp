#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zeromode {

// Dense row-major real matrix. Sized for the small systems handled here
// (a few thousand rows at most), so no blocking or expression templates.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const double> data() const { return data_; }

    Matrix transpose() const;
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double max_abs_asymmetry(const Matrix& a);

/// Eigenvalues (ascending) with matching orthonormal eigenvectors stored as columns.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
};

// Cyclic Jacobi rotations. Accurate to a few ulps of the largest eigenvalue;
// cost grows as n^3 per sweep, used for small matrices.
SymmetricEigen jacobi_eigen(const Matrix& a, int max_sweeps = 100);

// Householder tridiagonalisation followed by implicit QL.
SymmetricEigen householder_ql_eigen(const Matrix& a);

// Eigenvalues only (ascending), Householder + QL without accumulating vectors.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// Dispatches to Jacobi for n <= jacobi_cutoff, Householder-QL above.
SymmetricEigen symmetric_eigen(const Matrix& a, std::size_t jacobi_cutoff = 64);

/// V diag(f(lambda)) V^T.
template <class F>
Matrix spectral_apply(const SymmetricEigen& eig, F&& f) {
    const std::size_t n = eig.values.size();
    Matrix out(n, n);
    std::vector<double> fv(n);
    for (std::size_t k = 0; k < n; ++k) fv[k] = f(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * fv[k] * eig.vectors(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

// Lower Cholesky factor; returns false if a pivot is not positive.
bool cholesky(const Matrix& a, Matrix& lower);

// Solves A X = B for symmetric positive definite A via Cholesky.
// Throws SingularBlock if A is not positive definite.
Matrix cholesky_solve(const Matrix& a, const Matrix& b);

}  // namespace zeromode
