#include "zeromode/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zeromode/errors.hpp"

namespace zeromode {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            auto bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double max_abs_asymmetry(const Matrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    return worst;
}

namespace {

void require_square(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("eigensolver: matrix is not square");
}

void sort_ascending(SymmetricEigen& eig) {
    const std::size_t n = eig.values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return eig.values[x] < eig.values[y]; });
    SymmetricEigen sorted{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = eig.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, k) = eig.vectors(i, order[k]);
    }
    eig = std::move(sorted);
}

inline void rotate(Matrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l, double s, double tau) {
    const double g = m(i, j);
    const double h = m(k, l);
    m(i, j) = g - s * (h + g * tau);
    m(k, l) = h + s * (g - h * tau);
}

// Householder reduction to tridiagonal form. On return d holds the diagonal,
// e the subdiagonal in e[1..n-1], and v the accumulated transform when
// accumulate is set.
void tridiagonalize(Matrix& v, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
    const std::size_t n = v.rows();
    for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (std::size_t k = j + 1; k <= i - 1; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if (accumulate) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            v(n - 1, i) = v(i, i);
            v(i, i) = 1.0;
            const double h = d[i + 1];
            if (h != 0.0) {
                for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
                for (std::size_t j = 0; j <= i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
                    for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
                }
            }
            for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
        }
        for (std::size_t j = 0; j < n; ++j) {
            d[j] = v(n - 1, j);
            v(n - 1, j) = 0.0;
        }
        v(n - 1, n - 1) = 1.0;
    } else {
        // Without accumulation the diagonal still has to be pulled out of v.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double diag = v(i, i);
            v(n - 1, i) = diag;
        }
        for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);
    }
    e[0] = 0.0;
}

// Implicit QL on the tridiagonal (d, e); rotates columns of v when given.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Matrix* v) {
    const std::size_t n = d.size();
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iter = 60 * static_cast<int>(n) + 60;

    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > max_iter) throw NumericError("tridiagonal QL failed to converge");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    if (v) {
                        for (std::size_t k = 0; k < n; ++k) {
                            h = (*v)(k, ii + 1);
                            (*v)(k, ii + 1) = s * (*v)(k, ii) + c * h;
                            (*v)(k, ii) = c * (*v)(k, ii) - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
    require_square(input);
    const std::size_t n = input.rows();
    Matrix a = input;
    SymmetricEigen out{std::vector<double>(n), Matrix::identity(n)};
    std::vector<double> b(n), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) b[i] = out.values[i] = a(i, i);

    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
        if (off == 0.0) {
            sort_ascending(out);
            return out;
        }
        const double tresh = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = 100.0 * std::abs(a(p, q));
                auto& d = out.values;
                if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) && std::abs(d[q]) + g == std::abs(d[q])) {
                    a(p, q) = 0.0;
                } else if (std::abs(a(p, q)) > tresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (std::abs(h) + g == std::abs(h)) {
                        t = a(p, q) / h;
                    } else {
                        const double theta = 0.5 * h / a(p, q);
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * a(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a(p, q) = 0.0;
                    for (std::size_t j = 0; j < p; ++j) rotate(a, j, p, j, q, s, tau);
                    for (std::size_t j = p + 1; j < q; ++j) rotate(a, p, j, j, q, s, tau);
                    for (std::size_t j = q + 1; j < n; ++j) rotate(a, p, j, q, j, s, tau);
                    for (std::size_t j = 0; j < n; ++j) rotate(out.vectors, j, p, j, q, s, tau);
                }
            }
        }
        for (std::size_t p = 0; p < n; ++p) {
            b[p] += z[p];
            out.values[p] = b[p];
            z[p] = 0.0;
        }
    }
    throw NumericError("Jacobi eigensolver did not converge");
}

SymmetricEigen householder_ql_eigen(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    SymmetricEigen out{std::vector<double>(n), a};
    if (n == 0) return out;
    if (n == 1) {
        out.vectors(0, 0) = 1.0;
        out.values[0] = a(0, 0);
        return out;
    }
    std::vector<double> e(n);
    tridiagonalize(out.vectors, out.values, e, true);
    tridiagonal_ql(out.values, e, &out.vectors);
    sort_ascending(out);
    return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};
    Matrix work = a;
    std::vector<double> d(n), e(n);
    tridiagonalize(work, d, e, false);
    tridiagonal_ql(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

SymmetricEigen symmetric_eigen(const Matrix& a, std::size_t jacobi_cutoff) {
    return a.rows() <= jacobi_cutoff ? jacobi_eigen(a) : householder_ql_eigen(a);
}

bool cholesky(const Matrix& a, Matrix& lower) {
    const std::size_t n = a.rows();
    lower = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = a(j, j);
        for (std::size_t k = 0; k < j; ++k) s -= lower(j, k) * lower(j, k);
        if (!(s > 0.0)) return false;
        const double ljj = std::sqrt(s);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double t = a(i, j);
            for (std::size_t k = 0; k < j; ++k) t -= lower(i, k) * lower(j, k);
            lower(i, j) = t / ljj;
        }
    }
    return true;
}

Matrix cholesky_solve(const Matrix& a, const Matrix& b) {
    Matrix l;
    if (!cholesky(a, l)) throw SingularBlock("cholesky_solve: matrix is not positive definite");
    const std::size_t n = a.rows();
    Matrix x = b;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = x(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
            x(i, c) = s / l(i, i);
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = x(i, c);
            for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x(k, c);
            x(i, c) = s / l(i, i);
        }
    }
    return x;
}

}  // namespace zeromode
