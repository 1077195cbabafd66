#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tnla/errors.hpp"

namespace tnla {

/// Row-major dense matrix over an arbitrary field scalar.
///
/// The library's kernels are templated on the scalar so the same code runs
/// in binary64 (Scalar = double) and in the exact-arithmetic oracle
/// (Scalar = Rational or BigFloat).
template <class Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

using DenseMatrix = Matrix<double>;
using Vector = std::vector<double>;

template <class Scalar>
std::vector<Scalar> matvec(const Matrix<Scalar>& a, const std::vector<Scalar>& x) {
    if (x.size() != a.cols()) throw DimensionMismatch("matvec size");
    std::vector<Scalar> y(a.rows(), Scalar(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class Scalar>
Matrix<Scalar> matmul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul size");
    Matrix<Scalar> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline bool all_finite(const DenseMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!std::isfinite(a(i, j))) return false;
    return true;
}

}  // namespace tnla
