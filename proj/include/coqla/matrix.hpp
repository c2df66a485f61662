#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coqla/errors.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

/**
 * Dense row-major matrix of coquaternions.
 *
 * All public indices are 1-based: `a(i, j)` is the entry a_{ij} in row i,
 * column j. Rows and columns are always at least 1.
 */
template <Scalar T>
class Matrix {
public:
    using value_type = Coquaternion<T>;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
        if (data_.size() != rows * cols)
            throw DimensionError("entry count " + std::to_string(data_.size()) +
                                 " does not match " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
    }

    Matrix(std::initializer_list<std::initializer_list<value_type>> rows) : rows_(rows.size()) {
        if (rows_ == 0) throw DimensionError("matrix dimensions must be positive");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw DimensionError("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = value_type(T(1));
        return m;
    }

    static Matrix columnVector(std::span<const value_type> v) {
        return Matrix(v.size(), 1, std::vector<value_type>(v.begin(), v.end()));
    }

    static Matrix rowVector(std::span<const value_type> v) {
        return Matrix(1, v.size(), std::vector<value_type>(v.begin(), v.end()));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }
    std::span<const value_type> entries() const { return data_; }

    const value_type& operator()(std::size_t i, std::size_t j) const {
        return data_[(i - 1) * cols_ + (j - 1)];
    }
    value_type& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }

    const value_type& at(std::size_t i, std::size_t j) const {
        checkRow(i);
        checkCol(j);
        return (*this)(i, j);
    }

    std::vector<value_type> row(std::size_t i) const {
        checkRow(i);
        auto first = data_.begin() + static_cast<std::ptrdiff_t>((i - 1) * cols_);
        return {first, first + static_cast<std::ptrdiff_t>(cols_)};
    }

    std::vector<value_type> col(std::size_t j) const {
        checkCol(j);
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t i = 1; i <= rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        requireSameShape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        requireSameShape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }

    /// Entry (i,l) = sum_s a_{is} * b_{sl}, accumulated for s = 1..n in order.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("matmul: " + shapeOf(a) + " times " + shapeOf(b));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 1; i <= a.rows_; ++i) {
            for (std::size_t l = 1; l <= b.cols_; ++l) {
                value_type acc;
                for (std::size_t s = 1; s <= a.cols_; ++s) acc += a(i, s) * b(s, l);
                out(i, l) = std::move(acc);
            }
        }
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix out = a;
        for (auto& e : out.data_) e = s * e;
        return out;
    }

    friend Matrix operator/(const Matrix& a, const T& s) {
        Matrix out = a;
        for (auto& e : out.data_) e = e / s;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = 1; j <= cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix conjugate() const {
        Matrix out = *this;
        for (auto& e : out.data_) e = e.conj();
        return out;
    }

    /// A* with (A*)_{ij} = conj(a_{ji}).
    Matrix hermitianAdjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = 1; j <= cols_; ++j) out(j, i) = (*this)(i, j).conj();
        return out;
    }

    /// Square and A* = A (float backend: entrywise within tol).
    bool isHermitian(double tol = kDefaultTol) const {
        if (!isSquare()) return false;
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = i; j <= cols_; ++j)
                if (!approxEqual((*this)(i, j), (*this)(j, i).conj(), tol)) return false;
        return true;
    }

    /// Copy of A with row t replaced by v.
    Matrix replaceRow(std::size_t t, std::span<const value_type> v) const {
        checkRow(t);
        if (v.size() != cols_)
            throw DimensionError("replaceRow: vector length " + std::to_string(v.size()) +
                                 " != " + std::to_string(cols_));
        Matrix out = *this;
        for (std::size_t j = 1; j <= cols_; ++j) out(t, j) = v[j - 1];
        return out;
    }

    /// Copy of A with column t replaced by v.
    Matrix replaceCol(std::size_t t, std::span<const value_type> v) const {
        checkCol(t);
        if (v.size() != rows_)
            throw DimensionError("replaceCol: vector length " + std::to_string(v.size()) +
                                 " != " + std::to_string(rows_));
        Matrix out = *this;
        for (std::size_t i = 1; i <= rows_; ++i) out(i, t) = v[i - 1];
        return out;
    }

    /// The (n-1)x(n-1) matrix with row i and column j removed.
    Matrix deleteRowCol(std::size_t i, std::size_t j) const {
        if (!isSquare()) throw DimensionError("deleteRowCol: matrix is not square");
        checkRow(i);
        checkCol(j);
        if (rows_ == 1) throw DimensionError("deleteRowCol: cannot shrink a 1x1 matrix");
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t r = 1, orow = 1; r <= rows_; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1, ocol = 1; c <= cols_; ++c) {
                if (c == j) continue;
                out(orow, ocol++) = (*this)(r, c);
            }
            ++orow;
        }
        return out;
    }

    double maxEntryMagnitude() const {
        double m = 0.0;
        for (const auto& e : data_) m = std::max(m, e.componentMagnitude());
        return m;
    }

    /// Largest absolute component over all entries.
    T maxAbsComponent() const {
        using Tr = ScalarTraits<T>;
        T best(0);
        for (const auto& e : data_) {
            for (const T* c : {&e.w(), &e.x(), &e.y(), &e.z()}) {
                T a = Tr::abs(*c);
                if (Tr::lessThan(best, a)) best = a;
            }
        }
        return best;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;

    void checkRow(std::size_t i) const {
        if (i < 1 || i > rows_) throw IndexError("row", i, rows_);
    }
    void checkCol(std::size_t j) const {
        if (j < 1 || j > cols_) throw IndexError("column", j, cols_);
    }

    static std::string shapeOf(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    static void requireSameShape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("shape mismatch: " + shapeOf(a) + " vs " + shapeOf(b));
    }
};

template <Scalar T>
bool approxEqual(const Matrix<T>& a, const Matrix<T>& b, double tol = kDefaultTol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k)
        if (!approxEqual(ea[k], eb[k], tol)) return false;
    return true;
}

template <Scalar To, Scalar From>
Matrix<To> convertTo(const Matrix<From>& a) {
    std::vector<Coquaternion<To>> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(convertTo<To>(e));
    return Matrix<To>(a.rows(), a.cols(), std::move(out));
}

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

}  // namespace coqla
