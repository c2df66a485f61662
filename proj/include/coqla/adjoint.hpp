#pragma once

/**
 * Complex adjoint representation of coquaternion matrices.
 *
 * Writing A = A1 + A2 j with complex A1, A2 (q0 + q1 i + q2 j + q3 k splits
 * as (q0 + q1 i) + (q2 + q3 i) j), the complex adjoint is the 2n x 2n block
 * matrix
 *
 *     chi_A = [ A1        A2      ]
 *             [ conj(A2)  conj(A1) ]
 *
 * and the q-determinant is |A|_q = det(chi_A). It is multiplicative and
 * vanishes exactly when A is not invertible, which makes it an independent
 * invertibility check for the row/column determinant machinery.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "coqla/matrix.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

template <Scalar T>
struct Complex {
    T re{0};
    T im{0};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT: real embedding
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    Complex operator-() const { return {-re, -im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const T d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    Complex conj() const { return {re, -im}; }
    bool isZero() const { return ScalarTraits<T>::isZero(re) && ScalarTraits<T>::isZero(im); }
    double modulus() const {
        return std::hypot(ScalarTraits<T>::toDouble(re), ScalarTraits<T>::toDouble(im));
    }
};

template <Scalar T>
bool approxEqual(const Complex<T>& a, const Complex<T>& b, double tol = kDefaultTol) {
    return ScalarTraits<T>::near(a.re, b.re, tol) && ScalarTraits<T>::near(a.im, b.im, tol);
}

/// Dense row-major complex matrix with 1-based indexing.
template <Scalar T>
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = Complex<T>(T(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Complex<T>& operator()(std::size_t i, std::size_t j) const {
        return data_[(i - 1) * cols_ + (j - 1)];
    }
    Complex<T>& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("complex matmul: inner dimensions differ");
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 1; i <= a.rows_; ++i)
            for (std::size_t l = 1; l <= b.cols_; ++l) {
                Complex<T> acc;
                for (std::size_t s = 1; s <= a.cols_; ++s) acc = acc + a(i, s) * b(s, l);
                out(i, l) = acc;
            }
        return out;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix out = *this;
        for (auto& e : out.data_) e = e.conj();
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex<T>> data_;
};

/// (A1, A2) with A = A1 + A2 j entrywise.
template <Scalar T>
std::pair<ComplexMatrix<T>, ComplexMatrix<T>> splitComplexParts(const Matrix<T>& a);

/// The 2n x 2n complex adjoint chi_A. Throws DimensionError for non-square A.
template <Scalar T>
ComplexMatrix<T> complexAdjoint(const Matrix<T>& a);

/// Ordinary determinant of a square complex matrix: fraction-free (Bareiss)
/// elimination on the exact backend, partial pivoting on the float backend.
template <Scalar T>
Complex<T> complexDeterminant(const ComplexMatrix<T>& m);

/// q-determinant |A|_q = det(chi_A).
template <Scalar T>
Complex<T> qdet(const Matrix<T>& a);

}  // namespace coqla
