#include "coqla/adjoint.hpp"

#include <cmath>
#include <utility>

namespace coqla {

namespace {

template <Scalar T>
Complex<T> bareissDeterminant(ComplexMatrix<T> m) {
    const std::size_t n = m.rows();
    bool negate = false;
    Complex<T> prev(T(1));
    for (std::size_t k = 1; k < n; ++k) {
        if (m(k, k).isZero()) {
            std::size_t p = k + 1;
            while (p <= n && m(p, k).isZero()) ++p;
            if (p > n) return Complex<T>();
            for (std::size_t c = k; c <= n; ++c) std::swap(m(k, c), m(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Complex<T>();
        }
        prev = m(k, k);
    }
    return negate ? -m(n, n) : m(n, n);
}

template <Scalar T>
Complex<T> pivotedDeterminant(ComplexMatrix<T> m) {
    const std::size_t n = m.rows();
    Complex<T> det(T(1));
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r <= n; ++r)
            if (m(r, k).modulus() > m(p, k).modulus()) p = r;
        if (m(p, k).isZero()) return Complex<T>();
        if (p != k) {
            for (std::size_t c = 1; c <= n; ++c) std::swap(m(k, c), m(p, c));
            det = -det;
        }
        det = det * m(k, k);
        for (std::size_t i = k + 1; i <= n; ++i) {
            const Complex<T> f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j <= n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

}  // namespace

template <Scalar T>
std::pair<ComplexMatrix<T>, ComplexMatrix<T>> splitComplexParts(const Matrix<T>& a) {
    ComplexMatrix<T> a1(a.rows(), a.cols());
    ComplexMatrix<T> a2(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            const auto& q = a(i, j);
            a1(i, j) = Complex<T>(q.w(), q.x());
            a2(i, j) = Complex<T>(q.y(), q.z());  // q2 j + q3 k = (q2 + q3 i) j
        }
    }
    return {std::move(a1), std::move(a2)};
}

template <Scalar T>
ComplexMatrix<T> complexAdjoint(const Matrix<T>& a) {
    if (!a.isSquare()) throw DimensionError("complexAdjoint: matrix is not square");
    const std::size_t n = a.rows();
    const auto [a1, a2] = splitComplexParts(a);
    ComplexMatrix<T> chi(2 * n, 2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            chi(i, j) = a1(i, j);
            chi(i, j + n) = a2(i, j);
            chi(i + n, j) = a2(i, j).conj();
            chi(i + n, j + n) = a1(i, j).conj();
        }
    }
    return chi;
}

template <Scalar T>
Complex<T> complexDeterminant(const ComplexMatrix<T>& m) {
    if (m.rows() != m.cols()) throw DimensionError("complexDeterminant: matrix is not square");
    if constexpr (isExact<T>())
        return bareissDeterminant(m);
    else
        return pivotedDeterminant(m);
}

template <Scalar T>
Complex<T> qdet(const Matrix<T>& a) {
    return complexDeterminant(complexAdjoint(a));
}

#define COQLA_INSTANTIATE_ADJOINT(T)                                                           \
    template std::pair<ComplexMatrix<T>, ComplexMatrix<T>> splitComplexParts(const Matrix<T>&); \
    template ComplexMatrix<T> complexAdjoint(const Matrix<T>&);                                \
    template Complex<T> complexDeterminant(const ComplexMatrix<T>&);                           \
    template Complex<T> qdet(const Matrix<T>&);

COQLA_INSTANTIATE_ADJOINT(Rational)
COQLA_INSTANTIATE_ADJOINT(double)

#undef COQLA_INSTANTIATE_ADJOINT

}  // namespace coqla
