#include "coqla/solve.hpp"

#include <string>

namespace coqla {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// det of a Hermitian coefficient matrix, raising errors that name the operand.
template <Scalar T>
T checkedDet(const Matrix<T>& a, const char* operand, const DetOptions& opts) {
    if (!a.isHermitian(opts.tol)) throw NotHermitian(operand);
    T det = detHermitian(a, opts);
    if (detIsZero(det, a, opts.tol)) throw Singular(operand);
    return det;
}

}  // namespace

template <Scalar T>
Matrix<T> adjugate(const Matrix<T>& a, AdjugateSide side, const DetOptions& opts) {
    if (!a.isSquare()) throw DimensionError("adjugate: matrix is not square");
    const std::size_t n = a.rows();
    Matrix<T> adj(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            adj(i, j) = side == AdjugateSide::right ? rightCofactor(j, i, a, opts)
                                                    : leftCofactor(j, i, a, opts);
    return adj;
}

template <Scalar T>
Matrix<T> invHermitian(const Matrix<T>& a, AdjugateSide side, const DetOptions& opts) {
    const T det = checkedDet(a, "A", opts);
    return adjugate(a, side, opts) / det;
}

template <Scalar T>
SolveOutcome<T> solveRight(const Matrix<T>& a, const Matrix<T>& y, const DetOptions& opts) {
    if (!a.isSquare()) throw DimensionError("solveRight: A is " + shape(a.rows(), a.cols()));
    if (y.rows() != a.rows() || y.cols() != 1)
        throw DimensionError("solveRight: y is " + shape(y.rows(), y.cols()) + ", expected " +
                             shape(a.rows(), 1));
    const T det = checkedDet(a, "A", opts);
    const std::size_t n = a.rows();
    const auto yc = y.col(1);
    Matrix<T> x(n, 1);
    for (std::size_t j = 1; j <= n; ++j) x(j, 1) = cdet(j, a.replaceCol(j, yc), opts) / det;
    T residual = (a * x - y).maxAbsComponent();
    return {std::move(x), det, std::nullopt, std::move(residual)};
}

template <Scalar T>
SolveOutcome<T> solveLeft(const Matrix<T>& a, const Matrix<T>& y, const DetOptions& opts) {
    if (!a.isSquare()) throw DimensionError("solveLeft: A is " + shape(a.rows(), a.cols()));
    if (y.cols() != a.rows() || y.rows() != 1)
        throw DimensionError("solveLeft: y is " + shape(y.rows(), y.cols()) + ", expected " +
                             shape(1, a.rows()));
    const T det = checkedDet(a, "A", opts);
    const std::size_t n = a.rows();
    const auto yr = y.row(1);
    Matrix<T> x(1, n);
    for (std::size_t i = 1; i <= n; ++i) x(1, i) = rdet(i, a.replaceRow(i, yr), opts) / det;
    T residual = (x * a - y).maxAbsComponent();
    return {std::move(x), det, std::nullopt, std::move(residual)};
}

template <Scalar T>
Matrix<T> reduceByColumnDets(const Matrix<T>& a, const Matrix<T>& c, const DetOptions& opts) {
    if (!a.isSquare() || c.rows() != a.rows())
        throw DimensionError("reduceByColumnDets: A is " + shape(a.rows(), a.cols()) +
                             ", C is " + shape(c.rows(), c.cols()));
    Matrix<T> out(c.rows(), c.cols());
    for (std::size_t l = 1; l <= c.cols(); ++l) {
        const auto column = c.col(l);
        for (std::size_t i = 1; i <= a.rows(); ++i) out(i, l) = cdet(i, a.replaceCol(i, column), opts);
    }
    return out;
}

template <Scalar T>
Matrix<T> reduceByRowDets(const Matrix<T>& b, const Matrix<T>& c, const DetOptions& opts) {
    if (!b.isSquare() || c.cols() != b.rows())
        throw DimensionError("reduceByRowDets: B is " + shape(b.rows(), b.cols()) + ", C is " +
                             shape(c.rows(), c.cols()));
    Matrix<T> out(c.rows(), c.cols());
    for (std::size_t k = 1; k <= c.rows(); ++k) {
        const auto row = c.row(k);
        for (std::size_t j = 1; j <= b.rows(); ++j) out(k, j) = rdet(j, b.replaceRow(j, row), opts);
    }
    return out;
}

template <Scalar T>
SolveOutcome<T> solveTwoSided(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                              TwoSidedRoute route, const DetOptions& opts) {
    if (!a.isSquare() || !b.isSquare() || c.rows() != a.rows() || c.cols() != b.rows())
        throw DimensionError("solveTwoSided: A is " + shape(a.rows(), a.cols()) + ", B is " +
                             shape(b.rows(), b.cols()) + ", C is " + shape(c.rows(), c.cols()));
    const T detA = checkedDet(a, "A", opts);
    const T detB = checkedDet(b, "B", opts);
    const T scale = detA * detB;
    Matrix<T> x = route == TwoSidedRoute::rowFirst
                      ? reduceByRowDets(b, reduceByColumnDets(a, c, opts), opts) / scale
                      : reduceByColumnDets(a, reduceByRowDets(b, c, opts), opts) / scale;
    T residual = (a * x * b - c).maxAbsComponent();
    return {std::move(x), detA, detB, std::move(residual)};
}

template <Scalar T>
SolveOutcome<T> solveAX(const Matrix<T>& a, const Matrix<T>& c, const DetOptions& opts) {
    if (!a.isSquare() || c.rows() != a.rows())
        throw DimensionError("solveAX: A is " + shape(a.rows(), a.cols()) + ", C is " +
                             shape(c.rows(), c.cols()));
    const T detA = checkedDet(a, "A", opts);
    Matrix<T> x = reduceByColumnDets(a, c, opts) / detA;
    T residual = (a * x - c).maxAbsComponent();
    return {std::move(x), detA, std::nullopt, std::move(residual)};
}

template <Scalar T>
SolveOutcome<T> solveXB(const Matrix<T>& b, const Matrix<T>& c, const DetOptions& opts) {
    if (!b.isSquare() || c.cols() != b.rows())
        throw DimensionError("solveXB: B is " + shape(b.rows(), b.cols()) + ", C is " +
                             shape(c.rows(), c.cols()));
    const T detB = checkedDet(b, "B", opts);
    Matrix<T> x = reduceByRowDets(b, c, opts) / detB;
    T residual = (x * b - c).maxAbsComponent();
    // Same shape as solveTwoSided(I, B, C): detA of the identity is 1.
    return {std::move(x), T(1), detB, std::move(residual)};
}

#define COQLA_INSTANTIATE_SOLVE(T)                                                               \
    template Matrix<T> adjugate(const Matrix<T>&, AdjugateSide, const DetOptions&);             \
    template Matrix<T> invHermitian(const Matrix<T>&, AdjugateSide, const DetOptions&);         \
    template SolveOutcome<T> solveRight(const Matrix<T>&, const Matrix<T>&, const DetOptions&); \
    template SolveOutcome<T> solveLeft(const Matrix<T>&, const Matrix<T>&, const DetOptions&);  \
    template Matrix<T> reduceByColumnDets(const Matrix<T>&, const Matrix<T>&,                   \
                                          const DetOptions&);                                   \
    template Matrix<T> reduceByRowDets(const Matrix<T>&, const Matrix<T>&, const DetOptions&);  \
    template SolveOutcome<T> solveTwoSided(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&, \
                                           TwoSidedRoute, const DetOptions&);                   \
    template SolveOutcome<T> solveAX(const Matrix<T>&, const Matrix<T>&, const DetOptions&);    \
    template SolveOutcome<T> solveXB(const Matrix<T>&, const Matrix<T>&, const DetOptions&);

COQLA_INSTANTIATE_SOLVE(Rational)
COQLA_INSTANTIATE_SOLVE(double)

#undef COQLA_INSTANTIATE_SOLVE

}  // namespace coqla
