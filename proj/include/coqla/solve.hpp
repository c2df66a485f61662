#pragma once

/**
 * Determinantal inverses and Cramer-rule solvers for Hermitian coquaternion
 * systems.
 *
 * With det A != 0 for Hermitian A:
 *
 *   (A^{-1})_{ij} = R_{ji} / det A = L_{ji} / det A
 *   A x = y   :  x_j = cdet_j A_{.j}(y) / det A
 *   x A = y   :  x_i = rdet_i A_{i.}(y) / det A
 *   A X B = C :  x_ij = rdet_j B_{j.}(c^A_{i.}) / (det A det B)      (row-first)
 *             :  x_ij = cdet_i A_{.i}(c^B_{.j}) / (det A det B)      (column-first)
 *
 * where c^A_{il} = cdet_i A_{.i}(c_{.l}) and c^B_{kj} = rdet_j B_{j.}(c_{k.}).
 */

#include <cstddef>
#include <optional>

#include "coqla/matrix.hpp"
#include "coqla/rcdet.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

/// Which cofactors build the adjugate: R_{ji} (right) or L_{ji} (left).
enum class AdjugateSide { right, left };

enum class TwoSidedRoute {
    rowFirst,  // reduce C by A's column determinants, then B's row determinants
    colFirst,  // reduce C by B's row determinants, then A's column determinants
};

template <Scalar T>
struct SolveOutcome {
    Matrix<T> solution;
    T detA;
    std::optional<T> detB;
    /// Largest absolute component of (lhs - rhs); exactly 0 on the exact backend.
    T residualMax;
};

/// Adjugate with entry (i,j) = R_{ji} or L_{ji} (no division by det A).
template <Scalar T>
Matrix<T> adjugate(const Matrix<T>& a, AdjugateSide side, const DetOptions& opts = {});

/// Inverse of a Hermitian matrix. Throws NotHermitian, Singular.
template <Scalar T>
Matrix<T> invHermitian(const Matrix<T>& a, AdjugateSide side, const DetOptions& opts = {});

/// Solves A x = y for a column y (n x 1).
template <Scalar T>
SolveOutcome<T> solveRight(const Matrix<T>& a, const Matrix<T>& y, const DetOptions& opts = {});

/// Solves x A = y for a row y (1 x n).
template <Scalar T>
SolveOutcome<T> solveLeft(const Matrix<T>& a, const Matrix<T>& y, const DetOptions& opts = {});

/// m x n matrix whose row i is c^A_{i.}: entry (i,l) = cdet_i A_{.i}(c_{.l}).
template <Scalar T>
Matrix<T> reduceByColumnDets(const Matrix<T>& a, const Matrix<T>& c, const DetOptions& opts = {});

/// m x n matrix whose column j is c^B_{.j}: entry (k,j) = rdet_j B_{j.}(c_{k.}).
template <Scalar T>
Matrix<T> reduceByRowDets(const Matrix<T>& b, const Matrix<T>& c, const DetOptions& opts = {});

/// Solves A X B = C with Hermitian A (m x m) and B (n x n).
template <Scalar T>
SolveOutcome<T> solveTwoSided(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                              TwoSidedRoute route, const DetOptions& opts = {});

/// Solves A X = C.
template <Scalar T>
SolveOutcome<T> solveAX(const Matrix<T>& a, const Matrix<T>& c, const DetOptions& opts = {});

/// Solves X B = C.
template <Scalar T>
SolveOutcome<T> solveXB(const Matrix<T>& b, const Matrix<T>& c, const DetOptions& opts = {});

}  // namespace coqla
