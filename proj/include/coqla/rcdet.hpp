#pragma once

/**
 * Row and column determinants of square coquaternion matrices.
 *
 * rdet_i sums, over every permutation s of {1..n}, the signed monomial
 *
 *   (-1)^(n-r) a_{i s(i)} a_{s(i) s^2(i)} ... a_{. i} (other cycles ...)
 *
 * with the cycles in left-ordered notation anchored at row i (see CycleOrder).
 * cdet_j is the mirror construction with right-ordered cycles ending at column
 * j. Because the factors do not commute, the factor order is the definition.
 *
 * The cofactor expansions
 *
 *   rdet_i A = sum_j a_{ij} R_{ij},     cdet_j A = sum_i L_{ij} a_{ij}
 *
 * give a second, recursive route to the same values. For Hermitian matrices
 * every rdet_i and cdet_j coincide and are real; that common value is det A.
 *
 * The defined implementations are explicitly instantiated for Rational and
 * double.
 */

#include <cstddef>

#include "coqla/matrix.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

struct DetOptions {
    /// Largest order accepted by the n!-term enumeration.
    std::size_t maxN = 9;
    /// Float backend tolerance (relative).
    double tol = kDefaultTol;
    /// detHermitian additionally evaluates cdet_1 and checks it matches rdet_1.
    bool crossCheck = false;
};

/// i-th row determinant by direct permutation enumeration.
template <Scalar T>
Coquaternion<T> rdet(std::size_t i, const Matrix<T>& a, const DetOptions& opts = {});

/// j-th column determinant by direct permutation enumeration.
template <Scalar T>
Coquaternion<T> cdet(std::size_t j, const Matrix<T>& a, const DetOptions& opts = {});

/// Right ij-th cofactor R_{ij}; R_{11} = 1 for a 1x1 matrix.
template <Scalar T>
Coquaternion<T> rightCofactor(std::size_t i, std::size_t j, const Matrix<T>& a,
                              const DetOptions& opts = {});

/// Left ij-th cofactor L_{ij}; L_{11} = 1 for a 1x1 matrix.
template <Scalar T>
Coquaternion<T> leftCofactor(std::size_t i, std::size_t j, const Matrix<T>& a,
                             const DetOptions& opts = {});

/// rdet_i computed by recursive right-cofactor expansion down to 1x1 minors.
/// Does not touch the enumeration code path.
template <Scalar T>
Coquaternion<T> rdetByExpansion(std::size_t i, const Matrix<T>& a, const DetOptions& opts = {});

/// cdet_j computed by recursive left-cofactor expansion down to 1x1 minors.
template <Scalar T>
Coquaternion<T> cdetByExpansion(std::size_t j, const Matrix<T>& a, const DetOptions& opts = {});

/// Determinant of a Hermitian matrix (the common real value of all rdet_i and
/// cdet_j). Throws NotHermitian, SizeCapExceeded.
template <Scalar T>
T detHermitian(const Matrix<T>& a, const DetOptions& opts = {});

/// Scale-aware singularity test used by the solvers: exact backend tests
/// det == 0; float tests |det| <= tol * (1 + max entry magnitude)^n.
template <Scalar T>
bool detIsZero(const T& det, const Matrix<T>& a, double tol = kDefaultTol);

}  // namespace coqla
