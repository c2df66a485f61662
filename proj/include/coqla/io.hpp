#pragma once

/**
 * Text forms of coquaternions and matrices.
 *
 * Coquaternion grammar (whitespace-insensitive):
 *
 *   value  := term (('+' | '-') term)*         first term may carry a sign
 *   term   := number unit? | unit
 *   number := decimal ('/' decimal)?            e.g. 2, 0.5, 1e-3, 3/4
 *   unit   := 'i' | 'j' | 'k'
 *
 * so `1-2i+3j-0.5k`, `-k` and `3/4j` are all valid. Repeated units add up.
 * Decimals are converted exactly on the rational backend.
 *
 * Canonical output lists the nonzero terms in w, i, j, k order, omits a unit
 * coefficient of 1, has no leading '+', and prints "0" for zero.
 *
 * Matrix files: one row per line, entries separated by ';'. Blank lines and
 * '#' comments are ignored.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "coqla/adjoint.hpp"
#include "coqla/matrix.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

template <Scalar T>
T parseScalar(std::string_view text);

template <Scalar T>
std::string formatScalar(const T& value);

template <Scalar T>
Coquaternion<T> parseCoquaternion(std::string_view text);

template <Scalar T>
std::string formatCoquaternion(const Coquaternion<T>& q);

/// Complex values print as coquaternions with only the 1 and i parts.
template <Scalar T>
std::string formatComplex(const Complex<T>& z);

template <Scalar T>
Matrix<T> parseMatrix(std::string_view text);

/// One line per row, entries joined by "; ", trailing newline.
template <Scalar T>
std::string formatMatrix(const Matrix<T>& m);

/// Reads and parses a matrix file. Throws Error if the file cannot be read.
template <Scalar T>
Matrix<T> readMatrixFile(const std::filesystem::path& path);

}  // namespace coqla
