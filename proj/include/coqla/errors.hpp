#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coqla {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverse requested for zero or for a zero divisor (norm form vanishes).
class ZeroDivisorOrZero : public Error {
public:
    explicit ZeroDivisorOrZero(bool isZero)
        : Error(isZero ? "inverse of zero" : "inverse of a zero divisor (norm form is 0)"),
          isZero_(isZero) {}

    /// True when the operand was 0 itself rather than a nonzero zero divisor.
    bool isZero() const noexcept { return isZero_; }

private:
    bool isZero_;
};

/// Shape mismatch: incompatible dimensions, vector lengths, non-square input.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// 1-based index outside the valid range.
class IndexError : public DimensionError {
public:
    IndexError(const std::string& what, std::size_t index, std::size_t bound)
        : DimensionError(what + ": index " + std::to_string(index) + " not in 1.." +
                         std::to_string(bound)),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Matrix order exceeds the configured cap for n!-term enumeration.
class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(std::size_t n, std::size_t cap)
        : Error("matrix order " + std::to_string(n) + " exceeds the size cap " +
                std::to_string(cap)),
          n_(n), cap_(cap) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

/// A matrix file could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

class NotBijective : public Error {
public:
    using Error::Error;
};

/// A coefficient matrix that must be Hermitian is not. `operand` names it ("A", "B").
class NotHermitian : public Error {
public:
    explicit NotHermitian(std::string operand)
        : Error("matrix " + operand + " is not Hermitian"), operand_(std::move(operand)) {}

    const std::string& operand() const noexcept { return operand_; }

private:
    std::string operand_;
};

/// A Hermitian coefficient matrix has zero determinant.
class Singular : public Error {
public:
    explicit Singular(std::string operand)
        : Error("matrix " + operand + " is singular (det = 0)"), operand_(std::move(operand)) {}

    const std::string& operand() const noexcept { return operand_; }

private:
    std::string operand_;
};

/// Malformed coquaternion or matrix text. `position` is a 0-based byte offset
/// into the parsed text (or into the offending line for matrix files).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position, std::string token)
        : Error(message + " at position " + std::to_string(position) + " near '" + token + "'"),
          position_(position), token_(std::move(token)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

}  // namespace coqla
