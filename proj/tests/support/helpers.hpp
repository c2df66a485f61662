#pragma once

#include <cstdint>
#include <string>

#include "coqla/coqla.hpp"

namespace th {

using Q = coqla::ExactCoq;
using M = coqla::ExactMatrix;
using coqla::Rational;

inline Q q(const std::string& s) { return coqla::parseCoquaternion<Rational>(s); }
inline M mat(const std::string& s) { return coqla::parseMatrix<Rational>(s); }

inline M workedA() { return mat("0; 1-k; 1-j\n1+k; 0; 1+j\n1+j; 1-j; 0\n"); }
inline M workedB() { return mat("1; k\n-k; 1\n"); }
inline M workedC() { return mat("i; 1\n0; j\nk; -i\n"); }

// Base seed for randomized checks; COQLA_SEED overrides.
inline std::uint64_t baseSeed() { return coqla::seedFromEnvironment(20240611); }

}  // namespace th
