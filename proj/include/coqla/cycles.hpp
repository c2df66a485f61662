#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace coqla {

/// Which disjoint-cycle ordering convention a CycleForm follows.
enum class CycleOrder {
    /// Row-determinant form: the anchor's cycle comes first and starts with the
    /// anchor; every other cycle starts with its minimal element and those
    /// cycles appear in increasing order of their minima.
    left,
    /// Column-determinant form: the anchor's cycle comes last and ends with the
    /// anchor; every other cycle ends with its minimal element and those cycles
    /// appear in decreasing order of their minima (reading left to right).
    right,
};

/**
 * A permutation of {1..n} written in anchored cycle notation.
 *
 * `mapping[k-1]` is the image of k. Cycles are stored exactly as written; in
 * both orderings a written cycle (c_1 c_2 ... c_m) means c_1 -> c_2 -> ... ->
 * c_m -> c_1. Fixed points are 1-cycles and count towards `cycleCount`.
 */
struct CycleForm {
    std::size_t n = 0;
    std::size_t anchor = 0;
    CycleOrder order = CycleOrder::left;
    std::vector<std::size_t> mapping;
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t cycleCount = 0;
    int sign = 1;  // (-1)^(n - cycleCount)

    /// (row, col) index pairs of the monomial factors in multiplication order.
    ///
    /// Every cycle contributes the chain a_{c,s(c)} a_{s(c),s^2(c)} ... ending
    /// back at its leading element c: for the left form c is the first written
    /// element, for the right form the last one.
    std::vector<std::pair<std::size_t, std::size_t>> factorChain() const;
};

/// Decomposes a one-line permutation (values 1..n) into anchored cycle form.
/// Throws NotBijective if `mapping` is not a permutation, IndexError if the
/// anchor is out of range.
CycleForm cycleDecompose(std::span<const std::size_t> mapping, std::size_t anchor,
                         CycleOrder order);

}  // namespace coqla
