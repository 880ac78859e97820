#pragma once

#include <vector>

#include "combquad/rational.hpp"

namespace combquad {

/// Dense row-major square matrix of rationals.
struct RationalMatrix {
    std::size_t n = 0;
    std::vector<Rational> entries;

    explicit RationalMatrix(std::size_t size) : n(size), entries(size * size) {}
    Rational& operator()(std::size_t r, std::size_t c) { return entries[r * n + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
};

/**
 * Solves A x = b exactly. Columns and rows are scaled to integers, then
 * fraction-free (Bareiss) elimination with partial pivoting on |a_ij| runs
 * without any gcd until the final division. Throws InternalError when A is
 * singular.
 */
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace combquad
