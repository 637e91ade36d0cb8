// Gaussian-rational solutions of small bivariate polynomial systems.
#pragma once

#include "asymih/poly.hpp"

#include <vector>

namespace asymih {

using Point = std::vector<GaussRat>;

struct SolveResult {
    /// Verified common zeros in Q(i)^2 (coordinates in the polynomials' variable order).
    std::vector<Point> points;
    /// The common zero set contains a curve (or the whole plane).
    bool positive_dimensional = false;
    /// Some root of an eliminant could not be resolved over Q(i).
    bool incomplete = false;
};

/// Common zeros of polynomials in which only variables u and v occur.
/// Elimination uses resultants in v; candidate coordinates are Q(i)-roots of
/// the eliminants, and every reported point satisfies all equations exactly.
SolveResult solve_bivariate(const std::vector<Poly>& system, std::size_t u, std::size_t v);

}  // namespace asymih
