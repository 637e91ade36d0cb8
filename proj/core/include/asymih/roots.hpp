// Exact Gaussian-rational roots of univariate polynomials.
#pragma once

#include "asymih/poly.hpp"

#include <vector>

namespace asymih {

struct Root {
    GaussRat value;
    int multiplicity = 1;
};

/// Result of a root search: the Q(i)-roots found plus how many roots (with
/// multiplicity, over C) lie outside Q(i) or could not be reached.
struct RootSet {
    std::vector<Root> roots;
    int unresolved = 0;
};

/// Roots in Q(i) of sum_k coeffs[k] z^k, sorted canonically. Candidates are
/// the quotients of Gaussian divisors of the constant and leading
/// coefficients (after clearing denominators); every root is verified
/// exactly. When a coefficient norm exceeds the enumeration cap, the
/// remaining roots are reported as unresolved rather than guessed.
RootSet gaussian_roots(std::vector<GaussRat> coeffs);

/// Same for a polynomial that uses only variable `var`.
RootSet gaussian_roots(const Poly& p, std::size_t var);

/// Horner evaluation of a coefficient vector.
GaussRat evaluate_univariate(const std::vector<GaussRat>& coeffs, const GaussRat& z);

}  // namespace asymih
