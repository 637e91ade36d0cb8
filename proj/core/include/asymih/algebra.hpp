// Division, gcd, squarefree parts and resultants for multivariate polynomials.
#pragma once

#include "asymih/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asymih {

/// Multivariate division by a single divisor in graded-lex order: a = q*b + r.
/// No term of r is divisible by the leading monomial of b.
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);

/// a / b when b divides a exactly, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Scales a nonzero polynomial so that its graded-lex leading coefficient is 1.
Poly make_monic(const Poly& p);

/// Greatest common divisor, monic in graded-lex order (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& polys);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var);
Poly primitive_part_in(const Poly& p, std::size_t var);

/// Pseudo-remainder of a by b with respect to `var` (up to a factor that is a power of lc(b)).
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Product of the distinct irreducible factors of p, made monic.
Poly squarefree_part(const Poly& p);

/// Splits a list of nonzero polynomials into pairwise coprime squarefree
/// monic factors whose product has the same zero set. Univariate factors
/// are further split off their Gaussian-rational linear factors. Constants
/// are dropped. Output is sorted canonically.
std::vector<Poly> coprime_squarefree_basis(const std::vector<Poly>& polys);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss) elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

/// Sylvester matrix of f and g with respect to `var`.
std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f, const Poly& g, std::size_t var);

/// Resultant with respect to `var`: the Sylvester determinant. When one
/// argument has degree 0 in var the result is that argument raised to the
/// degree of the other; a zero argument gives zero. Throws
/// std::invalid_argument when both arguments are zero.
Poly resultant(const Poly& f, const Poly& g, std::size_t var);
Poly resultant(const Poly& f, const Poly& g, const std::string& var);

/// Canonical total order on polynomials over the same variables (degree, then terms).
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace asymih
