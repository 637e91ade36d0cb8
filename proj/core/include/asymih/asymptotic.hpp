// The asymptotic (Jelonek) set of a polynomial map C^2 -> C^2: the points y
// admitting x_k -> infinity with F(x_k) -> y. F is proper exactly when this
// set is empty.
//
// Candidates come from elimination (leading coefficients of resultants of
// the fiber equations); each candidate curve is then sampled and either
// certified by an explicit escaping monomial arc, refuted by a fiber-degree
// test, or left as a candidate. Refusal of the bounded arc search is not a
// proof, so `unknown` is a legitimate verdict.
#pragma once

#include "asymih/algebraic_set.hpp"
#include "asymih/poly_map.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace asymih {

struct NotGenericallyFinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Leading coefficients lc_j(y) of R_j = Res_{x_{3-j}}(F1 - y1, F2 - y2) in
/// x_j, split into coprime squarefree components, all with status candidate.
/// Throws NotGenericallyFinite when det DF == 0 or both resultants vanish.
AlgebraicSet jelonek_candidates(const PolyMap& f);

/// Searches monomial arcs (c1 t^q1, c2 t^q2), |q_j| <= max_exp, min q < 0,
/// whose image tends to y0. Exponent pairs are visited in order of
/// (|q1| + |q2|, q1, q2) and filtered by the Newton polygon condition that
/// every negative t-order be attained by at least two monomials of each
/// F_k - y0_k. The coefficients are found by solving the resulting
/// equations over Q(i). Returns the first witness or nullopt (refusal).
std::optional<Witness> certify_point(const PolyMap& f, const Point& y0, int max_exp);

struct JelonekOptions {
    int samples = 3;
    int max_exp = 4;
    std::uint64_t seed = 0;
};

/// Candidates refined by sampling: certified if a sampled point has a
/// witness; refuted if no sample has one and no sampled fiber loses degree;
/// candidate otherwise.
AlgebraicSet jelonek_set(const PolyMap& f, const JelonekOptions& opts = {});

enum class Properness { proper, non_proper, unknown };

std::string to_string(Properness p);

/// Verdict derived from a computed Jelonek set.
Properness properness_of(const AlgebraicSet& jelonek);

Properness is_proper(const PolyMap& f, const JelonekOptions& opts = {});

/// phi(s) = (phi_1(s), phi_2(s)) with phi(0) = point and phi(C) inside the curve.
using Parametrization = std::array<Poly, 2>;

/// Polynomial parametrisation through `point` of the curve h = 0 for
/// deg h <= 2: a line through the point (tangent line check) or a parabola.
/// nullopt when none exists or deg h >= 3. Throws std::invalid_argument if the
/// point is not on the curve.
std::optional<Parametrization> uniruled_witness(const Poly& h, const Point& point);

/// Same, for component `index` of a Jelonek set; the component must be certified.
std::optional<Parametrization> uniruled_witness(const AlgebraicSet& set, std::size_t index, const Point& point);

}  // namespace asymih
