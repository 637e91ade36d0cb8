// Critical values K0(F) = F(Sing F) of a map C^2 -> C^2.
#pragma once

#include "asymih/algebraic_set.hpp"
#include "asymih/poly_map.hpp"

#include <cstdint>

namespace asymih {

/// Eliminates the source variables from (F1 - y1, F2 - y2, det DF) with
/// pairwise resultants, keeps the lowest-degree eliminant as a curve
/// containing K0(F) and splits it into coprime squarefree components. Each
/// component is then sampled: it is certified when some sampled point has a
/// preimage on Sing F, refuted when every sampled fiber was solved
/// completely without one, and left as a candidate otherwise. The other
/// eliminants are returned as auxiliary equations.
///
/// Throws std::invalid_argument if the Jacobian determinant vanishes
/// identically or the map is not C^2 -> C^2.
AlgebraicSet critical_values(const PolyMap& f, int samples = 4, std::uint64_t seed = 0);

}  // namespace asymih
