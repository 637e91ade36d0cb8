// Seeded families of polynomial maps with known properness.
#pragma once

#include "asymih/poly_map.hpp"
#include "asymih/random.hpp"

#include <cstdint>
#include <vector>

namespace asymih {

/// A random elementary automorphism of C^2: a shear (x, y + c x^k) or
/// (x + c y^k, y) with 1 <= k <= max_power, or an invertible integer
/// linear map.
PolyMap random_elementary(Rng& rng, int max_power);

/// `count` maps, each a composition of `factors` random elementary
/// automorphisms. All members are automorphisms, hence proper.
std::vector<PolyMap> automorphism_corpus(std::uint64_t seed, int count, int factors = 3, int max_power = 2);

}  // namespace asymih
