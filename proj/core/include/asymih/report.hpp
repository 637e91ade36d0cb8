// Structured (JSON) renderings of the library's results.
#pragma once

#include "asymih/algebraic_set.hpp"
#include "asymih/arcs.hpp"
#include "asymih/ih.hpp"
#include "asymih/models.hpp"
#include "asymih/pseudomanifold.hpp"

#include <nlohmann/json.hpp>

namespace asymih {

using Json = nlohmann::ordered_json;

Json to_json(const GaussRat& z);
Json to_json(const Point& p);
Json to_json(const MonomialArc& arc);
Json to_json(const Witness& w);
Json to_json(const AlgebraicSet& s);
Json to_json(const DirectionSet& d);
Json to_json(const ArcLimit& l);
Json to_json(const PMReport& r);
Json to_json(const ChainVector& c, const SimplicialComplex& x);
Json to_json(const DualityReport& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const std::vector<long>& ranks);

}  // namespace asymih
