// JSON documents for complexes and filtrations.
//
// {
//   "vertices": 7,
//   "top_simplices": [[0,1,3], ...],
//   "subcomplexes": {"pinch": [[0]]},        optional
//   "boundary": "name",                       optional
//   "filtration": {"indices": {"0": "pinch"}} optional
// }
#pragma once

#include "asymih/simplicial_complex.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace asymih {

/// Throws ComplexError for schema or consistency violations.
SimplicialComplex load_complex(const nlohmann::json& doc);
SimplicialComplex load_complex_file(const std::filesystem::path& path);

nlohmann::json complex_to_json(const SimplicialComplex& x);

/// Filtration indices as declared in the document (empty when absent).
std::map<int, std::string> filtration_indices(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace asymih
