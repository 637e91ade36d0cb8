// Polynomial maps F = (F_1, ..., F_n) and their map-level invariants.
#pragma once

#include "asymih/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace asymih {

class PolyMap {
public:
    /// Throws std::invalid_argument if components is empty or the variable lists differ.
    explicit PolyMap(std::vector<Poly> components);

    const std::vector<Poly>& components() const { return components_; }
    const Poly& operator[](std::size_t k) const { return components_[k]; }
    const std::vector<std::string>& source_vars() const { return components_.front().vars(); }
    std::size_t size() const { return components_.size(); }

    /// "(x, x*y)"
    std::string to_string() const;

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::vector<Poly> components_;
};

/// Parses "F=(x, x*y)", "(x, x*y)" or "x; x*y". Components are split at
/// top-level commas or semicolons.
PolyMap parse_map(std::string_view text, const std::vector<std::string>& vars = {"x", "y"});

/// Matrix of formal partial derivatives dF_i/dx_j.
std::vector<std::vector<Poly>> jacobian_matrix(const PolyMap& f);

/// det(dF_i/dx_j). Throws std::invalid_argument unless the map is square.
Poly jacobian_det(const PolyMap& f);

/// outer o inner: the components of `outer` with variable k replaced by inner[k].
/// Throws std::invalid_argument when the sizes do not match.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Names of the target coordinates: y1, ..., yn.
std::vector<std::string> target_vars(std::size_t n);

}  // namespace asymih
