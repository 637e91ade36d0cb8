// Behaviour of polynomial maps C^2 -> C^2 along monomial arcs at infinity.
//
// A monomial arc is t -> (c1 t^q1, c2 t^q2) for t -> 0+. It escapes to
// infinity when some coordinate with a nonzero coefficient has a negative
// exponent. Substituting an arc into a polynomial gives a Laurent polynomial
// in t, so limits are computed exactly.
#pragma once

#include "asymih/poly_map.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asymih {

struct MonomialArc {
    std::array<int, 2> exponents{0, 0};
    std::array<GaussRat, 2> coefficients{GaussRat(1), GaussRat(1)};

    /// Some coordinate with nonzero coefficient has a negative exponent.
    bool escapes() const;
    /// Most negative exponent among coordinates with nonzero coefficient.
    int escape_order() const;
    /// "(c1) t^q1, (c2) t^q2"
    std::string to_string() const;

    friend bool operator==(const MonomialArc&, const MonomialArc&) = default;
};

/// Parses the report notation "(c1) t^q1, (c2) t^q2"; exponents may be negative.
MonomialArc parse_arc(std::string_view text);

/// Laurent polynomial in t: exponent -> coefficient, zero coefficients omitted.
using Laurent = std::map<int, GaussRat>;

Laurent substitute_arc(const Poly& f, const MonomialArc& arc);

/// Per-component limit as t -> 0+; std::nullopt stands for infinity.
struct ArcLimit {
    std::vector<std::optional<GaussRat>> values;
    bool finite() const;
    std::string to_string() const;
};

ArcLimit arc_limit(const PolyMap& f, const MonomialArc& arc);

/// A point of P^1 normalised as [z : 1] or [1 : 0].
struct Direction {
    std::array<GaussRat, 2> point;
    int multiplicity = 1;
    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Common projective zeros of the initial forms of a map C^2 -> C^2.
struct DirectionSet {
    std::vector<Direction> directions;
    /// Common zeros (with multiplicity) not representable over Q(i).
    int nonrational = 0;
    /// Some component is constant and imposes no condition.
    bool degenerate = false;
    /// Every direction qualifies (all components constant).
    bool all_directions = false;

    bool contains(const std::array<GaussRat, 2>& dir) const;
};

Direction normalize_direction(const std::array<GaussRat, 2>& dir);

/// Directions a with F^_1(a) = F^_2(a) = 0, computed from the gcd of the
/// initial forms as binary forms. Throws std::invalid_argument unless the map
/// has two components in two variables, both nonzero.
DirectionSet asymptotic_directions(const PolyMap& f);

/// Leading direction of an escaping arc: the coefficients of the coordinates
/// attaining the most negative exponent, zeros elsewhere.
std::array<GaussRat, 2> leading_direction(const MonomialArc& arc);

enum class ConeCheck { holds, violated, not_applicable };

std::string to_string(ConeCheck c);

/// For an escaping arc with finite image limit, the leading direction must be
/// a common zero of every nonconstant initial form. Returns not_applicable
/// when the arc does not escape or its image diverges.
ConeCheck escape_cone_check(const PolyMap& f, const MonomialArc& arc);

}  // namespace asymih
