#include "asymih/arcs.hpp"

#include "asymih/algebra.hpp"
#include "asymih/parse.hpp"
#include "asymih/roots.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <stdexcept>

namespace asymih {

bool MonomialArc::escapes() const {
    for (std::size_t k = 0; k < 2; ++k) {
        if (!coefficients[k].is_zero() && exponents[k] < 0) return true;
    }
    return false;
}

int MonomialArc::escape_order() const {
    int order = INT_MAX;
    for (std::size_t k = 0; k < 2; ++k) {
        if (!coefficients[k].is_zero()) order = std::min(order, exponents[k]);
    }
    return order;
}

std::string MonomialArc::to_string() const {
    return "(" + coefficients[0].to_string() + ") t^" + std::to_string(exponents[0]) + ", (" +
           coefficients[1].to_string() + ") t^" + std::to_string(exponents[1]);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::pair<GaussRat, int> parse_arc_coordinate(std::string_view s) {
    s = trim(s);
    if (s.empty() || s.front() != '(') throw ParseError("arc coordinate must start with '('", 0);
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')' && --depth == 0) {
            close = k;
            break;
        }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced parentheses in arc", s.size());
    GaussRat c = parse_constant(s.substr(1, close - 1));
    std::string_view rest = trim(s.substr(close + 1));
    if (rest.empty()) return {c, 0};
    if (rest.front() == '*') rest = trim(rest.substr(1));
    if (rest.empty() || rest.front() != 't') throw ParseError("expected 't' in arc coordinate", close + 1);
    rest = trim(rest.substr(1));
    if (rest.empty()) return {c, 1};
    if (rest.front() != '^') throw ParseError("expected '^' after 't'", close + 2);
    rest = trim(rest.substr(1));
    std::string digits(rest);
    std::size_t used = 0;
    int q = 0;
    try {
        q = std::stoi(digits, &used);
    } catch (const std::exception&) {
        throw ParseError("bad arc exponent '" + digits + "'", close + 3);
    }
    if (used != digits.size()) throw ParseError("trailing characters after arc exponent", close + 3 + used);
    return {c, q};
}

}  // namespace

MonomialArc parse_arc(std::string_view text) {
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '(') ++depth;
        if (text[k] == ')') --depth;
        if (text[k] == ',' && depth == 0) {
            if (split != std::string_view::npos) throw ParseError("arc has more than two coordinates", k);
            split = k;
        }
    }
    if (split == std::string_view::npos) throw ParseError("arc needs two coordinates", text.size());
    auto [c1, q1] = parse_arc_coordinate(text.substr(0, split));
    auto [c2, q2] = parse_arc_coordinate(text.substr(split + 1));
    MonomialArc arc;
    arc.exponents = {q1, q2};
    arc.coefficients = {c1, c2};
    return arc;
}

Laurent substitute_arc(const Poly& f, const MonomialArc& arc) {
    if (f.nvars() != 2) throw std::invalid_argument("arc substitution needs a bivariate polynomial");
    Laurent out;
    for (const auto& [e, c] : f.terms()) {
        GaussRat v = c;
        if (e[0] > 0) v *= arc.coefficients[0].pow(static_cast<unsigned>(e[0]));
        if (e[1] > 0) v *= arc.coefficients[1].pow(static_cast<unsigned>(e[1]));
        if (v.is_zero()) continue;
        int order = e[0] * arc.exponents[0] + e[1] * arc.exponents[1];
        auto [it, inserted] = out.try_emplace(order, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

bool ArcLimit::finite() const {
    return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
}

std::string ArcLimit::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k != 0) out += ", ";
        out += values[k] ? values[k]->to_string() : "inf";
    }
    return out + ")";
}

ArcLimit arc_limit(const PolyMap& f, const MonomialArc& arc) {
    ArcLimit lim;
    for (const auto& comp : f.components()) {
        Laurent l = substitute_arc(comp, arc);
        if (!l.empty() && l.begin()->first < 0) {
            lim.values.emplace_back(std::nullopt);
        } else {
            auto it = l.find(0);
            lim.values.emplace_back(it == l.end() ? GaussRat(0) : it->second);
        }
    }
    return lim;
}

Direction normalize_direction(const std::array<GaussRat, 2>& dir) {
    if (dir[1].is_zero()) {
        if (dir[0].is_zero()) throw std::invalid_argument("zero vector is not a direction");
        return {{GaussRat(1), GaussRat(0)}, 1};
    }
    return {{dir[0] / dir[1], GaussRat(1)}, 1};
}

bool DirectionSet::contains(const std::array<GaussRat, 2>& dir) const {
    if (all_directions) return true;
    Direction d = normalize_direction(dir);
    return std::any_of(directions.begin(), directions.end(), [&](const Direction& x) { return x.point == d.point; });
}

DirectionSet asymptotic_directions(const PolyMap& f) {
    if (f.size() != 2 || f.source_vars().size() != 2) {
        throw std::invalid_argument("asymptotic directions need a map C^2 -> C^2");
    }
    DirectionSet out;
    std::vector<Poly> forms;
    for (const auto& c : f.components()) {
        if (c.is_zero()) throw std::invalid_argument("asymptotic directions: zero component");
        if (c.is_constant()) {
            out.degenerate = true;
            continue;
        }
        forms.push_back(c.initial_form());
    }
    if (forms.empty()) {
        out.all_directions = true;
        return out;
    }
    Poly g = gcd(forms);
    int deg = *g.degree();
    if (deg == 0) return out;

    // Dehomogenise at y = 1; roots z give [z : 1], the degree deficit is the multiplicity of [1 : 0].
    Poly affine = g.specialize(1, GaussRat(1));
    RootSet rs = gaussian_roots(affine, 0);
    for (const auto& r : rs.roots) out.directions.push_back({{r.value, GaussRat(1)}, r.multiplicity});
    int at_infinity = deg - *affine.degree();
    if (at_infinity > 0) out.directions.push_back({{GaussRat(1), GaussRat(0)}, at_infinity});
    out.nonrational = rs.unresolved;
    std::sort(out.directions.begin(), out.directions.end(), [](const Direction& a, const Direction& b) {
        if (a.point[1] != b.point[1]) return a.point[1] > b.point[1];
        return a.point[0] < b.point[0];
    });
    return out;
}

std::array<GaussRat, 2> leading_direction(const MonomialArc& arc) {
    int order = arc.escape_order();
    std::array<GaussRat, 2> d{GaussRat(0), GaussRat(0)};
    for (std::size_t k = 0; k < 2; ++k) {
        if (!arc.coefficients[k].is_zero() && arc.exponents[k] == order) d[k] = arc.coefficients[k];
    }
    return d;
}

std::string to_string(ConeCheck c) {
    switch (c) {
        case ConeCheck::holds: return "holds";
        case ConeCheck::violated: return "violated";
        case ConeCheck::not_applicable: return "not_applicable";
    }
    return "?";
}

ConeCheck escape_cone_check(const PolyMap& f, const MonomialArc& arc) {
    if (!arc.escapes() || !arc_limit(f, arc).finite()) return ConeCheck::not_applicable;
    auto dir = leading_direction(arc);
    for (const auto& c : f.components()) {
        if (c.is_constant()) continue;
        if (!c.initial_form().evaluate({dir[0], dir[1]}).is_zero()) return ConeCheck::violated;
    }
    return ConeCheck::holds;
}

}  // namespace asymih
