#include "asymih/algebraic_set.hpp"

#include "asymih/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymih {

std::string to_string(ComponentStatus s) {
    switch (s) {
        case ComponentStatus::certified: return "certified";
        case ComponentStatus::candidate: return "candidate";
        case ComponentStatus::refuted: return "refuted";
    }
    return "?";
}

std::size_t AlgebraicSet::count(ComponentStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [s](const Component& c) { return c.status == s; }));
}

namespace {

// Restriction of h to the line base + s * dir, as a coefficient vector in s.
std::vector<GaussRat> restrict_to_line(const Poly& h, const Point& base, const Point& dir) {
    // Rebuild h positionally over (u, v, s).
    std::vector<std::string> vars = {"u", "v", "s"};
    Poly lifted(vars);
    for (const auto& [e, c] : h.terms()) lifted.add_term({e[0], e[1], 0}, c);
    Poly s = Poly::variable(vars, "s");
    Poly lu = Poly::constant(vars, base[0]) + s * dir[0];
    Poly lv = Poly::constant(vars, base[1]) + s * dir[1];
    Poly r = lifted.substitute(0, lu).substitute(1, lv);
    std::vector<GaussRat> coeffs;
    for (const auto& c : r.coefficients_in(2)) coeffs.push_back(c.constant_term());
    return coeffs;
}

}  // namespace

std::vector<Point> sample_curve_points(const Poly& h, int count, Rng& rng) {
    if (h.nvars() != 2) throw std::invalid_argument("sample_curve_points: expected a bivariate polynomial");
    if (h.is_zero() || h.is_constant()) throw std::invalid_argument("sample_curve_points: not a curve");
    std::vector<Point> out;
    auto add = [&](Point p) {
        if (static_cast<int>(out.size()) >= count) return;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    auto try_line = [&](const Point& base, const Point& dir) {
        auto coeffs = restrict_to_line(h, base, dir);
        if (coeffs.empty()) {  // the line lies on the curve
            add(base);
            return;
        }
        RootSet rs = gaussian_roots(coeffs);
        for (const auto& r : rs.roots) add({base[0] + r.value * dir[0], base[1] + r.value * dir[1]});
    };

    const GaussRat zero(0), one(1);
    try_line({zero, zero}, {zero, one});
    try_line({zero, zero}, {one, zero});
    const int max_attempts = 10 * count + 10;
    for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
        switch (attempt % 3) {
            case 0: try_line({GaussRat(rng.rational(9, 4)), zero}, {zero, one}); break;
            case 1: try_line({zero, GaussRat(rng.rational(9, 4))}, {one, zero}); break;
            default: {
                Point base{GaussRat(rng.rational(9, 4)), GaussRat(rng.rational(9, 4))};
                Point dir{GaussRat(rng.nonzero(5)), GaussRat(rng.nonzero(5))};
                try_line(base, dir);
            }
        }
    }
    return out;
}

}  // namespace asymih
