#include "asymih/asymptotic.hpp"

#include "asymih/algebra.hpp"
#include "asymih/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace asymih {

std::string to_string(Properness p) {
    switch (p) {
        case Properness::proper: return "proper";
        case Properness::non_proper: return "non_proper";
        case Properness::unknown: return "unknown";
    }
    return "?";
}

namespace {

void require_plane_map(const PolyMap& f) {
    if (f.size() != 2 || f.source_vars().size() != 2) {
        throw std::invalid_argument("only maps C^2 -> C^2 are supported");
    }
}

struct FiberResultants {
    std::vector<std::string> all_vars;    // x, y, y1, y2
    std::array<Poly, 2> resultants;       // R_j in x_j, y1, y2
};

FiberResultants fiber_resultants(const PolyMap& f) {
    require_plane_map(f);
    if (jacobian_det(f).is_zero()) {
        throw NotGenericallyFinite("map is not generically finite (jacobian determinant vanishes identically)");
    }
    FiberResultants out;
    auto targets = target_vars(2);
    out.all_vars = f.source_vars();
    out.all_vars.insert(out.all_vars.end(), targets.begin(), targets.end());
    Poly p1 = f[0].embed(out.all_vars) - Poly::variable(out.all_vars, targets[0]);
    Poly p2 = f[1].embed(out.all_vars) - Poly::variable(out.all_vars, targets[1]);
    for (std::size_t j = 0; j < 2; ++j) out.resultants[j] = resultant(p1, p2, 1 - j);
    if (out.resultants[0].is_zero() && out.resultants[1].is_zero()) {
        throw NotGenericallyFinite("map is not generically finite (both fiber resultants vanish)");
    }
    return out;
}

const GaussRat& trial_value(std::size_t k) {
    static const std::vector<GaussRat> values = {
        GaussRat(1), GaussRat(-1), GaussRat(2), GaussRat(-2), GaussRat(Rational(1, 2)),
        GaussRat(3), GaussRat::i(), -GaussRat::i()};
    return values[k % values.size()];
}

constexpr std::size_t kTrialCount = 8;

bool all_vanish(const std::vector<Poly>& eqs, const Point& pt) {
    return std::all_of(eqs.begin(), eqs.end(), [&](const Poly& p) { return p.evaluate(pt).is_zero(); });
}

// A common zero of eqs (over variables c1, c2) with both coordinates nonzero.
std::optional<Point> nonzero_solution(const std::vector<Poly>& eqs, const std::vector<std::string>& cvars) {
    if (eqs.empty()) return Point{GaussRat(1), GaussRat(1)};
    SolveResult sol = solve_bivariate(eqs, 0, 1);
    for (const auto& pt : sol.points) {
        if (!pt[0].is_zero() && !pt[1].is_zero()) return pt;
    }
    if (!sol.positive_dimensional) return std::nullopt;

    // Points on the common curve: fix one coordinate to a small trial value
    // and solve for the other.
    std::vector<Poly> nonzero;
    for (const auto& p : eqs) {
        if (!p.is_zero()) nonzero.push_back(p);
    }
    if (nonzero.empty()) return Point{GaussRat(1), GaussRat(1)};
    Poly g = gcd(nonzero);
    for (std::size_t fixed = 0; fixed < 2; ++fixed) {
        std::size_t free = 1 - fixed;
        for (std::size_t k = 0; k < kTrialCount; ++k) {
            Poly h = g.specialize(fixed, trial_value(k));
            Point pt(2, GaussRat(0));
            pt[fixed] = trial_value(k);
            if (h.is_zero()) {
                pt[free] = GaussRat(1);
                if (all_vanish(eqs, pt)) return pt;
                continue;
            }
            if (h.is_constant()) continue;
            for (const auto& r : gaussian_roots(h, free).roots) {
                if (r.value.is_zero()) continue;
                pt[free] = r.value;
                if (all_vanish(eqs, pt)) return pt;
            }
        }
    }
    (void)cvars;
    return std::nullopt;
}

std::vector<std::array<int, 2>> exponent_pairs(int max_exp) {
    std::vector<std::array<int, 2>> out;
    for (int q1 = -max_exp; q1 <= max_exp; ++q1) {
        for (int q2 = -max_exp; q2 <= max_exp; ++q2) {
            if (std::min(q1, q2) < 0) out.push_back({q1, q2});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int na = std::abs(a[0]) + std::abs(a[1]);
        int nb = std::abs(b[0]) + std::abs(b[1]);
        if (na != nb) return na < nb;
        return a < b;
    });
    return out;
}

}  // namespace

AlgebraicSet jelonek_candidates(const PolyMap& f) {
    FiberResultants fr = fiber_resultants(f);
    AlgebraicSet out;
    out.ambient_vars = target_vars(2);
    std::vector<Poly> lcs;
    for (std::size_t j = 0; j < 2; ++j) {
        const Poly& r = fr.resultants[j];
        if (r.is_zero()) continue;
        Poly lc = r.leading_coefficient_in(j).embed(out.ambient_vars);
        if (!lc.is_constant()) lcs.push_back(std::move(lc));
    }
    for (auto& p : coprime_squarefree_basis(lcs)) {
        Component c;
        c.equation = std::move(p);
        out.components.push_back(std::move(c));
    }
    return out;
}

std::optional<Witness> certify_point(const PolyMap& f, const Point& y0, int max_exp) {
    require_plane_map(f);
    if (y0.size() != 2) throw std::invalid_argument("certify_point: target must have two coordinates");
    if (max_exp < 1) throw std::invalid_argument("certify_point: max_exp must be at least 1");
    const auto& src = f.source_vars();
    std::array<Poly, 2> g{f[0] - Poly::constant(src, y0[0]), f[1] - Poly::constant(src, y0[1])};
    const std::vector<std::string> cvars = {"c1", "c2"};

    for (const auto& q : exponent_pairs(max_exp)) {
        std::vector<Poly> eqs;
        bool feasible = true;
        for (const auto& comp : g) {
            std::map<int, Poly> by_order;
            std::map<int, int> counts;
            for (const auto& [e, c] : comp.terms()) {
                int order = e[0] * q[0] + e[1] * q[1];
                if (order > 0) continue;
                auto [it, inserted] = by_order.try_emplace(order, Poly(cvars));
                it->second.add_term({e[0], e[1]}, c);
                ++counts[order];
            }
            for (const auto& [order, n] : counts) {
                if (order < 0 && n < 2) feasible = false;  // a lone negative-order monomial cannot cancel
            }
            if (!feasible) break;
            for (auto& [order, p] : by_order) {
                if (p.is_zero()) continue;
                if (p.is_constant()) {
                    feasible = false;
                    break;
                }
                eqs.push_back(std::move(p));
            }
            if (!feasible) break;
        }
        if (!feasible) continue;
        auto sol = nonzero_solution(eqs, cvars);
        if (!sol) continue;
        MonomialArc arc;
        arc.exponents = q;
        arc.coefficients = {(*sol)[0], (*sol)[1]};
        if (!arc.escapes()) continue;
        ArcLimit lim = arc_limit(f, arc);
        if (!lim.finite() || *lim.values[0] != y0[0] || *lim.values[1] != y0[1]) continue;
        return Witness{arc, y0};
    }
    return std::nullopt;
}

AlgebraicSet jelonek_set(const PolyMap& f, const JelonekOptions& opts) {
    if (opts.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (opts.max_exp < 1) throw std::invalid_argument("max_exp must be at least 1");
    FiberResultants fr = fiber_resultants(f);
    AlgebraicSet out = jelonek_candidates(f);

    // Primitive parts of the fiber resultants in x_j and their generic degrees.
    std::array<std::optional<Poly>, 2> prim;
    std::array<int, 2> generic_degree{0, 0};
    for (std::size_t j = 0; j < 2; ++j) {
        if (fr.resultants[j].is_zero()) continue;
        prim[j] = primitive_part_in(fr.resultants[j], j);
        generic_degree[j] = *prim[j]->degree_in(j);
    }
    auto fiber_escapes = [&](const Point& y0) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!prim[j]) continue;
            Poly s = prim[j]->specialize(2, y0[0]).specialize(3, y0[1]);
            if (s.is_zero() || *s.degree_in(j) < generic_degree[j]) return true;
        }
        return false;
    };

    Rng rng(opts.seed);
    for (auto& comp : out.components) {
        bool any_escape = false;
        for (const Point& y0 : sample_curve_points(comp.equation, opts.samples, rng)) {
            if (auto w = certify_point(f, y0, opts.max_exp)) {
                comp.witnesses.push_back(*w);
                comp.samples.push_back({y0, "witness"});
                continue;
            }
            bool escapes = fiber_escapes(y0);
            any_escape = any_escape || escapes;
            comp.samples.push_back({y0, escapes ? "refusal:fiber-escape" : "refusal:no-escape"});
        }
        if (!comp.witnesses.empty()) {
            comp.status = ComponentStatus::certified;
        } else if (!comp.samples.empty() && !any_escape) {
            comp.status = ComponentStatus::refuted;
        }
    }
    return out;
}

Properness properness_of(const AlgebraicSet& jelonek) {
    if (jelonek.count(ComponentStatus::certified) > 0) return Properness::non_proper;
    if (jelonek.count(ComponentStatus::candidate) > 0) return Properness::unknown;
    return Properness::proper;
}

Properness is_proper(const PolyMap& f, const JelonekOptions& opts) { return properness_of(jelonek_set(f, opts)); }

std::optional<Parametrization> uniruled_witness(const Poly& h, const Point& point) {
    if (h.nvars() != 2 || point.size() != 2) throw std::invalid_argument("uniruled_witness: plane curves only");
    if (h.is_constant()) throw std::invalid_argument("uniruled_witness: not a curve");
    if (!h.evaluate(point).is_zero()) throw std::invalid_argument("uniruled_witness: point is not on the curve");
    int deg = *h.degree();
    if (deg > 2) return std::nullopt;

    const std::vector<std::string> svars = {"s"};
    Poly s = Poly::variable(svars, "s");
    auto lifted = [&](const Parametrization& phi) {
        // h(phi(s)) over the single variable s.
        Poly acc(svars);
        for (const auto& [e, c] : h.terms()) acc += c * phi[0].pow(static_cast<unsigned>(e[0])) *
                                                    phi[1].pow(static_cast<unsigned>(e[1]));
        return acc;
    };

    // Tangent line through the point (covers lines and line pairs).
    GaussRat gx = h.derivative(0).evaluate(point);
    GaussRat gy = h.derivative(1).evaluate(point);
    if (!gx.is_zero() || !gy.is_zero()) {
        Parametrization line{Poly::constant(svars, point[0]) + s * (-gy), Poly::constant(svars, point[1]) + s * gx};
        if (lifted(line).is_zero()) return line;
    }
    if (deg < 2) return std::nullopt;

    // Parabola: quadratic part a y1^2 + b y1 y2 + c y2^2 must be a perfect square.
    GaussRat a = h.coefficient({2, 0});
    GaussRat b = h.coefficient({1, 1});
    GaussRat c = h.coefficient({0, 2});
    if (b * b != GaussRat(4) * a * c) return std::nullopt;
    // Linear form u with quadratic part = k u^2; v is a complementary coordinate.
    // Solve h = 0 for v as a polynomial in u, then set u = u(point) + s.
    Parametrization phi;
    if (!a.is_zero()) {
        // u = y1 + (b / 2a) y2, v = y2  =>  y1 = u - (b / 2a) v.
        GaussRat beta = b / (GaussRat(2) * a);
        GaussRat u0 = point[0] + beta * point[1];
        Poly u = Poly::constant(svars, u0) + s;
        // h(u - beta v, v) = a u^2 + l_u u + l_v v + const; read coefficients by substitution.
        GaussRat h00 = h.evaluate({GaussRat(0), GaussRat(0)});
        GaussRat hu = h.evaluate({GaussRat(1), GaussRat(0)}) - h00 - a;           // linear coefficient in u
        GaussRat hv = h.evaluate({-beta, GaussRat(1)}) - h00;                       // v-part at u = 0 (v^2 term cancels)
        if (hv.is_zero()) return std::nullopt;
        Poly v = (u * u * a + u * hu + Poly::constant(svars, h00)) * (GaussRat(-1) / hv);
        phi = {u - v * beta, v};
    } else {
        // b = 0 as well: quadratic part c y2^2, u = y2, v = y1.
        GaussRat h00 = h.evaluate({GaussRat(0), GaussRat(0)});
        GaussRat hu = h.evaluate({GaussRat(0), GaussRat(1)}) - h00 - c;
        GaussRat hv = h.evaluate({GaussRat(1), GaussRat(0)}) - h00;
        if (hv.is_zero()) return std::nullopt;
        Poly u = Poly::constant(svars, point[1]) + s;
        Poly v = (u * u * c + u * hu + Poly::constant(svars, h00)) * (GaussRat(-1) / hv);
        phi = {v, u};
    }
    if (!lifted(phi).is_zero()) return std::nullopt;
    if (phi[0].evaluate({GaussRat(0)}) != point[0] || phi[1].evaluate({GaussRat(0)}) != point[1]) return std::nullopt;
    return phi;
}

std::optional<Parametrization> uniruled_witness(const AlgebraicSet& set, std::size_t index, const Point& point) {
    if (index >= set.components.size()) throw std::out_of_range("uniruled_witness: no such component");
    const Component& comp = set.components[index];
    if (comp.status != ComponentStatus::certified) {
        throw std::invalid_argument("uniruled_witness: component is not certified");
    }
    return uniruled_witness(comp.equation, point);
}

}  // namespace asymih
