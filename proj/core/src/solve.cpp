#include "asymih/solve.hpp"

#include "asymih/algebra.hpp"
#include "asymih/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymih {

SolveResult solve_bivariate(const std::vector<Poly>& system, std::size_t u, std::size_t v) {
    SolveResult out;
    std::vector<Poly> eqs;
    for (const auto& p : system) {
        for (std::size_t k = 0; k < p.nvars(); ++k) {
            if (k != u && k != v && p.uses_var(k)) throw std::invalid_argument("solve_bivariate: extra variable");
        }
        if (!p.is_zero()) eqs.push_back(p);
    }
    if (eqs.empty()) {
        out.positive_dimensional = true;
        return out;
    }
    for (const auto& p : eqs) {
        if (p.is_constant()) return out;
    }
    const std::size_t nvars = eqs.front().nvars();

    Poly g = gcd(eqs);
    if (!g.is_constant()) {
        out.positive_dimensional = true;
        for (auto& p : eqs) {
            p = *divide_exact(p, g);
            if (p.is_constant()) return out;
        }
    }

    std::vector<Poly> in_u;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (!eqs[i].uses_var(v)) {
            in_u.push_back(eqs[i]);
            continue;
        }
        for (std::size_t j = i + 1; j < eqs.size(); ++j) {
            if (!eqs[j].uses_var(v)) continue;
            Poly r = resultant(eqs[i], eqs[j], v);
            if (!r.is_zero()) in_u.push_back(std::move(r));
        }
    }
    if (in_u.empty()) {
        out.incomplete = true;
        return out;
    }
    Poly h = gcd(in_u);
    if (h.is_constant()) return out;

    RootSet us = gaussian_roots(h, u);
    if (us.unresolved > 0) out.incomplete = true;
    for (const auto& ru : us.roots) {
        std::vector<Poly> specialized;
        bool inconsistent = false;
        for (const auto& p : eqs) {
            Poly s = p.specialize(u, ru.value);
            if (s.is_zero()) continue;
            if (s.is_constant()) inconsistent = true;
            specialized.push_back(std::move(s));
        }
        if (inconsistent) continue;
        if (specialized.empty()) {
            out.positive_dimensional = true;
            continue;
        }
        Poly gv = gcd(specialized);
        if (gv.is_constant()) continue;
        RootSet vs = gaussian_roots(gv, v);
        if (vs.unresolved > 0) out.incomplete = true;
        for (const auto& rv : vs.roots) {
            Point pt(nvars, GaussRat(0));
            pt[u] = ru.value;
            pt[v] = rv.value;
            out.points.push_back(std::move(pt));
        }
    }

    std::erase_if(out.points, [&](const Point& pt) {
        return std::any_of(system.begin(), system.end(), [&](const Poly& p) { return !p.evaluate(pt).is_zero(); });
    });
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace asymih
