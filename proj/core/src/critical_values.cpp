#include "asymih/critical_values.hpp"

#include "asymih/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymih {
namespace {

// Projection of the common zeros of `system` along `var` is contained in the
// common zeros of the result.
std::vector<Poly> eliminate(const std::vector<Poly>& system, std::size_t var) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (!system[i].uses_var(var)) {
            out.push_back(system[i]);
            continue;
        }
        for (std::size_t j = i + 1; j < system.size(); ++j) {
            if (!system[j].uses_var(var)) continue;
            Poly r = resultant(system[i], system[j], var);
            if (!r.is_zero()) out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

AlgebraicSet critical_values(const PolyMap& f, int samples, std::uint64_t seed) {
    if (f.size() != 2 || f.source_vars().size() != 2) {
        throw std::invalid_argument("critical values are implemented for maps C^2 -> C^2");
    }
    Poly jac = jacobian_det(f);
    if (jac.is_zero()) throw std::invalid_argument("jacobian determinant vanishes identically");

    AlgebraicSet out;
    out.ambient_vars = target_vars(2);
    if (jac.is_constant()) return out;

    std::vector<std::string> all = f.source_vars();
    all.insert(all.end(), out.ambient_vars.begin(), out.ambient_vars.end());
    Poly p1 = f[0].embed(all) - Poly::variable(all, out.ambient_vars[0]);
    Poly p2 = f[1].embed(all) - Poly::variable(all, out.ambient_vars[1]);
    auto eliminated = eliminate(eliminate({p1, p2, jac.embed(all)}, 0), 1);

    std::vector<Poly> eqs;
    for (const auto& p : eliminated) {
        Poly q = make_monic(p.embed(out.ambient_vars));
        if (q.is_constant()) return out;  // nonzero constant: no critical values
        if (std::find(eqs.begin(), eqs.end(), q) == eqs.end()) eqs.push_back(std::move(q));
    }
    if (eqs.empty()) throw std::runtime_error("critical values: elimination produced no equations");
    std::sort(eqs.begin(), eqs.end(), canonical_less);
    out.auxiliary.assign(eqs.begin() + 1, eqs.end());

    Rng rng(seed);
    const auto& src = f.source_vars();
    for (const Poly& factor : coprime_squarefree_basis({eqs.front()})) {
        Component comp;
        comp.equation = factor;
        bool all_clean = true;
        for (const Point& y0 : sample_curve_points(factor, samples, rng)) {
            std::vector<Poly> fiber{f[0] - Poly::constant(src, y0[0]), f[1] - Poly::constant(src, y0[1]), jac};
            SolveResult sol = solve_bivariate(fiber, 0, 1);
            if (!sol.points.empty() || sol.positive_dimensional) {
                comp.samples.push_back({y0, "sing-preimage"});
                comp.status = ComponentStatus::certified;
            } else if (sol.incomplete) {
                comp.samples.push_back({y0, "inconclusive"});
                all_clean = false;
            } else {
                comp.samples.push_back({y0, "no-sing-preimage"});
            }
        }
        if (comp.status != ComponentStatus::certified && all_clean && !comp.samples.empty()) {
            comp.status = ComponentStatus::refuted;
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

}  // namespace asymih
