#include "asymih/pseudomanifold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace asymih {
namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

std::size_t component_count(const SimplicialComplex& k) {
    std::vector<int> parent(static_cast<std::size_t>(k.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : k.simplices(1)) {
        const int a = find_root(parent, e[0]);
        const int b = find_root(parent, e[1]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::set<int> roots;
    for (const auto& v : k.simplices(0)) roots.insert(find_root(parent, v[0]));
    return roots.size();
}

std::vector<Simplex> link_tops(const std::vector<Simplex>& maximal, const Simplex& s) {
    std::vector<Simplex> out;
    for (const auto& t : maximal) {
        if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
        Simplex rest;
        std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) out.push_back(std::move(rest));
    }
    return out;
}

}  // namespace

std::vector<int> PMReport::singular_vertices() const {
    std::set<int> vs;
    for (const auto& s : singular) vs.insert(s.simplex.begin(), s.simplex.end());
    return {vs.begin(), vs.end()};
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& s) {
    return SimplicialComplex::from_top_simplices(x.vertex_count(), link_tops(x.maximal_simplices(), s));
}

PMReport validate_pseudomanifold(const SimplicialComplex& x) {
    PMReport rep;
    const int d = x.dim();
    const auto maximal = x.maximal_simplices();
    rep.is_pure = true;
    for (const auto& s : maximal) {
        const int k = static_cast<int>(s.size()) - 1;
        if (k != d) {
            rep.is_pure = false;
            rep.singular.push_back({s, d - k, "impure"});
        }
    }
    const Subcomplex* bd = x.boundary();

    if (d >= 1) {
        std::vector<int> cofaces(x.count(d - 1), 0);
        for (const auto& t : x.simplices(d)) {
            for (const auto& f : facets_of(t)) ++cofaces[*x.index_of(f)];
        }
        const auto& facets = x.simplices(d - 1);
        for (std::size_t k = 0; k < facets.size(); ++k) {
            const int want = (bd && bd->contains(facets[k])) ? 1 : 2;
            if (cofaces[k] != want && cofaces[k] != 0) rep.singular.push_back({facets[k], 1, "facet-degree"});
        }
    }

    // Incidence from vertices to maximal simplices keeps link construction local.
    std::vector<std::vector<std::size_t>> star(static_cast<std::size_t>(x.vertex_count()));
    for (std::size_t t = 0; t < maximal.size(); ++t) {
        for (int v : maximal[t]) star[static_cast<std::size_t>(v)].push_back(t);
    }
    for (int k = 0; k <= d - 2; ++k) {
        const int ld = d - k - 1;
        for (const auto& s : x.simplices(k)) {
            std::vector<Simplex> local;
            for (std::size_t t : star[static_cast<std::size_t>(s[0])]) local.push_back(maximal[t]);
            auto lk = SimplicialComplex::from_top_simplices(x.vertex_count(), link_tops(local, s));
            const bool on_boundary = bd && bd->contains(s);
            const long want_chi = on_boundary ? 1 : 1 + (ld % 2 == 0 ? 1 : -1);
            if (component_count(lk) != 1) {
                rep.singular.push_back({s, d - k, "link-components"});
            } else if (lk.euler_characteristic() != want_chi) {
                rep.singular.push_back({s, d - k, "link-euler"});
            }
        }
    }
    rep.sing_codim_ok = std::all_of(rep.singular.begin(), rep.singular.end(),
                                    [](const SingularSimplex& s) { return s.codim >= 2; });
    return rep;
}

}  // namespace asymih
