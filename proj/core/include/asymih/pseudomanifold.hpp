// Combinatorial pseudomanifold checks on simplicial complexes.
#pragma once

#include "asymih/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace asymih {

struct SingularSimplex {
    Simplex simplex;
    int codim = 0;
    /// "impure", "facet-degree", "link-components" or "link-euler".
    std::string reason;
};

struct PMReport {
    bool is_pure = false;
    bool sing_codim_ok = false;
    std::vector<SingularSimplex> singular;

    /// Pure, every facet has the right number of cofaces and no singular simplex has codimension < 2.
    bool is_pseudomanifold() const { return is_pure && sing_codim_ok; }
    /// No singular simplices at all.
    bool is_manifold() const { return is_pure && singular.empty(); }
    /// Vertices of all singular simplices.
    std::vector<int> singular_vertices() const;
};

/// Link of `s`: simplices disjoint from s whose union with s lies in x.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& s);

/// Purity; facets lying in a number of top simplices other than 2 (1 on the
/// boundary marker); and simplices of codimension >= 2 whose link is not
/// connected or has the Euler characteristic of neither the sphere nor, on
/// the boundary, the disk of the link dimension. The link test is a
/// necessary condition only.
PMReport validate_pseudomanifold(const SimplicialComplex& x);

}  // namespace asymih
