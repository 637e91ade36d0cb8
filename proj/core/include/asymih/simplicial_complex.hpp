// Finite abstract simplicial complexes with named subcomplexes.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymih {

/// Strictly increasing vertex ids.
using Simplex = std::vector<int>;

struct ComplexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A subcomplex stored as its closed set of simplices.
struct Subcomplex {
    std::set<Simplex> simplices;
    std::vector<int> vertices() const;
    int dim() const;
    std::vector<Simplex> maximal_simplices() const;
    bool contains(const Simplex& s) const { return simplices.count(s) != 0; }
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the face closure of `tops`. Throws ComplexError for unsorted or
    /// repeated vertices, or vertices outside [0, vertex_count).
    static SimplicialComplex from_top_simplices(int vertex_count, const std::vector<Simplex>& tops);

    int vertex_count() const { return vertex_count_; }
    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    /// Simplices of dimension d in canonical (lexicographic) order.
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t count(int d) const { return simplices(d).size(); }
    std::size_t size() const;

    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Simplices that are not a proper face of another simplex.
    std::vector<Simplex> maximal_simplices() const;

    /// Adds the closure of `tops` as a named subcomplex; every simplex must belong to the complex.
    void add_subcomplex(const std::string& name, const std::vector<Simplex>& tops);
    void add_subcomplex(const std::string& name, Subcomplex sub);
    bool has_subcomplex(const std::string& name) const { return subcomplexes_.count(name) != 0; }
    const Subcomplex& subcomplex(const std::string& name) const;
    const std::map<std::string, Subcomplex>& subcomplexes() const { return subcomplexes_; }

    /// Name of the subcomplex marking the boundary, if any.
    const std::optional<std::string>& boundary_name() const { return boundary_; }
    void set_boundary(const std::string& name);
    /// The boundary subcomplex or nullptr.
    const Subcomplex* boundary() const;

    /// Full subcomplex spanned by a vertex set.
    Subcomplex full_subcomplex(const std::vector<int>& vertices) const;
    bool is_full(const Subcomplex& sub) const;

    /// Alternating count of simplices.
    long euler_characteristic() const;

    /// Line-oriented canonical text, stable across runs, for golden tests.
    std::string canonical_dump() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_ &&
               a.boundary_ == b.boundary_ && a.subcomplex_tops() == b.subcomplex_tops();
    }

private:
    std::map<std::string, std::set<Simplex>> subcomplex_tops() const;

    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::map<std::string, Subcomplex> subcomplexes_;
    std::optional<std::string> boundary_;
};

/// Faces of s of codimension one, in order of the removed vertex position.
std::vector<Simplex> facets_of(const Simplex& s);

/// All faces of s (including s).
std::vector<Simplex> all_faces(const Simplex& s);

/// First barycentric subdivision. New vertex ids enumerate the simplices of
/// the input by (dimension, canonical index); subcomplexes and the boundary
/// marker are carried over to their subdivisions.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);

/// Vertex id of the barycentre of `s` in barycentric_subdivision(x).
int barycenter_id(const SimplicialComplex& x, const Simplex& s);

/// Product with the staircase triangulation: vertex (a, b) gets id a * B + b
/// where B is the vertex count of `b`. Subcomplexes are not carried.
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);

/// Staircase triangulation of sa x sb inside product(a, b), where sa and sb
/// are subcomplexes of a and b and `b_vertex_count` is B.
std::vector<Simplex> product_tops(const std::vector<Simplex>& sa, const std::vector<Simplex>& sb, int b_vertex_count);

/// Suspension: two new apex vertices V and V + 1 joined to everything.
SimplicialComplex suspension(const SimplicialComplex& x);

/// Cone with apex V over x.
SimplicialComplex cone(const SimplicialComplex& x);

}  // namespace asymih
