// Simplicial intersection homology of filtered complexes.
//
// A filtration X_0 <= ... <= X_m = X is stored as the vertex sets of full
// subcomplexes, so the part of a simplex lying in X_j is the face spanned by
// its vertices in X_j.
#pragma once

#include "asymih/homology.hpp"
#include "asymih/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymih {

struct PerversityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FiltrationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Perversity {
public:
    /// values = (p_2, ..., p_m). Throws PerversityError unless p_2 = 0 and
    /// each step increases by 0 or 1.
    Perversity(int m, std::vector<int> values);

    int m() const { return m_; }
    const std::vector<int>& values() const { return values_; }
    /// p_k for 2 <= k <= m.
    int at(int k) const;

    /// "(0,1,2)"
    std::string to_string() const;

    friend bool operator==(const Perversity&, const Perversity&) = default;

private:
    int m_;
    std::vector<int> values_;
};

struct StandardPerversities {
    Perversity zero;
    Perversity lower_middle;
    Perversity upper_middle;
    Perversity top;
};

/// Throws PerversityError for m < 2.
StandardPerversities standard_perversities(int m);

/// Accepts "0", "m", "n", "t" or a comma separated list of values.
Perversity parse_perversity(const std::string& text, int m);

/// p + q == top, componentwise.
bool complementary(const Perversity& p, const Perversity& q);

/// Componentwise p <= q.
bool dominated(const Perversity& p, const Perversity& q);

class Filtration {
public:
    /// `members[j]` lists the vertices of X_j for j = 0..m-1 (X_m is the whole
    /// complex, m = dim X). Throws FiltrationError if the members are not
    /// nested, a stratum X_j \ X_{j-1} is nonempty with dimension other than
    /// j, or X_{m-1} differs from X_{m-2}.
    Filtration(SimplicialComplex base, std::vector<std::vector<int>> members);

    /// Filtration by named subcomplexes; unnamed indices inherit the member
    /// below (X_{-1} is empty). When a member is not a full subcomplex the
    /// complex is subdivided once and the check repeated.
    static Filtration from_subcomplexes(SimplicialComplex base, const std::map<int, std::string>& indices);

    /// Trivial filtration (no singular strata).
    static Filtration trivial(SimplicialComplex base);

    const SimplicialComplex& base() const { return base_; }
    int m() const { return m_; }
    /// Vertices of X_j, j in [-1, m].
    std::vector<int> member(int j) const;
    bool in_member(int vertex, int j) const;
    /// Number of vertices of s lying in X_j.
    int vertices_in(const Simplex& s, int j) const;
    /// Dimension of X_j \ X_{j-1}, nullopt when empty.
    std::optional<int> stratum_dim(int j) const;
    /// X_{m-2}, the singular part.
    std::vector<int> singular_vertices() const { return member(m_ - 2); }
    bool subdivided() const { return subdivided_; }

private:
    SimplicialComplex base_;
    int m_ = 0;
    // level_[v] = least j with v in X_j (m for vertices only in X_m).
    std::vector<int> level_;
    bool subdivided_ = false;
};

/// sigma is (p, i)-allowable when, for every 2 <= k <= m, the face of sigma in
/// X_{m-k} has dimension at most i - k + p_k (the empty face always passes).
bool is_allowable(const Filtration& f, const Perversity& p, const Simplex& sigma, int i);

/// Canonical indices of the allowable i-simplices.
std::vector<std::size_t> allowable_simplices(const Filtration& f, const Perversity& p, int i);

struct AllowableBasis {
    int degree = 0;
    std::vector<std::size_t> allowable;
    /// Basis of IC_i in reduced echelon form.
    std::vector<ChainVector> ic_basis;
};

/// Per-degree IC_i = {xi in A_i : boundary(xi) in A_{i-1}}. Checks that the
/// boundary of every basis vector of IC_{i+1} lies in IC_i and throws
/// std::logic_error otherwise.
std::vector<AllowableBasis> ic_complex(const Filtration& f, const Perversity& p);

/// Ranks of IH_0 .. IH_m.
std::vector<long> ih_betti(const Filtration& f, const Perversity& p);

/// Cycles representing a basis of IH_i.
std::vector<ChainVector> ih_generators(const Filtration& f, const Perversity& p, int i);

struct DualityReport {
    bool applicable = false;
    std::string reason;  // why not applicable
    std::vector<long> p_ranks;
    std::vector<long> q_ranks;
    bool passed = false;
};

/// Compares rank IH_k^p with rank IH_{m-k}^q. Throws PerversityError for
/// non-complementary perversities; not applicable for complexes with a
/// boundary marker, non-orientable or non-pseudomanifold complexes.
DualityReport duality_check(const Filtration& f, const Perversity& p, const Perversity& q);

/// ih_betti agrees for both filtrations. Throws FiltrationError if the base
/// complexes differ.
bool independence_check(const Filtration& a, const Filtration& b, const Perversity& p);

}  // namespace asymih
