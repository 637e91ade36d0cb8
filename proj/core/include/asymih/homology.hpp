// Simplicial chains with rational coefficients and ordinary homology.
#pragma once

#include "asymih/linalg.hpp"
#include "asymih/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace asymih {

/// A rational i-chain, keyed by the canonical index of each i-simplex.
struct ChainVector {
    int degree = 0;
    RatVec coefficients;

    std::vector<Simplex> support(const SimplicialComplex& x) const;
    bool is_zero() const { return coefficients.empty(); }
    /// "1*[0,1] - 1/2*[1,2]" style text.
    std::string to_string(const SimplicialComplex& x) const;
};

/// Matrix of the boundary map C_i -> C_{i-1}: rows index (i-1)-simplices,
/// columns index i-simplices. The face omitting the k-th vertex carries
/// sign (-1)^k. Throws std::out_of_range unless 1 <= i <= dim.
SparseMatrix boundary_matrix(const SimplicialComplex& x, int i);

ChainVector boundary(const SimplicialComplex& x, const ChainVector& c);

/// Ranks b_0..b_dim over Q. The empty complex has no entries.
std::vector<long> betti(const SimplicialComplex& x);

/// Cycles representing a basis of H_i, in echelon order.
std::vector<ChainVector> homology_generators(const SimplicialComplex& x, int i);

/// Coherent orientation of the top simplices exists (per connected piece).
/// Requires every codimension-one face to lie in at most two top simplices;
/// returns false otherwise or if the complex is not pure.
bool is_orientable(const SimplicialComplex& x);

}  // namespace asymih
