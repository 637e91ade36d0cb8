// Exact sparse linear algebra over Q for chain complexes.
//
// Integer vectors are reduced fraction-free: eliminating entry r of v with a
// stored vector p uses v <- p[r] * v - v[r] * p followed by division by the
// content, so entries stay integral and small. Rational results (echelon
// bases) use mpq arithmetic.
#pragma once

#include "asymih/gauss_rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace asymih {

/// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Integer>>;

/// Rational sparse vector keyed by coordinate.
using RatVec = std::map<std::size_t, Rational>;

struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVec> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    /// Columns listed in `keep`, renumbered 0..keep.size()-1.
    SparseMatrix select_columns(const std::vector<std::size_t>& keep) const;
    /// Rows flagged in `keep` (size rows), renumbered in order.
    SparseMatrix select_rows(const std::vector<char>& keep) const;
};

/// Incremental column reduction. Each added vector is reduced against the
/// stored pivots; the pivot of a stored vector is its largest index.
class Reducer {
public:
    explicit Reducer(bool track_kernel = false) : track_(track_kernel) {}

    /// Reduces v; stores it and returns true when independent of the vectors
    /// added so far. With kernel tracking, a dependent vector contributes a
    /// kernel relation among the added vectors (by insertion order).
    bool add(SparseVec v);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t added() const { return added_; }
    /// Relations sum_k w_k * v_k = 0, in the order they were found.
    const std::vector<SparseVec>& kernel() const { return kernel_; }

    /// True if v lies in the span of the stored vectors.
    bool in_span(SparseVec v) const;

private:
    struct Entry {
        SparseVec vec;
        SparseVec combo;
    };
    bool track_;
    std::size_t added_ = 0;
    std::map<std::size_t, Entry> pivots_;
    std::vector<SparseVec> kernel_;
};

std::size_t rank(const SparseMatrix& m);

/// Basis of the null space of m as integer vectors over the column indices.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// Reduced row echelon basis of the span of `vectors`, rows ordered by pivot
/// (smallest leading index first), each with leading coefficient 1.
std::vector<RatVec> rref_basis(const std::vector<SparseVec>& vectors);

/// Sparse product m * v.
SparseVec multiply(const SparseMatrix& m, const SparseVec& v);

/// Integer vector with the denominators of a rational vector cleared.
SparseVec clear_denominators(const RatVec& v);

}  // namespace asymih
