#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latticehom/rational.hpp"

namespace latticehom {

// Sparse matrix over Q in triplet form.  Duplicate entries accumulate.
struct SparseMatrixQ {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::tuple<int, int, Rat>> triplets;
    void add(int r, int c, const Rat& v) { triplets.push_back({r, c, v}); }
};

// Exact rank by sparse elimination with minimal-fill pivoting.
long long sparse_rank(const SparseMatrixQ& m);

// Solve sum_j x_j col_j = b exactly, where columns and b are sparse vectors
// keyed by an arbitrary row key already mapped to dense indices.
// Returns std::nullopt when b is outside the span.
std::optional<std::vector<Rat>> express_in_span(
    const std::vector<std::map<int, Rat>>& cols, const std::map<int, Rat>& b);

}  // namespace latticehom
