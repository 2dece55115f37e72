#pragma once

#include <map>
#include <vector>

#include "latticehom/lattices.hpp"
#include "latticehom/perm.hpp"
#include "latticehom/rational.hpp"

namespace latticehom {

// Connected skew shape with no 2x2 square, encoded by row lengths bottom to
// top.  Box indices follow the reading order: left to right, bottom to top.
struct RibbonShape {
    std::vector<int> rows;

    int size() const;
    int num_rows() const { return (int)rows.size(); }
    int num_cols() const;
    int row_of_box(int i) const;  // 0-based row (bottom row = 0)
    int col_of_box(int i) const;  // 0-based column
    // Box indices per column, listed top to bottom.
    std::vector<std::vector<int>> columns() const;
    // Reading-order positions where a row ends (1-based counts s_1, s_2, ...).
    std::vector<int> row_ends() const;
    bool operator==(const RibbonShape&) const = default;
};

// Rib(S) for a poset of rank n: row lengths (s_1, s_2-s_1, ..., n-s_k).
RibbonShape ribbon_of(const RankSet& S, int n);
// Rib_WH(S) = Rib(s_1, ..., max S - s_{r-1}), with max S boxes total.
RibbonShape ribbon_wh_of(const RankSet& S);

// Filling of a ribbon by atom positions (indices into a Lattice's atom list)
// in reading order; entries pairwise distinct.
struct RibbonFilling {
    RibbonShape shape;
    std::vector<int> word;
    bool operator==(const RibbonFilling&) const = default;
};

// Total order on atoms used for labelings, standardness and NBC tests;
// order[k] is the atom position that sits at rank k of the order.
struct AtomOrder {
    std::vector<int> order;
    std::vector<int> pos_in_order;
    static AtomOrder natural(int num_atoms);
    static AtomOrder from_order(std::vector<int> order);
    bool less(int a, int b) const { return pos_in_order[a] < pos_in_order[b]; }
    std::vector<int> positions(const std::vector<int>& atoms) const;
};

// Row strict (left to right) and column strict (top to bottom) in ord.
bool is_standard(const RibbonFilling& F, const AtomOrder& ord);

// Filling modulo row order: rows sorted by atom position.
struct Tabloid {
    std::vector<std::vector<int>> rows;
    auto operator<=>(const Tabloid&) const = default;
};
Tabloid tabloid_of(const RibbonFilling& F);

struct TabloidVector {
    std::map<Tabloid, Rat> terms;
    void add(const Tabloid& t, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    size_t num_terms() const { return terms.size(); }
    TabloidVector& operator+=(const TabloidVector& o);
    TabloidVector operator-() const;
    bool operator==(const TabloidVector&) const = default;
};

// v_F = sum over the column group of sgn(sigma) {sigma F}.
TabloidVector polytabloid(const RibbonFilling& F);

// Letter action (Pi_n relabels each atom {i,j} -> {g(i),g(j)}).
RibbonFilling act(const Lattice& L, const Perm& g, const RibbonFilling& F);
TabloidVector act(const Lattice& L, const Perm& g, const TabloidVector& v);

// Young tableau of partition shape with distinct integer entries (letters).
struct YoungTableau {
    IntPartition shape;
    std::vector<std::vector<int>> rows;
    bool is_standard() const;
    std::vector<std::vector<int>> columns() const;
    std::vector<int> letters() const;  // sorted
};

// All standard Young tableaux of the given shape filled with the given
// letters (sorted ascending).
std::vector<YoungTableau> standard_tableaux(const IntPartition& shape,
                                            const std::vector<int>& letters);

// c_T v = b_T (a_T v): row-symmetrize then column-antisymmetrize, acting on
// tabloid entries through the lattice's letter action.  Throws if the group
// sum would exceed group_sum_cap elements.
TabloidVector young_symmetrizer_apply(const Lattice& L, const YoungTableau& T,
                                      const TabloidVector& v,
                                      long long group_sum_cap = 10'000'000);
// a_T v alone (the row-symmetrized part).
TabloidVector row_symmetrize(const Lattice& L, const YoungTableau& T,
                             const TabloidVector& v,
                             long long group_sum_cap = 10'000'000);

// Number of standard Young tableaux of shape lambda with descent set
// exactly S (descent: i+1 in a strictly lower row than i).
long long syt_count_with_descent_set(const IntPartition& lambda, const RankSet& S);

// Classification of the boxes of a chain filling F (a filling arising from a
// saturated chain from bottom to u) with respect to an SYT T and the set
// partition u: swappable, ambiguous of type (a) (a letter lies in a block of
// size > 2), or ambiguous of type (b) (a 2-block letter whose partner fails
// to share the first row of T).
struct SwappableReport {
    std::vector<int> swappable_boxes;
    std::vector<int> ambiguous_boxes_a;
    std::vector<int> ambiguous_boxes_b;
};

// Swappable pairs of letters in T with respect to u: pairs {i,j} lying in
// the first row of T that form a 2-block of u.
std::vector<std::pair<int, int>> swappable_letter_pairs(const YoungTableau& T,
                                                        const SetPartition& u);
SwappableReport swappable_analysis(const YoungTableau& T, const SetPartition& u,
                                   const RibbonFilling& F, const Lattice& L);

// Sw(u) = lambda_1(u) - sum_{i>=3} i m_i(u) - (|lambda(u)| - lambda_1(u)),
// where |lambda(u)| = sum_{i>=2} i m_i(u) and
// lambda_1(u) = 4 max S - |S| + 2 - |lambda(u)|.  Requires rank(u) = max S.
long long swap_statistic(const SetPartition& u, const RankSet& S);
long long lambda_size_of(const SetPartition& u);     // |lambda(u)|
long long lambda1_of(const SetPartition& u, const RankSet& S);

}  // namespace latticehom
