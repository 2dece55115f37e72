#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latticehom/perm.hpp"
#include "latticehom/rational.hpp"

namespace latticehom {

// Strictly increasing list of nontrivial ranks of the ambient poset.
using RankSet = std::vector<int>;

// Chain of element ids with strictly increasing ranks.  Chains exclude the
// bottom and top elements unless stated otherwise.
using Chain = std::vector<int>;

// Finite bounded graded poset.  Elements are dense integer indices with a
// side table of descriptors; immutable after finalize() and safe to share.
struct GradedPoset {
    std::vector<std::string> labels;
    std::vector<int> rank_of;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)
    int bottom = -1;
    int top = -1;

    // Optional structural fast paths, installed by the lattice constructors.
    std::function<bool(int, int)> leq_hint;
    std::function<int(int, int)> join_hint;
    // Optional group action: (permutation of letters, element) -> element.
    std::function<int(const Perm&, int)> action;
    int n_letters = 0;  // letters the action permutes, 0 if no action

    // Derived structure, filled by finalize().
    std::vector<std::vector<int>> upper;    // upper covers of each element
    std::vector<std::vector<int>> lower;    // lower covers of each element
    std::vector<std::vector<int>> by_rank;  // elements per rank, canonical order

    int num_elements() const { return (int)labels.size(); }
    int top_rank() const { return rank_of[top]; }
    void finalize();  // builds adjacency, validates bounds and gradedness

    // x <= y.  Uses leq_hint when installed, else cover-relation search.
    bool leq(int x, int y) const;

    // Least upper bound of two elements; throws if not unique.
    int join2(int x, int y) const;

    // Elements of given rank in canonical order.
    const std::vector<int>& elements_of_rank(int r) const { return by_rank[r]; }

    int act(const Perm& g, int x) const { return action(g, x); }
};

// S must consist of nontrivial ranks, 1 <= s <= rank(top)-1, strictly
// increasing.  Throws std::invalid_argument otherwise.
void check_rank_set(const GradedPoset& P, const RankSet& S);

// Induced subposet on the elements with rank in S, re-bounded by fresh
// bottom/top sentinels.  Rank-i elements carry original identity in
// orig_element; the group action is inherited.
struct RankSelectedPoset {
    GradedPoset poset;
    std::vector<int> orig_element;  // sub id -> ambient id (-1 for sentinels)
    std::vector<int> sub_of_orig;   // ambient id -> sub id (-1 if absent)
};
RankSelectedPoset rank_selected_subposet(const GradedPoset& P, const RankSet& S);

// All chains (excluding bottom/top) whose rank multiset is exactly T,
// in deterministic lexicographic order on element indices.  T empty gives
// the single empty chain.
std::vector<Chain> chains_with_rank_set(const GradedPoset& P, const RankSet& T);

// As above but keeping only chains whose top element satisfies the filter.
std::vector<Chain> chains_with_rank_set_filtered(
    const GradedPoset& P, const RankSet& T,
    const std::function<bool(int)>& top_filter);

// Moebius function of the interval [x, y]; throws if x is not <= y.
Int mobius(const GradedPoset& P, int x, int y);

// All saturated bottom-to-top chains, including the bounds, in deterministic
// order (lexicographic on element indices).
std::vector<Chain> maximal_chains(const GradedPoset& P);

// Saturated chains from x to y, including both endpoints.
std::vector<Chain> saturated_chains(const GradedPoset& P, int x, int y);

// Restriction of a bottom-to-top maximal chain to the ranks in S
// (middle-only output).
Chain restrict_chain_to_ranks(const GradedPoset& P, const Chain& full_chain,
                              const RankSet& S);

}  // namespace latticehom
