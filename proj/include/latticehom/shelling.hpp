#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latticehom/lattices.hpp"
#include "latticehom/poset.hpp"
#include "latticehom/tableaux.hpp"

namespace latticehom {

// Edge labeling of a lattice: each cover (u,v) carries an atom position.
// Labels are compared through the atom order the labeling was built with.
struct EdgeLabeling {
    std::map<std::pair<int, int>, int> label;
    AtomOrder ord;
    int operator()(int u, int v) const { return label.at({u, v}); }
    bool label_less(int a, int b) const { return ord.less(a, b); }
    std::vector<int> order_positions(const std::vector<int>& word) const;
};

// Minimal labeling: cover u < v is labeled by the least atom (in ord) below
// v but not below u.  Throws if some cover has no such atom (non-atomic).
EdgeLabeling minimal_labeling(const Lattice& L, const AtomOrder& ord);

// EL-labeling check: every interval has exactly one weakly ascending maximal
// chain, and that chain is lexicographically first.
struct ELViolation {
    int x, y;
    std::string reason;
};
struct ELReport {
    bool ok = true;
    std::vector<ELViolation> violations;
};
ELReport verify_el_labeling(const Lattice& L, const EdgeLabeling& lab);

// Label sequence of a saturated chain (consecutive covers).
std::vector<int> label_word(const EdgeLabeling& lab, const Chain& chain);

// Reading word -> the maximal chain of prefix joins (bottom and top
// included).  Throws if the word is dependent or rank deficient.
Chain chain_from_reading_word(const Lattice& L, const std::vector<int>& word);

// Chain of prefix joins for any independent word from bottom up (not
// necessarily full rank); returns the chain excluding bottom.
Chain prefix_join_chain(const Lattice& L, const std::vector<int>& word);

// Label sequence of a maximal chain, shaped into Rib(S).
RibbonFilling filling_from_chain_labels(const Lattice& L, const EdgeLabeling& lab,
                                        const Chain& maximal, const RankSet& S);

// Lexicographically earliest maximal chain of L containing the given middle
// chain (whose ranks are exactly S).  Output includes bottom and top.
Chain lex_first_containing_chain(const Lattice& L, const AtomOrder& ord,
                                 const Chain& middle);

bool is_nbc_independent(const Lattice& L, const AtomOrder& ord, uint64_t atom_mask);

// NBC+ words: label sequences of maximal chains under the minimal labeling;
// checked via the prefix-minimality definition.
bool is_nbc_plus(const Lattice& L, const AtomOrder& ord, const std::vector<int>& word);

// All standard NBC+ fillings of Rib(S), obtained by filtering the label
// fillings of maximal chains; deterministic order.  These index the homology
// facets of the induced shelling of the rank-selected subposet.
std::vector<RibbonFilling> standard_nbc_plus_fillings(const Lattice& L,
                                                      const AtomOrder& ord,
                                                      const RankSet& S);

}  // namespace latticehom
