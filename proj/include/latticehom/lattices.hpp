#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "latticehom/matroid.hpp"
#include "latticehom/poset.hpp"

namespace latticehom {

// Canonical set partition of {1..n}: block_of[i] is the block index of
// letter i+1, blocks numbered by first occurrence (restricted growth string).
struct SetPartition {
    int n = 0;
    std::vector<uint8_t> block_of;

    static SetPartition discrete(int n);
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    std::vector<std::vector<int>> blocks() const;  // 1-based letters, sorted
    int num_blocks() const;
    int rank() const { return n - num_blocks(); }
    IntPartition type() const;  // block sizes, weakly decreasing
    bool refines(const SetPartition& other) const;  // this <= other
    SetPartition merge_blocks(int b1, int b2) const;
    SetPartition relabel(const Perm& g) const;  // g is 0-based on letters
    std::string to_string() const;              // "1.2|3" style
    auto operator<=>(const SetPartition&) const = default;
};

// A graded poset together with its atom bookkeeping.  Atoms are listed in
// the natural order of the family (lex pairs for Pi_n, singletons for B_n,
// rank-1 flats by mask for lattices of flats); this ordering is the default
// AtomOrder for minimal labelings.
struct Lattice {
    GradedPoset P;
    std::vector<int> atoms;                      // element ids, natural order
    std::vector<std::vector<int>> atom_letters;  // 1-based letters per atom pos
    std::vector<uint64_t> atoms_below;           // per element id, over atom pos
    std::map<std::vector<int>, int> atom_pos_of_letters;

    int num_atoms() const { return (int)atoms.size(); }
    int atom_pos_of_element(int elem) const;
    // Join of the atoms at the given positions; bottom for the empty mask.
    int join_atom_mask(uint64_t amask) const;
    // Image of atom position under a letter permutation (0-based perm).
    int act_atom(const Perm& g, int apos) const;
    std::string atom_name(int apos) const { return P.labels[atoms[apos]]; }

    // Set partition view of an element (partition lattice only).
    const SetPartition& set_partition_of(int elem) const;
    int element_of_set_partition(const SetPartition& u) const;

    // Pi_n only; shared so the poset's structural hints stay valid when the
    // Lattice value is moved around.
    std::shared_ptr<const std::vector<SetPartition>> pi_elements;
    std::shared_ptr<const std::map<SetPartition, int>> pi_index;

    void finalize_atoms();  // fills atoms_below / atom_pos_of_letters
};

// Desk-scale guards, overridable (config cap).
struct LatticeGuards {
    int boolean_max_n = 12;
    int partition_max_n = 10;
    size_t flats_cap = 1u << 16;
    bool enforce = true;
};

Lattice boolean_lattice(int n, const LatticeGuards& g = {});
Lattice partition_lattice(int n, const LatticeGuards& g = {});
// B_{n,d}: subsets of size divisible by d, a graded poset of rank n/d.
// Requires d | n (adjoining a top for d not dividing n is out of scope).
Lattice d_divisible_boolean(int n, int d, const LatticeGuards& g = {});
Lattice lattice_of_flats(const Matroid& m, const LatticeGuards& g = {});

// Least upper bound of a set of elements; the empty set joins to bottom.
int join(const GradedPoset& P, const std::vector<int>& xs);

// Geometric-lattice checks, exhaustive (small posets only).
bool is_atomic(const Lattice& L);
bool is_semimodular(const GradedPoset& P);

// The sublattice [bottom, u] as a Lattice of its own, with a map back to
// ambient element ids.  Atom order is inherited from the ambient order.
struct IntervalLattice {
    Lattice L;
    std::vector<int> ambient_of;       // interval id -> ambient id
    std::vector<int> atom_pos_in_ambient;  // interval atom pos -> ambient atom pos
};
IntervalLattice lower_interval(const Lattice& L, int u);

}  // namespace latticehom
