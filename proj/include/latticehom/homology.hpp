#pragma once

#include <map>
#include <string>
#include <vector>

#include "latticehom/lattices.hpp"
#include "latticehom/linalg.hpp"
#include "latticehom/shelling.hpp"
#include "latticehom/tableaux.hpp"

namespace latticehom {

// Formal rational combination of chains (chains keyed by ambient element
// ids with strictly increasing ranks; the empty chain is a valid key).
struct ChainVector {
    std::map<Chain, Rat> terms;
    void add(const Chain& c, const Rat& v);
    bool is_zero() const { return terms.empty(); }
    ChainVector& operator+=(const ChainVector& o);
    ChainVector operator-() const;
    bool operator==(const ChainVector&) const = default;
};

// bar f_chain: each tabloid maps to the chain of its row-prefix joins.  For
// rank-selected homology the final join is the top and is dropped
// (keep_final = false); Whitney homology vectors keep the final join (their
// element u).  Throws if some tabloid's entry set is dependent.
ChainVector chain_vector_from_tabloids(const Lattice& L, const TabloidVector& v,
                                       bool keep_final);
Chain chain_of_tabloid(const Lattice& L, const Tabloid& t, bool keep_final);

// Simplicial boundary with sign (-1)^{i-1} for deleting position i.  With
// fixed_top the last element of each chain is never deleted (interval
// homology below a fixed u).  A 1-element chain maps to the empty chain
// (reduced complex).
ChainVector boundary_apply(const ChainVector& v, bool fixed_top = false);

// Group action on chain vectors (elementwise on poset elements).
ChainVector act(const GradedPoset& P, const Perm& g, const ChainVector& v);

// Brute-force top Betti number of the order complex of the proper part of
// the rank-selected subposet: #facets - rank(d_top), over exact rationals.
// S empty returns 1 (the reduced homology of the empty complex).
struct HomologyGuards {
    size_t max_facets = 2'000'000;
};
long long betti_top(const Lattice& L, const RankSet& S, const HomologyGuards& g = {});

struct BasisElement {
    RibbonFilling filling;      // atom positions in the ambient lattice
    TabloidVector tabloid_vec;  // the polytabloid v_F
    ChainVector chain_vec;      // bar f_chain(v_F)
};

// Ribbon basis for the top homology of the rank-selected subposet.
std::vector<BasisElement> ribbon_basis_beta(const Lattice& L, const AtomOrder& ord,
                                            const RankSet& S);

// Ribbon basis for rank-selected Whitney homology: for each element u of
// rank max S, the ribbon basis of the interval below u.  Chains include u.
// Unlike rank selection, max S may equal the full rank (u = top).
struct WhitneyBasis {
    std::map<int, std::vector<BasisElement>> by_element;
    size_t total_dim() const;
};
WhitneyBasis ribbon_basis_wh(const Lattice& L, const AtomOrder& ord, const RankSet& S);

// Checks: every vector is a cycle; the vector <-> homology facet incidence
// is a bijection with unit coefficients (each vector holds exactly its own
// facet); exact rank equals betti_top.
struct BasisReport {
    bool ok = true;
    std::vector<std::string> failures;
    long long betti = -1;
    long long rank = -1;
};
BasisReport verify_basis(const std::vector<BasisElement>& vectors, const Lattice& L,
                         const AtomOrder& ord, const RankSet& S,
                         const HomologyGuards& g = {});

// The homology facets of the induced shelling: middle chains of P^S whose
// lex-first extension has descents exactly at S.
std::vector<Chain> homology_facets(const Lattice& L, const AtomOrder& ord,
                                   const RankSet& S);

// Minimal dependent atom sets of the lattice (as atom-position masks).
std::vector<uint64_t> lattice_circuits(const Lattice& L);

// Orlik-Solomon graded component: NBC monomials of the matroid in degree i
// (ground-element masks with implicit descending variable order) and the
// circuit relations.
struct OSComponent {
    int degree = 0;
    std::vector<uint32_t> monomials;
    std::vector<uint32_t> circuits;
    long long dim() const { return (long long)monomials.size(); }
};
OSComponent os_component(const Matroid& m, const std::vector<int>& ground_order, int i);

// For every circuit {a_1 > ... > a_j} of the lattice: the alternating sum of
// ribbon generators omitting one atom vanishes; also checks the generalized
// straightening relations obtained by inserting up to max_extra independent
// atoms around a circuit.
struct OSRelationReport {
    bool ok = true;
    std::vector<std::string> failures;
    int circuits_checked = 0;
    int straightenings_checked = 0;
};
OSRelationReport verify_os_relations(const Lattice& L, const AtomOrder& ord,
                                     int max_extra = 1);

// Matrix of a permutation acting on a homology basis, solved exactly; used
// for Hopf-trace cross-checks.  Returns row-major coefficients M with
// g . basis[j] = sum_i M[i][j] basis[i].
std::vector<std::vector<Rat>> action_matrix(const GradedPoset& P,
                                            const std::vector<BasisElement>& basis,
                                            const Perm& g);

}  // namespace latticehom
