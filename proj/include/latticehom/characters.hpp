#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latticehom/lattices.hpp"
#include "latticehom/symfunc.hpp"

namespace latticehom {

// Poset families carrying an S_n action, for character computations.
enum class PosetFamily { Boolean, Partition, DDivBoolean };

struct FamilyCtx {
    PosetFamily family = PosetFamily::Boolean;
    int d = 2;  // d-divisible parameter (DDivBoolean only)
    // letters of the symmetric group acting on P_n: n for Boolean/Partition,
    // n itself for B_{n,d} (whose poset rank is n/d)
    int poset_rank(int n) const;
    bool valid_n(int n) const;
    std::string name() const;
};

// Value per conjugacy class of S_n, exact.
struct ClassFunction {
    int n = 0;
    std::map<IntPartition, Rat> values;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    bool operator==(const ClassFunction&) const = default;
};

ClassFunction trivial_character(int n);

// Permutation character of the chains with rank set S: the value at a class
// is the number of chains fixed by a permutation of that cycle type,
// enumerated rank by rank over the fixed elements.  An optional top-element
// type filter restricts to chains whose largest element has the given block
// type (partition of n; Boolean families ignore it).
ClassFunction character_alpha(const FamilyCtx& ctx, const RankSet& S, int n);
ClassFunction character_alpha_filtered(const FamilyCtx& ctx, const RankSet& S, int n,
                                       const std::optional<IntPartition>& top_type);

// beta_S = sum over T subseteq S of (-1)^{|S\T|} alpha_T.
ClassFunction character_beta(const FamilyCtx& ctx, const RankSet& S, int n);

// WH_S = sum over T subseteq S\{max S} of (-1)^{|S'\T|} alpha_{T u {max S}};
// equal to beta_S + beta_{S^{(1)}} (asserted in tests).  The component
// version restricts the top element to a fixed type (partition of n).
ClassFunction character_wh(const FamilyCtx& ctx, const RankSet& S, int n);
ClassFunction character_wh_component(const FamilyCtx& ctx, const RankSet& S,
                                     const IntPartition& type, int n);

// Inner products with irreducible characters through the class sizes;
// throws std::domain_error if any multiplicity is negative or fractional.
IrrepDecomposition decompose(const ClassFunction& chi);

// Frobenius characteristic of a class function: sum_mu chi(mu)/z_mu p_mu.
SymFunc frobenius(const ClassFunction& chi);

// Character of the regular representation (for tests).
ClassFunction regular_character(int n);

// Shared per-n lattice cache (characters of the partition family reuse the
// element list across rank sets and cycle types).
const Lattice& cached_lattice(const FamilyCtx& ctx, int n);
void clear_lattice_cache();
// Drops the in-memory alpha memo (forces LATTICEHOM_CACHE reads in tests).
void clear_character_memo();

// Number of threads used for per-class parallelism (deterministic output).
void set_character_threads(int threads);

}  // namespace latticehom
