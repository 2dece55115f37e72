#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latticehom/characters.hpp"
#include "latticehom/symfunc.hpp"

namespace latticehom {

// Decomposition with each partition's first row stripped: body -> mult.
// Re-padding at level n prepends a first row of length n - |body|.
struct PaddedDecomposition {
    std::map<IntPartition, long long> mult;
    static PaddedDecomposition from(const IrrepDecomposition& dec);
    // padding is valid at n when n - |body| >= body_1 for every body
    bool pads_validly_at(int n) const;
    bool operator==(const PaddedDecomposition&) const = default;
};

struct StabilityReport {
    int predicted_bound = 0;
    std::optional<int> stable_at;  // least scanned n from which all agree
    bool sharp = false;
    bool inconclusive = false;
    std::string witness;  // body whose multiplicity changes below the bound
    std::string detail;
    std::map<int, PaddedDecomposition> scanned;
};

// Certification from a finite scan: sharp requires agreement (with valid
// padding) from the bound through the end of the range, at least two scanned
// points at or above the bound, and a multiplicity change at the largest
// scanned point below the bound.  Ranges too short give inconclusive
// (distinct from refutation).  Scanned points need not be contiguous
// (d-divisible families step by d); the certified sharp point then lies in
// the gap ending at stable_at, and the predicted bound must fall there.
StabilityReport stability_scan(const std::map<int, IrrepDecomposition>& decs,
                               int predicted_bound);

enum class ModuleKind { Alpha, Beta, WH };

// Decompositions of the module for each n in ns.  A valid family member n
// whose rank set is out of range contributes the zero module; n outside the
// family (wrong divisibility) is skipped.
std::map<int, IrrepDecomposition> decomposition_series(const FamilyCtx& ctx,
                                                       ModuleKind kind,
                                                       const RankSet& S,
                                                       const std::vector<int>& ns);

// Convenience: scan the module against its predicted sharp bound.
StabilityReport scan_module(const FamilyCtx& ctx, ModuleKind kind, const RankSet& S,
                            const std::vector<int>& ns, int predicted_bound);

// Sharp bound formulas.
int predicted_beta_bound(const FamilyCtx& ctx, const RankSet& S);  // k_P maxS - |S| + 1
int predicted_alpha_bound(const FamilyCtx& ctx, const RankSet& S);  // k_P maxS

// alpha_S scan against k_P max S.
StabilityReport chain_module_stability(const FamilyCtx& ctx, const RankSet& S,
                                       const std::vector<int>& ns);

// Essential part of WH_{S, (mu, 1^{n-|mu|})}(Pi_n): the S_{|mu|}-module
// WH_{S,mu}(Pi_{|mu|}).  mu must have no part of size 1 and satisfy
// |mu| - l(mu) = max S.
IrrepDecomposition essential_part(const RankSet& S, const IntPartition& mu);

// ch WH_{S,(mu,1^{n-|mu|})}(Pi_n) = h_{n-|mu|} * ch(essential part).
bool essential_part_identity_holds(const RankSet& S, const IntPartition& mu, int n);

// All block types mu (no part 1) with |mu| - l(mu) = max S and |mu| <= cap.
std::vector<IntPartition> component_types(int maxS, int size_cap);

// K(u) = sum_{i>=4} (i-3) m_i.
int refined_bound_offset(const IntPartition& mu);

struct ComponentBoundReport {
    bool ok = true;
    bool inconclusive = false;
    std::vector<std::string> failures;
    std::vector<std::string> checked;  // one line per component
};

// For each type component mu of rank max S with |mu| <= size_cap: the
// essential part satisfies max{|lambda|+lambda_1} <= 4 maxS - |S| + 1 - K(u),
// and the 2k/(k-1) maxS bound when every part of mu is >= k.
ComponentBoundReport component_bound_check(const RankSet& S, int size_cap);

// Hemmer's lemma as a sanity predicate on computed products: the Schur
// coefficients of s_lambda h_k satisfy c^{mu+e1}_{lambda,(k+1)} =
// c^{mu}_{lambda,(k)} once k >= lambda_1.
bool hemmer_stabilization_holds(const IntPartition& lambda, int k);

}  // namespace latticehom
