#pragma once

#include <string>

#include "latticehom/characters.hpp"
#include "latticehom/homology.hpp"
#include "latticehom/stability.hpp"

namespace latticehom {

// Poset: {"elements": [descriptor strings], "covers": [[i,j]], "rank": [ints]}
std::string poset_to_json(const GradedPoset& P);
GradedPoset poset_from_json(const std::string& text);

// Matroid: {"ground": [labels], "circuits": [[...]]} or {"ground": [labels],
// "bases": [[...]]}, entries by label or 0-based index; graphic matroids:
// {"vertices": n, "edges": [[u,v]]}.
Matroid matroid_from_json(const std::string& text);

// Filling: {"shape": [row lengths], "rows": [[atom labels]]}
std::string filling_to_json(const Lattice& L, const RibbonFilling& F);

// Basis export: list of {filling, chain_terms: [{chain: [descriptors],
// coeff: "p/q"}]}
std::string basis_to_json(const Lattice& L, const std::vector<BasisElement>& basis);

// Decomposition tables: CSV rows "n,lambda,mult" and JSON.
std::string decomposition_to_csv(const IrrepDecomposition& dec);
std::string decomposition_to_json(const IrrepDecomposition& dec);

std::string class_function_to_csv(const ClassFunction& chi);
std::string class_function_to_json(const ClassFunction& chi);

// Stability report: {"bound":, "stable_at":, "sharp":, "witness":}
std::string stability_report_to_json(const StabilityReport& rep);

}  // namespace latticehom
