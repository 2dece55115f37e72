#pragma once

#include <map>
#include <vector>

#include "latticehom/perm.hpp"
#include "latticehom/poset.hpp"
#include "latticehom/rational.hpp"

namespace latticehom {

// Homogeneous symmetric function held in the power-sum basis with exact
// rational coefficients.  The zero function has empty coefficients.
struct SymFunc {
    int deg = 0;
    std::map<IntPartition, Rat> p_coeff;

    bool is_zero() const { return p_coeff.empty(); }
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator*(const SymFunc& o) const;
    SymFunc operator*(const Rat& c) const;
    bool operator==(const SymFunc&) const = default;
};

// Irreducible character value chi^lambda(mu) via the Murnaghan-Nakayama
// recursion, memoized on (lambda, mu).
Int irreducible_character(const IntPartition& lambda, const IntPartition& mu);

SymFunc p_monomial(const IntPartition& mu);
SymFunc h_complete(int n);                      // h_n
SymFunc e_elementary(int n);                    // e_n
SymFunc h_of_partition(const IntPartition& mu); // prod_i h_{mu_i}
SymFunc schur_function(const IntPartition& lambda);

// Schur expansion <f, s_lambda> for all lambda of deg(f).
std::map<IntPartition, Rat> schur_expand(const SymFunc& f);

// Plethysm f[g] via the power-sum substitution p_k[g] = g(p_j -> p_jk).
// Guarded by the output degree cap.
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int degree_cap = 20);

// Schur expansion of the ribbon Specht character for Rib(S) inside degree n:
// inclusion-exclusion over subsets of S of products of complete homogeneous
// functions indexed by the consecutive gaps.
SymFunc ribbon_schur(const RankSet& S, int n);

// Multiset of irreducible multiplicities of an S_n-module.
struct IrrepDecomposition {
    int n = 0;
    std::map<IntPartition, long long> mult;
    long long dim() const;  // sum mult * dim S^lambda
    bool operator==(const IrrepDecomposition&) const = default;
};

SymFunc frobenius(const IrrepDecomposition& d);

// Dimension of the irreducible S^lambda (number of SYT).
long long irreducible_dimension(const IntPartition& lambda);

// Largest first row among partitions with nonzero coefficient; -1 for zero.
int max_first_row(const std::map<IntPartition, Rat>& schur_coeffs);
// max of |lambda| + lambda_1 over the support; -1 for zero.
int max_size_plus_first_row(const std::map<IntPartition, Rat>& schur_coeffs);

}  // namespace latticehom
