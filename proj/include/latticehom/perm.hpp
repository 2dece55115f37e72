#pragma once

#include <vector>
#include <string>
#include <cstdint>

#include "latticehom/rational.hpp"

namespace latticehom {

// Permutation of {0,...,n-1} in one-line notation: p[i] = image of i.
using Perm = std::vector<int>;

// Integer partition, parts weakly decreasing.
using IntPartition = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);

// Cycle type as a partition of n.
IntPartition cycle_type(const Perm& p);

// Canonical permutation with the given cycle type: consecutive cycles
// (0 1 ... ), left to right through the parts.
Perm perm_of_cycle_type(const IntPartition& mu, int n);

// Transposition (i j) on n letters (0-based).
Perm transposition(int n, int i, int j);

// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<IntPartition> all_partitions(int n);

// All partitions of n with every part >= min_part.
std::vector<IntPartition> partitions_min_part(int n, int min_part);

long long partition_size(const IntPartition& mu);  // |mu|
int multiplicity(const IntPartition& mu, int part);

// z_mu = prod i^{m_i} m_i!, the centralizer order of the class mu.
// Class size is n!/z_mu.
void z_factor(const IntPartition& mu, mpz_class& out);

std::string partition_to_string(const IntPartition& mu);  // "3,1,1"
IntPartition partition_from_string(const std::string& s);

// Generators (adjacent transpositions) of S_n.
std::vector<Perm> coxeter_generators(int n);

}  // namespace latticehom
