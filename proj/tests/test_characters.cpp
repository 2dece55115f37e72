#include "doctest.h"

#include "latticehom/characters.hpp"
#include "latticehom/homology.hpp"
#include "latticehom/stability.hpp"

#include <cstdlib>
#include <filesystem>

using namespace latticehom;

namespace {
const FamilyCtx kBool{PosetFamily::Boolean};
const FamilyCtx kPart{PosetFamily::Partition};
}  // namespace

TEST_CASE("alpha characters") {
    // alpha_emptyset is the trivial character
    CHECK(character_alpha(kPart, {}, 5) == trivial_character(5));
    // alpha_{1}(Pi_n) at the identity counts atoms
    for (int n : {4, 5, 6}) {
        auto chi = character_alpha(kPart, {1}, n);
        CHECK(chi.values.at(IntPartition(n, 1)) == Rat(n * (n - 1) / 2));
    }
    // alpha_{1}(B_4) decomposes as S^4 + S^31 (h_1 h_3)
    auto dec = decompose(character_alpha(kBool, {1}, 4));
    CHECK(dec.mult.size() == 2);
    CHECK(dec.mult.at({4}) == 1);
    CHECK(dec.mult.at({3, 1}) == 1);
    // and its Frobenius characteristic is h_1 h_3
    CHECK(frobenius(character_alpha(kBool, {1}, 4)) ==
          h_complete(1) * h_complete(3));
}

TEST_CASE("beta characters") {
    CHECK(character_beta(kBool, {}, 4) == trivial_character(4));
    // beta_{i}(B_n) for n >= 2i: S^{(n-1,1)} + ... + S^{(n-i,i)}
    for (int n : {5, 6}) {
        for (int i = 1; 2 * i <= n; ++i) {
            auto dec = decompose(character_beta(kBool, {i}, n));
            CHECK((int)dec.mult.size() == i);
            for (int j = 1; j <= i; ++j) CHECK(dec.mult.at({n - j, j}) == 1);
        }
    }
    // dim beta_{1,2}(Pi_4) = betti oracle
    auto Pi4 = partition_lattice(4);
    auto dec = decompose(character_beta(kPart, {1, 2}, 4));
    CHECK(dec.dim() == betti_top(Pi4, {1, 2}));
}

TEST_CASE("WH = beta_S + beta_{S^{(1)}} as characters") {
    for (auto& [ctx, S, n] :
         std::vector<std::tuple<FamilyCtx, RankSet, int>>{
             {kBool, {2}, 5},
             {kBool, {1, 3}, 5},
             {kPart, {2}, 5},
             {kPart, {1, 2}, 5},
             {kPart, {1, 3}, 6}}) {
        ClassFunction lhs = character_wh(ctx, S, n);
        RankSet body(S.begin(), S.end() - 1);
        ClassFunction rhs = character_beta(ctx, S, n);
        rhs += character_beta(ctx, body, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("WH_{1}(Pi_n) is the atom permutation module") {
    for (int n : {4, 5, 6}) {
        SymFunc f = frobenius(character_wh(kPart, {1}, n));
        CHECK(f == h_complete(2) * h_complete(n - 2));
    }
}

TEST_CASE("WH component of all-2s type matches the wreath plethysm") {
    // ch WH_{S,(2^i,1^{n-2i})}(Pi_n) = h_{n-2i} * (ribbon_WH Schur)[h_2]
    struct Case { RankSet S; int n; };
    for (auto& c : std::vector<Case>{{{1}, 4}, {{1}, 5}, {{2}, 5}, {{2}, 6}, {{1, 2}, 6}}) {
        int i = c.S.back();
        IntPartition type(i, 2);
        for (int k = 0; k < c.n - 2 * i; ++k) type.push_back(1);
        ClassFunction chi = character_wh_component(kPart, c.S, type, c.n);
        RankSet body(c.S.begin(), c.S.end() - 1);
        SymFunc f = ribbon_schur(body, i);  // Rib_WH(S) Schur function
        SymFunc rhs = h_complete(c.n - 2 * i) * plethysm(f, h_complete(2));
        CHECK(frobenius(chi) == rhs);
    }
}

TEST_CASE("decompose basics and guards") {
    CHECK(decompose(trivial_character(5)).mult ==
          std::map<IntPartition, long long>{{{5}, 1}});
    auto reg = decompose(regular_character(4));
    for (auto& [lam, m] : reg.mult) CHECK(m == irreducible_dimension(lam));
    // a non-character is flagged
    ClassFunction bad = trivial_character(3);
    bad.values[{3}] = Rat(1, 2);
    CHECK_THROWS_AS(decompose(bad), std::domain_error);
}

TEST_CASE("Hopf trace: beta character equals the trace on the ribbon basis") {
    auto Pi4 = partition_lattice(4);
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    for (RankSet S : {RankSet{1}, RankSet{2}, RankSet{1, 2}}) {
        auto basis = ribbon_basis_beta(Pi4, ord, S);
        ClassFunction chi = character_beta(kPart, S, 4);
        for (auto& mu : all_partitions(4)) {
            Perm g = perm_of_cycle_type(mu, 4);
            auto M = action_matrix(Pi4.P, basis, g);
            Rat tr = 0;
            for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
            CHECK(tr == chi.values.at(mu));
        }
    }
}

TEST_CASE("d-divisible boolean characters") {
    FamilyCtx dd{PosetFamily::DDivBoolean, 2};
    // B_{4,2} rank-1 elements are the 2-subsets of [4]
    auto chi = character_alpha(dd, {1}, 4);
    CHECK(chi.values.at({1, 1, 1, 1}) == Rat(6));
    CHECK(frobenius(chi) == h_complete(2) * h_complete(2));
    CHECK_THROWS(character_alpha(dd, {1}, 5));  // odd n not in the family
}


TEST_CASE("Hopf trace at adjacent transpositions on Pi_5 and B_6") {
    const FamilyCtx kPart2{PosetFamily::Partition};
    const FamilyCtx kBool2{PosetFamily::Boolean};
    {
        auto Pi5 = partition_lattice(5);
        auto ord = AtomOrder::natural(Pi5.num_atoms());
        for (RankSet S : {RankSet{2}, RankSet{1, 3}}) {
            auto basis = ribbon_basis_beta(Pi5, ord, S);
            ClassFunction chi = character_beta(kPart2, S, 5);
            for (const Perm& g : coxeter_generators(5)) {
                auto M = action_matrix(Pi5.P, basis, g);
                Rat tr = 0;
                for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
                CHECK(tr == chi.values.at(cycle_type(g)));
            }
        }
    }
    {
        auto B6 = boolean_lattice(6);
        auto ord = AtomOrder::natural(6);
        for (RankSet S : {RankSet{3}, RankSet{2, 4}}) {
            auto basis = ribbon_basis_beta(B6, ord, S);
            ClassFunction chi = character_beta(kBool2, S, 6);
            Perm g = transposition(6, 2, 3);
            auto M = action_matrix(B6.P, basis, g);
            Rat tr = 0;
            for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
            CHECK(tr == chi.values.at(cycle_type(g)));
        }
    }
}

TEST_CASE("LATTICEHOM_CACHE round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "latticehom_cache_test";
    fs::remove_all(dir);
    setenv("LATTICEHOM_CACHE", dir.c_str(), 1);
    const FamilyCtx ctx{PosetFamily::Boolean};
    ClassFunction first = character_alpha(ctx, {1, 2}, 5);
    // at least one cache file must have appeared
    bool any = fs::exists(dir) && !fs::is_empty(dir);
    CHECK(any);
    clear_character_memo();
    ClassFunction second = character_alpha(ctx, {1, 2}, 5);
    CHECK(first == second);
    unsetenv("LATTICEHOM_CACHE");
    clear_character_memo();
    fs::remove_all(dir);
}

TEST_CASE("beta as an alternating sum of Whitney modules") {
    // beta_S = WH_S - WH_{S^{(1)}} + WH_{S^{(2)}} - ... (+/- alpha_empty at the end)
    for (auto& [ctx, S, n] : std::vector<std::tuple<FamilyCtx, RankSet, int>>{
             {kBool, {1, 3}, 5}, {kPart, {1, 2}, 5}, {kPart, {1, 2, 3}, 6}}) {
        ClassFunction rhs;
        rhs.n = n;
        for (auto& mu : all_partitions(n)) rhs.values[mu] = 0;
        RankSet T = S;
        int sign = 1;
        while (!T.empty()) {
            ClassFunction wh = character_wh(ctx, T, n);
            if (sign > 0)
                rhs += wh;
            else
                rhs -= wh;
            T.pop_back();
            sign = -sign;
        }
        // the empty tail contributes the trivial module with alternating sign
        ClassFunction triv = trivial_character(n);
        if (sign > 0)
            rhs += triv;
        else
            rhs -= triv;
        CHECK(character_beta(ctx, S, n) == rhs);
    }
}
