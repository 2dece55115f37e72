#include "doctest.h"

#include "latticehom/symfunc.hpp"
#include "latticehom/tableaux.hpp"

using namespace latticehom;

TEST_CASE("character table basics") {
    // S_3: chi^{(2,1)} values on classes (1^3), (2,1), (3)
    CHECK(irreducible_character({2, 1}, {1, 1, 1}) == Int(2));
    CHECK(irreducible_character({2, 1}, {2, 1}) == Int(0));
    CHECK(irreducible_character({2, 1}, {3}) == Int(-1));
    CHECK(irreducible_character({1, 1, 1, 1}, {2, 1, 1}) == Int(-1));  // sign rep
    // column orthogonality at the identity of S_5: sum dim^2 = 120
    Int s = 0;
    for (auto& lam : all_partitions(5)) {
        Int d = irreducible_character(lam, {1, 1, 1, 1, 1});
        s += d * d;
    }
    CHECK(s == Int(120));
}

TEST_CASE("schur / h / e conversions") {
    CHECK(schur_function({3}) == h_complete(3));
    CHECK(schur_function({1, 1, 1}) == e_elementary(3));
    // h_2 = s_2, e_2 = s_11; h_1 h_1 = s_2 + s_11
    SymFunc h11 = h_complete(1) * h_complete(1);
    auto sexp = schur_expand(h11);
    CHECK(sexp.at({2}) == 1);
    CHECK(sexp.at({1, 1}) == 1);
    // Jacobi-Trudi spot check: s_{2,1} = h_2 h_1 - h_3
    SymFunc s21 = h_complete(2) * h_complete(1);
    s21 -= h_complete(3);
    CHECK(s21 == schur_function({2, 1}));
}

TEST_CASE("dimension formula") {
    CHECK(irreducible_dimension({3, 2}) == 5);
    CHECK(irreducible_dimension({2, 2, 1}) == 5);
    CHECK(irreducible_dimension({4, 3, 1}) == 70);
    CHECK(irreducible_dimension({12}) == 1);
}

TEST_CASE("plethysm identities") {
    SymFunc f = schur_function({2, 1});
    CHECK(plethysm(h_complete(1), f) == f);   // h_1[f] = f
    CHECK(plethysm(p_monomial({1}), f) == f); // p_1[f] = f
    // h_2[h_2] = s_4 + s_22
    auto he = schur_expand(plethysm(h_complete(2), h_complete(2)));
    CHECK(he.size() == 2);
    CHECK(he.at({4}) == 1);
    CHECK(he.at({2, 2}) == 1);
    // e_2[h_2] = s_{3,1}
    auto ee = schur_expand(plethysm(e_elementary(2), h_complete(2)));
    CHECK(ee.size() == 1);
    CHECK(ee.at({3, 1}) == 1);
    // degree guard
    CHECK_THROWS_AS(plethysm(h_complete(5), h_complete(5)), std::domain_error);
}

TEST_CASE("e_d[h_2] has sharp first-row bound d+1") {
    for (int d = 1; d <= 5; ++d) {
        auto coeffs = schur_expand(plethysm(e_elementary(d), h_complete(2)));
        CHECK(max_first_row(coeffs) == d + 1);
    }
}

TEST_CASE("ribbon schur functions") {
    // Rib({1..i}, n) is the hook (n-i, 1^i)
    for (int n : {4, 5, 6})
        for (int i = 1; i < n; ++i) {
            RankSet S;
            for (int k = 1; k <= i; ++k) S.push_back(k);
            IntPartition hook = {n - i};
            for (int k = 0; k < i; ++k) hook.push_back(1);
            CHECK(ribbon_schur(S, n) == schur_function(hook));
        }
    // two-row ribbon S={i}: s_{Rib(i,n-i)} = sum_{j=1..i} s_{(n-j,j)} for n >= 2i
    auto coeffs = schur_expand(ribbon_schur({2}, 6));
    CHECK(coeffs.size() == 2);
    CHECK(coeffs.at({5, 1}) == 1);
    CHECK(coeffs.at({4, 2}) == 1);
    // empty rank set: the trivial module
    CHECK(ribbon_schur({}, 5) == h_complete(5));
}

TEST_CASE("frobenius of a decomposition") {
    IrrepDecomposition d;
    d.n = 4;
    d.mult[{4}] = 1;
    d.mult[{3, 1}] = 1;
    SymFunc f = frobenius(d);
    CHECK(f == h_complete(1) * h_complete(3));  // h_1 h_3 = s_4 + s_31
    CHECK(d.dim() == 4);
}

TEST_CASE("ribbon specht multiplicities equal SYT descent counts") {
    for (int n : {4, 5, 6}) {
        for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
            RankSet S;
            for (int i = 1; i < n; ++i)
                if (bits & (1 << (i - 1))) S.push_back(i);
            auto coeffs = schur_expand(ribbon_schur(S, n));
            for (auto& lam : all_partitions(n)) {
                Rat c = coeffs.count(lam) ? coeffs.at(lam) : Rat(0);
                CHECK(c == Rat((long)syt_count_with_descent_set(lam, S)));
            }
        }
    }
}
