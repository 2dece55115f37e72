#include "doctest.h"

#include <random>
#include <set>

#include "latticehom/homology.hpp"

using namespace latticehom;

namespace {

RibbonFilling filling_of(const Lattice& L, const RibbonShape& shape,
                         const std::vector<std::vector<int>>& letters) {
    RibbonFilling F;
    F.shape = shape;
    for (auto& ls : letters) F.word.push_back(L.atom_pos_of_letters.at(ls));
    return F;
}

Chain chain_of(const Lattice& L, const std::vector<SetPartition>& elems) {
    Chain c;
    for (auto& u : elems) c.push_back(L.element_of_set_partition(u));
    return c;
}

}  // namespace

TEST_CASE("bar f_chain on the Pi_4 annihilation example") {
    auto Pi4 = partition_lattice(4);
    RibbonFilling F = filling_of(Pi4, ribbon_of({2}, 3), {{1, 2}, {1, 4}, {1, 3}});
    ChainVector v = chain_vector_from_tabloids(Pi4, polytabloid(F), false);
    REQUIRE(v.terms.size() == 2);
    Chain c124 = chain_of(Pi4, {SetPartition::from_blocks(4, {{1, 2, 4}, {3}})});
    Chain c123 = chain_of(Pi4, {SetPartition::from_blocks(4, {{1, 2, 3}, {4}})});
    CHECK(v.terms.at(c124) == 1);
    CHECK(v.terms.at(c123) == -1);
    CHECK(boundary_apply(v).is_zero());
}

TEST_CASE("bar f_chain on the B_8 worked example") {
    auto B8 = boolean_lattice(8);
    RibbonFilling F = filling_of(B8, ribbon_of({2, 5}, 8),
                                 {{3}, {4}, {1}, {6}, {7}, {2}, {5}, {8}});
    ChainVector v = chain_vector_from_tabloids(B8, polytabloid(F), false);
    REQUIRE(v.terms.size() == 4);
    auto subset = [&](std::vector<int> xs) {
        int m = 0;
        for (int x : xs) m |= 1 << (x - 1);
        return m;
    };
    Chain c1 = {subset({3, 4}), subset({1, 3, 4, 6, 7})};
    Chain c2 = {subset({3, 1}), subset({1, 3, 4, 6, 7})};
    Chain c3 = {subset({3, 4}), subset({1, 3, 4, 6, 2})};
    Chain c4 = {subset({3, 1}), subset({1, 3, 4, 6, 2})};
    CHECK(v.terms.at(c1) == 1);
    CHECK(v.terms.at(c2) == -1);
    CHECK(v.terms.at(c3) == -1);
    CHECK(v.terms.at(c4) == 1);
    CHECK(boundary_apply(v).is_zero());
}

TEST_CASE("bar f_chain on the Pi_8 worked example: 4 distinct chains, d=0") {
    auto Pi8 = partition_lattice(8);
    RibbonFilling F = filling_of(
        Pi8, ribbon_of({2, 5}, 7),
        {{1, 2}, {5, 6}, {1, 3}, {1, 5}, {7, 8}, {1, 4}, {1, 7}});
    ChainVector v = chain_vector_from_tabloids(Pi8, polytabloid(F), false);
    REQUIRE(v.terms.size() == 4);
    auto sp = [&](std::vector<std::vector<int>> blocks) {
        std::vector<int> seen(9, 0);
        for (auto& b : blocks)
            for (int x : b) seen[x] = 1;
        for (int x = 1; x <= 8; ++x)
            if (!seen[x]) blocks.push_back({x});
        return SetPartition::from_blocks(8, blocks);
    };
    Chain k1 = chain_of(Pi8, {sp({{1, 2}, {5, 6}}), sp({{1, 2, 3, 5, 6}, {7, 8}})});
    Chain k2 = chain_of(Pi8, {sp({{1, 2, 3}}), sp({{1, 2, 3, 5, 6}, {7, 8}})});
    Chain k3 = chain_of(Pi8, {sp({{1, 2}, {5, 6}}), sp({{1, 2, 3, 4, 5, 6}})});
    Chain k4 = chain_of(Pi8, {sp({{1, 2, 3}}), sp({{1, 2, 3, 4, 5, 6}})});
    CHECK(v.terms.at(k1) == 1);
    CHECK(v.terms.at(k2) == -1);
    CHECK(v.terms.at(k3) == -1);
    CHECK(v.terms.at(k4) == 1);
    ChainVector b = boundary_apply(v);
    CHECK(b.is_zero());
}

TEST_CASE("bar f_chain composed with tau matches res_S of f_chain") {
    auto Pi5 = partition_lattice(5);
    auto ord = AtomOrder::natural(Pi5.num_atoms());
    RankSet S = {1, 3};
    auto lab = minimal_labeling(Pi5, ord);
    for (const Chain& M : maximal_chains(Pi5.P)) {
        RibbonFilling F = filling_from_chain_labels(Pi5, lab, M, S);
        TabloidVector tau;
        tau.add(tabloid_of(F), 1);
        ChainVector lhs = chain_vector_from_tabloids(Pi5, tau, false);
        Chain rhs = restrict_chain_to_ranks(Pi5.P, M, S);
        REQUIRE(lhs.terms.size() == 1);
        CHECK(lhs.terms.begin()->first == rhs);
    }
}

TEST_CASE("boundary on fillings matches the d-and-d_fill example") {
    auto B7 = boolean_lattice(7);
    RibbonFilling F = filling_of(B7, ribbon_of({2, 5}, 7),
                                 {{1}, {2}, {3}, {4}, {5}, {6}, {7}});
    TabloidVector t;
    t.add(tabloid_of(F), 1);
    ChainVector v = chain_vector_from_tabloids(B7, t, false);
    REQUIRE(v.terms.size() == 1);
    ChainVector b = boundary_apply(v);
    Chain c15 = {0b11111};
    Chain c12 = {0b11};
    CHECK(b.terms.at(c15) == 1);
    CHECK(b.terms.at(c12) == -1);
    CHECK(b.terms.size() == 2);
}

TEST_CASE("reduced boundary of a single point is the empty face") {
    auto B3 = boolean_lattice(3);
    ChainVector v;
    v.add({1}, 1);
    ChainVector b = boundary_apply(v);
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms.at(Chain{}) == 1);
}

TEST_CASE("betti numbers: oracles") {
    auto B5 = boolean_lattice(5);
    CHECK(betti_top(B5, {2}) == 9);
    CHECK(betti_top(B5, {1, 4}) == 11);
    CHECK(betti_top(B5, {}) == 1);

    auto Pi4 = partition_lattice(4);
    CHECK(betti_top(Pi4, {1, 2}) == 6);
    long long b2 = betti_top(Pi4, {2});
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    CHECK(b2 == (long long)standard_nbc_plus_fillings(Pi4, ord, {2}).size());
}

TEST_CASE("do-have-cycles: every independent filling maps to a cycle") {
    auto Pi5 = partition_lattice(5);
    RankSet S = {1, 3};
    RibbonShape shape = ribbon_of(S, 4);
    int count = 0;
    std::vector<int> word;
    std::function<void()> rec = [&]() {
        if (word.size() == 4) {
            RibbonFilling F{shape, word};
            ChainVector v = chain_vector_from_tabloids(Pi5, polytabloid(F), false);
            CHECK(boundary_apply(v).is_zero());
            ++count;
            return;
        }
        for (int a = 0; a < Pi5.num_atoms(); ++a) {
            if (std::find(word.begin(), word.end(), a) != word.end()) continue;
            word.push_back(a);
            bool ok = true;
            try {
                prefix_join_chain(Pi5, word);
            } catch (...) {
                ok = false;
            }
            if (ok) rec();
            word.pop_back();
        }
    };
    rec();
    CHECK(count > 0);
}

TEST_CASE("ribbon basis for beta: verification on small lattices") {
    auto Pi4 = partition_lattice(4);
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    for (RankSet S : {RankSet{1}, RankSet{2}, RankSet{1, 2}}) {
        auto basis = ribbon_basis_beta(Pi4, ord, S);
        auto rep = verify_basis(basis, Pi4, ord, S);
        CHECK(rep.ok);
        CHECK(rep.betti == (long long)basis.size());
    }
    auto empty_basis = ribbon_basis_beta(Pi4, ord, {});
    REQUIRE(empty_basis.size() == 1);
    CHECK(empty_basis[0].chain_vec.terms.count(Chain{}) == 1);

    auto basis = ribbon_basis_beta(Pi4, ord, {2});
    basis.push_back(basis.back());
    CHECK_FALSE(verify_basis(basis, Pi4, ord, {2}).ok);
}

TEST_CASE("ribbon basis under a shuffled atom order still verifies") {
    auto Pi4 = partition_lattice(4);
    std::mt19937 rng(99);
    std::vector<int> o(Pi4.num_atoms());
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    auto ord = AtomOrder::from_order(o);
    for (RankSet S : {RankSet{1}, RankSet{2}, RankSet{1, 2}}) {
        auto basis = ribbon_basis_beta(Pi4, ord, S);
        CHECK(verify_basis(basis, Pi4, ord, S).ok);
    }
}

TEST_CASE("Whitney basis: the S={2,4} example of Pi_8") {
    auto Pi8 = partition_lattice(8);
    RibbonFilling F = filling_of(Pi8, ribbon_wh_of({2, 4}),
                                 {{1, 2}, {6, 7}, {4, 5}, {1, 8}});
    TabloidVector v = polytabloid(F);
    REQUIRE(v.num_terms() == 2);
    ChainVector cv = chain_vector_from_tabloids(Pi8, v, true);
    auto sp = [&](std::vector<std::vector<int>> blocks) {
        std::vector<int> seen(9, 0);
        for (auto& b : blocks)
            for (int x : b) seen[x] = 1;
        for (int x = 1; x <= 8; ++x)
            if (!seen[x]) blocks.push_back({x});
        return SetPartition::from_blocks(8, blocks);
    };
    Chain c1 = chain_of(Pi8, {sp({{1, 2}, {6, 7}}), sp({{1, 2, 8}, {6, 7}, {4, 5}})});
    Chain c2 = chain_of(Pi8, {sp({{1, 2}, {4, 5}}), sp({{1, 2, 8}, {6, 7}, {4, 5}})});
    REQUIRE(cv.terms.size() == 2);
    CHECK(cv.terms.at(c1) == 1);
    CHECK(cv.terms.at(c2) == -1);
    CHECK(boundary_apply(cv, /*fixed_top=*/true).is_zero());
}

TEST_CASE("Whitney basis dimensions") {
    auto Pi4 = partition_lattice(4);
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    auto W = ribbon_basis_wh(Pi4, ord, {1, 2});
    long long expect = 0;
    for (int u : Pi4.P.elements_of_rank(2)) {
        IntervalLattice I = lower_interval(Pi4, u);
        expect += betti_top(I.L, {1});
    }
    CHECK((long long)W.total_dim() == expect);

    auto W1 = ribbon_basis_wh(Pi4, ord, {2});
    CHECK(W1.total_dim() == Pi4.P.elements_of_rank(2).size());
    for (auto& [u, elems] : W1.by_element) {
        REQUIRE(elems.size() == 1);
        REQUIRE(elems[0].chain_vec.terms.size() == 1);
        CHECK(elems[0].chain_vec.terms.begin()->first.back() == u);
    }
}

TEST_CASE("equivariance: g . bar_f_chain(v_F) = bar_f_chain(v_{gF})") {
    auto Pi5 = partition_lattice(5);
    auto ord = AtomOrder::natural(Pi5.num_atoms());
    for (RankSet S : {RankSet{2}, RankSet{1, 3}}) {
        auto basis = ribbon_basis_beta(Pi5, ord, S);
        for (const Perm& g : coxeter_generators(5)) {
            for (auto& e : basis) {
                ChainVector lhs = act(Pi5.P, g, e.chain_vec);
                ChainVector rhs =
                    chain_vector_from_tabloids(Pi5, act(Pi5, g, e.tabloid_vec), false);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("summands of a basis element are pairwise distinct chains") {
    auto Pi5 = partition_lattice(5);
    auto ord = AtomOrder::natural(Pi5.num_atoms());
    for (RankSet S : {RankSet{1, 2}, RankSet{2, 3}, RankSet{1, 2, 3}}) {
        for (auto& e : ribbon_basis_beta(Pi5, ord, S)) {
            size_t col = 1;
            for (auto c : e.filling.shape.columns())
                for (size_t k = 2; k <= c.size(); ++k) col *= k;
            CHECK(e.chain_vec.terms.size() == col);
        }
    }
}

TEST_CASE("OS component dimensions and relations") {
    auto U23 = Matroid::uniform(2, 3);
    std::vector<int> ground_order = {0, 1, 2};
    CHECK(os_component(U23, ground_order, 1).dim() == 3);
    CHECK(os_component(U23, ground_order, 2).dim() == 2);

    auto K4 = Matroid::complete_graph(4);
    std::vector<int> g6 = {0, 1, 2, 3, 4, 5};
    auto Pi4 = partition_lattice(4);
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    for (int i = 1; i <= 3; ++i) {
        RankSet S;
        for (int k = 1; k <= i; ++k) S.push_back(k);
        auto W = ribbon_basis_wh(Pi4, ord, S);
        CHECK(os_component(K4, g6, i).dim() == (long long)W.total_dim());
    }

    auto Pi3 = partition_lattice(3);
    auto rep3 = verify_os_relations(Pi3, AtomOrder::natural(3));
    CHECK(rep3.ok);
    CHECK(rep3.circuits_checked == 1);

    auto rep4 = verify_os_relations(Pi4, AtomOrder::natural(Pi4.num_atoms()));
    CHECK(rep4.ok);
    CHECK(rep4.circuits_checked > 1);
    CHECK(rep4.straightenings_checked > 0);
}

TEST_CASE("action matrix trace at a transposition on Pi_4") {
    auto Pi4 = partition_lattice(4);
    auto ord = AtomOrder::natural(Pi4.num_atoms());
    auto basis = ribbon_basis_beta(Pi4, ord, {2});
    Perm g = transposition(4, 0, 1);
    auto M = action_matrix(Pi4.P, basis, g);
    Rat trace = 0;
    for (size_t i = 0; i < M.size(); ++i) trace += M[i][i];
    // trace on beta_{2} at a transposition: alpha_{2} fixed count minus 1
    // ((12)-fixed rank-2 elements of Pi_4: |12|34|, |123|, |124| -> 3)
    CHECK(trace == Rat(3 - 1));
}

TEST_CASE("do-have-cycles across rank sets and sampled large instances") {
    // exhaustive on Pi_4 for every nonempty S
    {
        auto Pi4 = partition_lattice(4);
        for (RankSet S : {RankSet{1}, RankSet{2}, RankSet{1, 2}}) {
            RibbonShape shape = ribbon_of(S, 3);
            std::vector<int> word;
            std::function<void()> rec = [&]() {
                if (word.size() == 3) {
                    RibbonFilling F{shape, word};
                    CHECK(boundary_apply(
                              chain_vector_from_tabloids(Pi4, polytabloid(F), false))
                              .is_zero());
                    return;
                }
                for (int a = 0; a < Pi4.num_atoms(); ++a) {
                    if (std::find(word.begin(), word.end(), a) != word.end()) continue;
                    word.push_back(a);
                    bool ok = true;
                    try {
                        prefix_join_chain(Pi4, word);
                    } catch (...) {
                        ok = false;
                    }
                    if (ok) rec();
                    word.pop_back();
                }
            };
            rec();
        }
    }
    // sampled independent fillings of Pi_6 and B_6
    std::mt19937 rng(314);
    for (auto make : {+[]() { return partition_lattice(6); },
                      +[]() { return boolean_lattice(6); }}) {
        Lattice L = make();
        int r = L.P.top_rank();
        RankSet S = {1, 3};
        if (r > 4) S.push_back(r - 1);
        RibbonShape shape = ribbon_of(S, r);
        int found = 0;
        while (found < 25) {
            std::vector<int> word;
            std::set<int> used;
            bool ok = true;
            for (int k = 0; k < r && ok; ++k) {
                int tries = 0;
                while (true) {
                    int a = (int)(rng() % L.num_atoms());
                    if (used.count(a)) {
                        if (++tries > 200) {
                            ok = false;
                            break;
                        }
                        continue;
                    }
                    std::vector<int> next = word;
                    next.push_back(a);
                    try {
                        prefix_join_chain(L, next);
                    } catch (...) {
                        if (++tries > 200) {
                            ok = false;
                            break;
                        }
                        continue;
                    }
                    word = next;
                    used.insert(a);
                    break;
                }
            }
            if (!ok || (int)word.size() != r) continue;
            ++found;
            RibbonFilling F{shape, word};
            CHECK(boundary_apply(chain_vector_from_tabloids(L, polytabloid(F), false))
                      .is_zero());
        }
    }
}

TEST_CASE("column-pair annihilation sweep on Pi_6") {
    // whenever a Whitney filling has two same-column boxes with disjoint
    // pair atoms whose letters appear nowhere else, the one-row symmetrizer
    // on all letters kills the polytabloid
    auto Pi6 = partition_lattice(6);
    auto ord = AtomOrder::natural(Pi6.num_atoms());
    std::vector<int> letters = {1, 2, 3, 4, 5, 6};
    YoungTableau T{{6}, {letters}};
    int instances = 0;
    for (RankSet S : {RankSet{1, 2}, RankSet{1, 3}, RankSet{2, 3}, RankSet{1, 2, 3}}) {
        auto W = ribbon_basis_wh(Pi6, ord, S);
        for (auto& [u, elems] : W.by_element) {
            for (auto& e : elems) {
                auto cols = e.filling.shape.columns();
                for (auto& col : cols) {
                    for (size_t a = 0; a + 1 < col.size(); ++a) {
                        int b1 = col[a], b2 = col[a + 1];
                        auto l1 = Pi6.atom_letters[e.filling.word[b1]];
                        auto l2 = Pi6.atom_letters[e.filling.word[b2]];
                        std::set<int> four(l1.begin(), l1.end());
                        four.insert(l2.begin(), l2.end());
                        if (four.size() != 4) continue;
                        bool elsewhere = false;
                        for (size_t b = 0; b < e.filling.word.size(); ++b) {
                            if ((int)b == b1 || (int)b == b2) continue;
                            for (int l : Pi6.atom_letters[e.filling.word[b]])
                                if (four.count(l)) elsewhere = true;
                        }
                        if (elsewhere) continue;
                        CHECK(young_symmetrizer_apply(Pi6, T, e.tabloid_vec).is_zero());
                        ++instances;
                    }
                }
            }
        }
    }
    CHECK(instances > 0);
}

TEST_CASE("polytabloid sign rule on sampled standard fillings") {
    auto Pi5 = partition_lattice(5);
    auto ord = AtomOrder::natural(Pi5.num_atoms());
    for (RankSet S : {RankSet{1, 2}, RankSet{2, 3}}) {
        for (auto& F : standard_nbc_plus_fillings(Pi5, ord, S)) {
            TabloidVector v = polytabloid(F);
            auto cols = F.shape.columns();
            for (auto& col : cols) {
                if (col.size() < 2) continue;
                // swap the contents of two stacked boxes when the four
                // letters are disjoint: a column-group element, sign -1
                auto l1 = Pi5.atom_letters[F.word[col[0]]];
                auto l2 = Pi5.atom_letters[F.word[col[1]]];
                std::set<int> four(l1.begin(), l1.end());
                four.insert(l2.begin(), l2.end());
                if (four.size() != 4) continue;
                Perm g = identity_perm(5);
                g[l1[0] - 1] = l2[0] - 1;
                g[l2[0] - 1] = l1[0] - 1;
                g[l1[1] - 1] = l2[1] - 1;
                g[l2[1] - 1] = l1[1] - 1;
                // the swap must fix every other entry of the filling
                bool clean = true;
                for (size_t b = 0; b < F.word.size(); ++b) {
                    if ((int)b == col[0] || (int)b == col[1]) continue;
                    for (int l : Pi5.atom_letters[F.word[b]])
                        if (four.count(l)) clean = false;
                }
                if (!clean) continue;
                CHECK(act(Pi5, g, v) == -v);
            }
        }
    }
}
