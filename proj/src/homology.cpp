#include "latticehom/homology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latticehom {

void ChainVector::add(const Chain& c, const Rat& v) {
    if (v == 0) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
        terms.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) terms.erase(it);
    }
}

ChainVector& ChainVector::operator+=(const ChainVector& o) {
    for (auto& [c, v] : o.terms) add(c, v);
    return *this;
}

ChainVector ChainVector::operator-() const {
    ChainVector out;
    for (auto& [c, v] : terms) out.terms.emplace(c, -v);
    return out;
}

Chain chain_of_tabloid(const Lattice& L, const Tabloid& t, bool keep_final) {
    Chain chain;
    int x = L.P.bottom;
    size_t total = 0;
    for (const auto& row : t.rows) {
        for (int apos : row) x = L.P.join2(x, L.atoms[apos]);
        total += row.size();
        if ((size_t)L.P.rank_of[x] != total)
            throw std::invalid_argument("tabloid entry set is dependent");
        chain.push_back(x);
    }
    if (!keep_final && !chain.empty()) chain.pop_back();
    return chain;
}

ChainVector chain_vector_from_tabloids(const Lattice& L, const TabloidVector& v,
                                       bool keep_final) {
    ChainVector out;
    for (auto& [t, c] : v.terms) out.add(chain_of_tabloid(L, t, keep_final), c);
    return out;
}

ChainVector boundary_apply(const ChainVector& v, bool fixed_top) {
    ChainVector out;
    for (auto& [chain, coeff] : v.terms) {
        size_t deletable = chain.size() - (fixed_top ? 1 : 0);
        for (size_t i = 0; i < deletable; ++i) {
            Chain sub;
            for (size_t k = 0; k < chain.size(); ++k)
                if (k != i) sub.push_back(chain[k]);
            out.add(sub, (i % 2 == 0) ? coeff : -coeff);
        }
    }
    return out;
}

ChainVector act(const GradedPoset& P, const Perm& g, const ChainVector& v) {
    ChainVector out;
    for (auto& [chain, coeff] : v.terms) {
        Chain img = chain;
        for (auto& x : img) x = P.act(g, x);
        out.add(img, coeff);
    }
    return out;
}

long long betti_top(const Lattice& L, const RankSet& S, const HomologyGuards& g) {
    if (S.empty()) return 1;
    check_rank_set(L.P, S);
    auto facets = chains_with_rank_set(L.P, S);
    if (facets.size() > g.max_facets)
        throw std::domain_error("betti_top: facet count exceeds guard");
    if (facets.empty()) return 0;

    std::map<Chain, int> row_index;
    SparseMatrixQ d;
    d.ncols = (int)facets.size();
    for (int j = 0; j < (int)facets.size(); ++j) {
        const Chain& f = facets[j];
        for (size_t i = 0; i < f.size(); ++i) {
            Chain sub;
            for (size_t k = 0; k < f.size(); ++k)
                if (k != i) sub.push_back(f[k]);
            auto [it, fresh] = row_index.try_emplace(sub, (int)row_index.size());
            d.add(it->second, j, (i % 2 == 0) ? Rat(1) : Rat(-1));
        }
    }
    d.nrows = (int)row_index.size();
    return (long long)facets.size() - sparse_rank(d);
}

std::vector<BasisElement> ribbon_basis_beta(const Lattice& L, const AtomOrder& ord,
                                            const RankSet& S) {
    std::vector<BasisElement> out;
    for (const RibbonFilling& F : standard_nbc_plus_fillings(L, ord, S)) {
        BasisElement e;
        e.filling = F;
        e.tabloid_vec = polytabloid(F);
        e.chain_vec = chain_vector_from_tabloids(L, e.tabloid_vec, false);
        out.push_back(std::move(e));
    }
    return out;
}

size_t WhitneyBasis::total_dim() const {
    size_t s = 0;
    for (auto& [u, v] : by_element) s += v.size();
    return s;
}

WhitneyBasis ribbon_basis_wh(const Lattice& L, const AtomOrder& ord, const RankSet& S) {
    // Whitney rank sets may reach the full rank (u = top)
    if (S.empty()) throw std::invalid_argument("ribbon_basis_wh: S must be nonempty");
    RankSet head(S.begin(), S.end() - 1);
    if (!head.empty()) check_rank_set(L.P, head);
    if (S.back() > L.P.top_rank() || (!head.empty() && head.back() >= S.back()))
        throw std::invalid_argument("ribbon_basis_wh: bad rank set");
    WhitneyBasis W;
    RankSet body(S.begin(), S.end() - 1);
    for (int u : L.P.elements_of_rank(S.back())) {
        IntervalLattice I = lower_interval(L, u);
        // induced atom order on the interval
        std::vector<int> sub_order;
        for (int apos : ord.order) {
            for (size_t k = 0; k < I.atom_pos_in_ambient.size(); ++k)
                if (I.atom_pos_in_ambient[k] == apos) sub_order.push_back((int)k);
        }
        AtomOrder iord = AtomOrder::from_order(sub_order);
        std::vector<BasisElement> elems;
        for (const RibbonFilling& F : standard_nbc_plus_fillings(I.L, iord, body)) {
            BasisElement e;
            e.filling.shape = F.shape;
            for (int a : F.word) e.filling.word.push_back(I.atom_pos_in_ambient[a]);
            e.tabloid_vec = polytabloid(e.filling);
            e.chain_vec = chain_vector_from_tabloids(L, e.tabloid_vec, true);
            elems.push_back(std::move(e));
        }
        W.by_element[u] = std::move(elems);
    }
    return W;
}

std::vector<Chain> homology_facets(const Lattice& L, const AtomOrder& ord,
                                   const RankSet& S) {
    std::vector<Chain> out;
    EdgeLabeling lab = minimal_labeling(L, ord);
    for (const Chain& gamma : chains_with_rank_set(L.P, S)) {
        Chain full = lex_first_containing_chain(L, ord, gamma);
        RibbonFilling F = filling_from_chain_labels(L, lab, full, S);
        if (is_standard(F, ord)) out.push_back(gamma);
    }
    return out;
}

BasisReport verify_basis(const std::vector<BasisElement>& vectors, const Lattice& L,
                         const AtomOrder& ord, const RankSet& S,
                         const HomologyGuards& g) {
    BasisReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    for (size_t i = 0; i < vectors.size(); ++i) {
        if (!boundary_apply(vectors[i].chain_vec).is_zero()) {
            std::ostringstream os;
            os << "vector " << i << " is not a cycle";
            fail(os.str());
        }
    }

    // Homology facet incidence must be unitriangular in the shelling order:
    // each vector carries its own facet with coefficient +1, and any foreign
    // facet in its support belongs to a lexicographically earlier standard
    // filling.  (The strict delta_ij form fails for sparse rank sets, where
    // distinct tabloids can select identical chains.)
    auto facets = homology_facets(L, ord, S);
    std::set<Chain> facet_set(facets.begin(), facets.end());
    if (facets.size() != vectors.size()) fail("facet count differs from vector count");
    std::map<Chain, size_t> owner;
    std::vector<Chain> own_facet(vectors.size());
    std::vector<std::vector<int>> lexword(vectors.size());
    for (size_t i = 0; i < vectors.size(); ++i) {
        own_facet[i] = chain_of_tabloid(L, tabloid_of(vectors[i].filling), false);
        lexword[i] = ord.positions(vectors[i].filling.word);
        if (!facet_set.count(own_facet[i])) {
            std::ostringstream os;
            os << "vector " << i << " has no homology facet of its own";
            fail(os.str());
            continue;
        }
        if (!owner.emplace(own_facet[i], i).second) {
            std::ostringstream os;
            os << "vector " << i << " repeats a homology facet";
            fail(os.str());
        }
    }
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (auto& [c, v] : vectors[i].chain_vec.terms) {
            if (!facet_set.count(c)) continue;
            if (c == own_facet[i]) {
                if (v != 1) {
                    std::ostringstream os;
                    os << "vector " << i << " carries its facet with coefficient "
                       << to_string(v);
                    fail(os.str());
                }
            } else {
                auto it = owner.find(c);
                if (it == owner.end() || !(lexword[it->second] < lexword[i])) {
                    std::ostringstream os;
                    os << "vector " << i
                       << " meets a foreign facet that is not earlier in the "
                          "shelling order";
                    fail(os.str());
                }
            }
        }
    }

    // exact rank of the vectors over the chain space
    std::map<Chain, int> row_index;
    SparseMatrixQ mat;
    mat.ncols = (int)vectors.size();
    for (int j = 0; j < (int)vectors.size(); ++j)
        for (auto& [c, v] : vectors[j].chain_vec.terms) {
            auto [it, fresh] = row_index.try_emplace(c, (int)row_index.size());
            mat.add(it->second, j, v);
        }
    mat.nrows = (int)row_index.size();
    rep.rank = sparse_rank(mat);
    rep.betti = betti_top(L, S, g);
    if (rep.rank != (long long)vectors.size())
        fail("vectors are linearly dependent");
    if (rep.rank != rep.betti) fail("rank differs from the Betti number");
    return rep;
}

std::vector<uint64_t> lattice_circuits(const Lattice& L) {
    int na = L.num_atoms();
    std::vector<uint64_t> out;
    auto independent = [&](uint64_t mask) {
        return L.P.rank_of[L.join_atom_mask(mask)] == std::popcount(mask);
    };
    // minimal dependent sets have size <= rank + 1
    int maxsz = L.P.top_rank() + 1;
    std::function<void(int, int, uint64_t)> rec = [&](int start, int size, uint64_t mask) {
        if (size > 0 && !independent(mask)) {
            // minimal iff every proper subset obtained by deleting one is independent
            bool minimal = true;
            for (int a = 0; a < na && minimal; ++a)
                if ((mask >> a) & 1)
                    if (!independent(mask & ~(1ull << a))) minimal = false;
            if (minimal) out.push_back(mask);
            return;  // supersets of dependent sets are never circuits
        }
        if (size == maxsz) return;
        for (int a = start; a < na; ++a) rec(a + 1, size + 1, mask | (1ull << a));
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

OSComponent os_component(const Matroid& m, const std::vector<int>& ground_order, int i) {
    if (i > m.rk) throw std::invalid_argument("os_component: degree exceeds rank");
    std::vector<int> pos(m.m, -1);
    for (size_t k = 0; k < ground_order.size(); ++k) pos[ground_order[k]] = (int)k;
    OSComponent comp;
    comp.degree = i;
    comp.circuits = m.circuits;
    // broken circuits: circuit minus its least element in the order
    std::vector<uint32_t> broken;
    for (uint32_t C : m.circuits) {
        int least = -1;
        for (int e : ground_order)
            if (C & (1u << e)) {
                least = e;
                break;
            }
        broken.push_back(C & ~(1u << least));
    }
    for (uint32_t X = 0; X < (1u << m.m); ++X) {
        if (std::popcount(X) != i) continue;
        if (!m.independent(X)) continue;
        bool nbc = true;
        for (uint32_t B : broken)
            if ((B & X) == B) {
                nbc = false;
                break;
            }
        if (nbc) comp.monomials.push_back(X);
    }
    return comp;
}

namespace {

// single-column filling from a word (one box per row)
RibbonFilling column_filling(const std::vector<int>& word) {
    RibbonFilling F;
    F.shape.rows.assign(word.size(), 1);
    F.word = word;
    return F;
}

bool word_independent(const Lattice& L, const std::vector<int>& word) {
    uint64_t mask = 0;
    for (int a : word) mask |= 1ull << a;
    return L.P.rank_of[L.join_atom_mask(mask)] == std::popcount(mask);
}

}  // namespace

OSRelationReport verify_os_relations(const Lattice& L, const AtomOrder& ord,
                                     int max_extra) {
    OSRelationReport rep;
    auto circuits = lattice_circuits(L);
    auto desc_sorted = [&](uint64_t mask) {
        std::vector<int> v;
        for (int a = 0; a < L.num_atoms(); ++a)
            if ((mask >> a) & 1) v.push_back(a);
        std::sort(v.begin(), v.end(),
                  [&](int x, int y) { return ord.pos_in_order[x] > ord.pos_in_order[y]; });
        return v;
    };

    for (uint64_t C : circuits) {
        std::vector<int> atoms_desc = desc_sorted(C);
        ChainVector sum;
        for (size_t s = 0; s < atoms_desc.size(); ++s) {
            std::vector<int> word;
            for (size_t k = 0; k < atoms_desc.size(); ++k)
                if (k != s) word.push_back(atoms_desc[k]);
            TabloidVector v = polytabloid(column_filling(word));
            ChainVector cv = chain_vector_from_tabloids(L, v, true);
            if (s % 2 == 1) cv = -cv;
            sum += cv;
        }
        ++rep.circuits_checked;
        if (!sum.is_zero()) {
            rep.ok = false;
            std::ostringstream os;
            os << "circuit relation fails for {";
            for (int a : atoms_desc) os << " " << L.atom_name(a);
            os << " }";
            rep.failures.push_back(os.str());
        }
    }

    // Generalized straightening: adjoin an independent atom to a circuit,
    // hold its slot fixed across all omissions (the slot it occupies in the
    // word omitting the smallest circuit element), and fill the remaining
    // slots with the surviving circuit atoms in descending order.
    for (uint64_t C : circuits) {
        for (int extra = 1; extra <= max_extra; ++extra) {
            if (extra > 1) break;  // one extra atom suffices at desk scale
            for (int a = 0; a < L.num_atoms(); ++a) {
                if ((C >> a) & 1) continue;
                uint64_t X = C | (1ull << a);
                if (std::popcount(X) > L.P.top_rank() + 1) continue;
                std::vector<int> circ = desc_sorted(C);
                std::vector<int> ref = desc_sorted(X & ~(1ull << circ.back()));
                size_t nslots = ref.size();
                size_t extra_slot = std::find(ref.begin(), ref.end(), a) - ref.begin();
                bool usable = true;
                std::vector<std::pair<std::vector<int>, int>> words;
                for (size_t s = 0; s < circ.size(); ++s) {
                    std::vector<int> rest;
                    for (size_t k = 0; k < circ.size(); ++k)
                        if (k != s) rest.push_back(circ[k]);  // stays descending
                    std::vector<int> word(nslots, -1);
                    word[extra_slot] = a;
                    size_t next = 0;
                    for (size_t slot = 0; slot < nslots; ++slot)
                        if (word[slot] < 0) word[slot] = rest[next++];
                    if (!word_independent(L, word)) {
                        usable = false;
                        break;
                    }
                    words.push_back({word, (s % 2 == 0) ? 1 : -1});
                }
                if (!usable) continue;
                ChainVector sum;
                for (auto& [word, sign] : words) {
                    TabloidVector v = polytabloid(column_filling(word));
                    ChainVector cv = chain_vector_from_tabloids(L, v, true);
                    if (sign < 0) cv = -cv;
                    sum += cv;
                }
                ++rep.straightenings_checked;
                if (!sum.is_zero()) {
                    rep.ok = false;
                    std::ostringstream os;
                    os << "generalized straightening fails for circuit with extra atom "
                       << L.atom_name(a);
                    rep.failures.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<Rat>> action_matrix(const GradedPoset& P,
                                            const std::vector<BasisElement>& basis,
                                            const Perm& g) {
    std::map<Chain, int> key;
    auto densify = [&](const ChainVector& v) {
        std::map<int, Rat> out;
        for (auto& [c, coeff] : v.terms) {
            auto [it, fresh] = key.try_emplace(c, (int)key.size());
            out[it->second] = coeff;
        }
        return out;
    };
    std::vector<std::map<int, Rat>> cols;
    for (auto& b : basis) cols.push_back(densify(b.chain_vec));
    std::vector<std::vector<Rat>> M(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
    for (size_t j = 0; j < basis.size(); ++j) {
        ChainVector gv = act(P, g, basis[j].chain_vec);
        auto rhs = densify(gv);
        auto sol = express_in_span(cols, rhs);
        if (!sol)
            throw std::logic_error("acted basis vector leaves the span of the basis");
        for (size_t i = 0; i < basis.size(); ++i) M[i][j] = (*sol)[i];
    }
    return M;
}

}  // namespace latticehom
