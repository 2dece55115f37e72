#include "latticehom/shelling.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace latticehom {

static int min_atom_in_mask(const AtomOrder& ord, uint64_t mask) {
    for (int apos : ord.order)
        if (mask & (1ull << apos)) return apos;
    return -1;
}

std::vector<int> EdgeLabeling::order_positions(const std::vector<int>& word) const {
    std::vector<int> out;
    for (int a : word) out.push_back(ord.pos_in_order[a]);
    return out;
}

EdgeLabeling minimal_labeling(const Lattice& L, const AtomOrder& ord) {
    EdgeLabeling lab;
    lab.ord = ord;
    for (auto [u, v] : L.P.covers) {
        uint64_t diff = L.atoms_below[v] & ~L.atoms_below[u];
        int a = min_atom_in_mask(ord, diff);
        if (a < 0)
            throw std::domain_error("minimal_labeling: cover with no new atom "
                                    "below the upper element (lattice not atomic)");
        lab.label[{u, v}] = a;
    }
    return lab;
}

std::vector<int> label_word(const EdgeLabeling& lab, const Chain& chain) {
    std::vector<int> w;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        w.push_back(lab(chain[i], chain[i + 1]));
    return w;
}

ELReport verify_el_labeling(const Lattice& L, const EdgeLabeling& lab) {
    ELReport rep;
    const GradedPoset& P = L.P;
    for (int x = 0; x < P.num_elements(); ++x) {
        for (int y = 0; y < P.num_elements(); ++y) {
            if (P.rank_of[y] <= P.rank_of[x] + 1) continue;
            if (!P.leq(x, y)) continue;
            auto chains = saturated_chains(P, x, y);
            std::vector<std::vector<int>> words;
            for (auto& c : chains)
                words.push_back(lab.order_positions(label_word(lab, c)));
            int ascending = 0, asc_idx = -1;
            for (size_t i = 0; i < words.size(); ++i) {
                if (std::is_sorted(words[i].begin(), words[i].end())) {
                    ++ascending;
                    asc_idx = (int)i;
                }
            }
            if (ascending != 1) {
                std::ostringstream os;
                os << ascending << " weakly ascending chains in ["
                   << P.labels[x] << ", " << P.labels[y] << "]";
                rep.violations.push_back({x, y, os.str()});
                continue;
            }
            for (size_t i = 0; i < words.size(); ++i) {
                if ((int)i == asc_idx) continue;
                if (!(words[asc_idx] < words[i])) {
                    std::ostringstream os;
                    os << "ascending chain not lexicographically first in ["
                       << P.labels[x] << ", " << P.labels[y] << "]";
                    rep.violations.push_back({x, y, os.str()});
                    break;
                }
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

Chain prefix_join_chain(const Lattice& L, const std::vector<int>& word) {
    Chain c;
    int x = L.P.bottom;
    for (int apos : word) {
        if (apos < 0 || apos >= L.num_atoms())
            throw std::invalid_argument("reading word has an invalid atom");
        int y = L.P.join2(x, L.atoms[apos]);
        if (L.P.rank_of[y] != L.P.rank_of[x] + 1)
            throw std::invalid_argument("reading word is dependent");
        c.push_back(y);
        x = y;
    }
    return c;
}

Chain chain_from_reading_word(const Lattice& L, const std::vector<int>& word) {
    if ((int)word.size() != L.P.top_rank())
        throw std::invalid_argument("reading word is rank deficient");
    Chain c = prefix_join_chain(L, word);
    Chain full;
    full.push_back(L.P.bottom);
    full.insert(full.end(), c.begin(), c.end());
    if (full.back() != L.P.top)
        throw std::invalid_argument("reading word does not reach the top");
    return full;
}

RibbonFilling filling_from_chain_labels(const Lattice& L, const EdgeLabeling& lab,
                                        const Chain& maximal, const RankSet& S) {
    RibbonFilling F;
    F.shape = ribbon_of(S, L.P.top_rank());
    F.word = label_word(lab, maximal);
    if ((int)F.word.size() != F.shape.size())
        throw std::invalid_argument("chain is not maximal");
    return F;
}

Chain lex_first_containing_chain(const Lattice& L, const AtomOrder& ord,
                                 const Chain& middle) {
    Chain full;
    full.push_back(L.P.bottom);
    int x = L.P.bottom;
    auto walk_up = [&](int target) {
        while (x != target) {
            uint64_t diff = L.atoms_below[target] & ~L.atoms_below[x];
            int a = min_atom_in_mask(ord, diff);
            if (a < 0) throw std::logic_error("no atom towards target");
            int y = L.P.join2(x, L.atoms[a]);
            if (L.P.rank_of[y] != L.P.rank_of[x] + 1 || !L.P.leq(y, target))
                throw std::logic_error("ascending step left the interval");
            full.push_back(y);
            x = y;
        }
    };
    for (int m : middle) walk_up(m);
    walk_up(L.P.top);
    return full;
}

bool is_nbc_independent(const Lattice& L, const AtomOrder& ord, uint64_t atom_mask) {
    int x = L.join_atom_mask(atom_mask);
    if (L.P.rank_of[x] != std::popcount(atom_mask)) return false;
    uint64_t outside = L.atoms_below[x] & ~atom_mask;
    if (outside == 0) return true;
    int min_member = min_atom_in_mask(ord, atom_mask);
    int min_outside = min_atom_in_mask(ord, outside);
    // violation: an outside atom below the join precedes every member
    if (min_member < 0) return min_outside < 0;
    return !(ord.pos_in_order[min_outside] < ord.pos_in_order[min_member]);
}

bool is_nbc_plus(const Lattice& L, const AtomOrder& ord, const std::vector<int>& word) {
    if ((int)word.size() != L.P.top_rank()) return false;
    uint64_t mask = 0;
    for (int a : word) {
        if (a < 0 || a >= L.num_atoms()) return false;
        if (mask & (1ull << a)) return false;
        mask |= 1ull << a;
    }
    if (!is_nbc_independent(L, ord, mask)) return false;
    int x = L.P.bottom;
    for (int a : word) {
        int y = L.P.join2(x, L.atoms[a]);
        if (L.P.rank_of[y] != L.P.rank_of[x] + 1) return false;
        uint64_t diff = L.atoms_below[y] & ~L.atoms_below[x];
        if (min_atom_in_mask(ord, diff) != a) return false;
        x = y;
    }
    return true;
}

std::vector<RibbonFilling> standard_nbc_plus_fillings(const Lattice& L,
                                                      const AtomOrder& ord,
                                                      const RankSet& S) {
    if (!S.empty()) check_rank_set(L.P, S);
    EdgeLabeling lab = minimal_labeling(L, ord);
    std::vector<RibbonFilling> out;
    for (const Chain& M : maximal_chains(L.P)) {
        RibbonFilling F = filling_from_chain_labels(L, lab, M, S);
        if (is_standard(F, ord)) out.push_back(F);
    }
    return out;
}

}  // namespace latticehom
