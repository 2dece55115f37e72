#include "latticehom/lattices.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latticehom {

// ---------------------------------------------------------------- SetPartition

SetPartition SetPartition::discrete(int n) {
    SetPartition u;
    u.n = n;
    u.block_of.resize(n);
    std::iota(u.block_of.begin(), u.block_of.end(), 0);
    return u;
}

static void canonicalize_rgs(std::vector<uint8_t>& b) {
    std::vector<int> remap(b.size(), -1);
    int next = 0;
    for (auto& x : b) {
        if (remap[x] < 0) remap[x] = next++;
        x = (uint8_t)remap[x];
    }
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    SetPartition u;
    u.n = n;
    u.block_of.assign(n, 255);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int letter : blocks[b]) {
            if (letter < 1 || letter > n || u.block_of[letter - 1] != 255)
                throw std::invalid_argument("bad block data");
            u.block_of[letter - 1] = (uint8_t)b;
        }
    for (auto x : u.block_of)
        if (x == 255) throw std::invalid_argument("blocks do not cover {1..n}");
    canonicalize_rgs(u.block_of);
    return u;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(num_blocks());
    for (int i = 0; i < n; ++i) out[block_of[i]].push_back(i + 1);
    return out;
}

int SetPartition::num_blocks() const {
    int mx = -1;
    for (auto x : block_of) mx = std::max(mx, (int)x);
    return mx + 1;
}

IntPartition SetPartition::type() const {
    std::vector<int> sizes(num_blocks(), 0);
    for (auto x : block_of) sizes[x]++;
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool SetPartition::refines(const SetPartition& other) const {
    // every block of *this lies inside a single block of other
    std::vector<int> image(num_blocks(), -1);
    for (int i = 0; i < n; ++i) {
        int b = block_of[i], c = other.block_of[i];
        if (image[b] < 0) image[b] = c;
        else if (image[b] != c) return false;
    }
    return true;
}

SetPartition SetPartition::merge_blocks(int b1, int b2) const {
    SetPartition v = *this;
    for (auto& x : v.block_of)
        if (x == b2) x = (uint8_t)b1;
    canonicalize_rgs(v.block_of);
    return v;
}

SetPartition SetPartition::relabel(const Perm& g) const {
    SetPartition v;
    v.n = n;
    v.block_of.resize(n);
    for (int i = 0; i < n; ++i) v.block_of[g[i]] = block_of[i];
    canonicalize_rgs(v.block_of);
    return v;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    auto bl = blocks();
    for (size_t b = 0; b < bl.size(); ++b) {
        if (b) os << "|";
        for (size_t i = 0; i < bl[b].size(); ++i) {
            if (i) os << ".";
            os << bl[b][i];
        }
    }
    return os.str();
}

// ------------------------------------------------------------------- Lattice

int Lattice::atom_pos_of_element(int elem) const {
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == elem) return (int)i;
    return -1;
}

int Lattice::join_atom_mask(uint64_t amask) const {
    int x = P.bottom;
    for (int i = 0; i < num_atoms(); ++i)
        if (amask & (1ull << i)) x = P.join2(x, atoms[i]);
    return x;
}

int Lattice::act_atom(const Perm& g, int apos) const {
    std::vector<int> letters = atom_letters[apos];
    for (auto& l : letters) l = g[l - 1] + 1;
    std::sort(letters.begin(), letters.end());
    auto it = atom_pos_of_letters.find(letters);
    if (it == atom_pos_of_letters.end())
        throw std::logic_error("atom image not found under letter action");
    return it->second;
}

const SetPartition& Lattice::set_partition_of(int elem) const {
    return pi_elements->at(elem);
}

int Lattice::element_of_set_partition(const SetPartition& u) const {
    auto it = pi_index->find(u);
    if (it == pi_index->end()) throw std::logic_error("set partition not in lattice");
    return it->second;
}

void Lattice::finalize_atoms() {
    if (num_atoms() > 64)
        throw std::domain_error("more than 64 atoms: beyond desk-scale shelling ops");
    atoms_below.assign(P.num_elements(), 0);
    for (int i = 0; i < num_atoms(); ++i)
        for (int x = 0; x < P.num_elements(); ++x)
            if (P.leq(atoms[i], x)) atoms_below[x] |= (1ull << i);
    atom_pos_of_letters.clear();
    for (size_t i = 0; i < atom_letters.size(); ++i)
        if (!atom_letters[i].empty()) atom_pos_of_letters[atom_letters[i]] = (int)i;
}

// ------------------------------------------------------------------ Boolean

static std::string subset_label(uint32_t mask, int n) {
    if (mask == 0) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

Lattice boolean_lattice(int n, const LatticeGuards& g) {
    if (n < 1 || (g.enforce && n > g.boolean_max_n))
        throw std::invalid_argument("boolean_lattice: n out of guard range");
    Lattice L;
    GradedPoset& P = L.P;
    uint32_t N = 1u << n;
    for (uint32_t m = 0; m < N; ++m) {
        P.labels.push_back(subset_label(m, n));
        P.rank_of.push_back(std::popcount(m));
    }
    for (uint32_t m = 0; m < N; ++m)
        for (int i = 0; i < n; ++i)
            if (!(m & (1u << i))) P.covers.push_back({(int)m, (int)(m | (1u << i))});
    P.leq_hint = [](int x, int y) { return ((uint32_t)x & (uint32_t)y) == (uint32_t)x; };
    P.join_hint = [](int x, int y) { return (int)((uint32_t)x | (uint32_t)y); };
    P.n_letters = n;
    P.action = [n](const Perm& p, int x) {
        uint32_t out = 0;
        for (int i = 0; i < n; ++i)
            if ((uint32_t)x & (1u << i)) out |= (1u << p[i]);
        return (int)out;
    };
    P.finalize();
    for (int i = 0; i < n; ++i) {
        L.atoms.push_back(1 << i);
        L.atom_letters.push_back({i + 1});
    }
    L.finalize_atoms();
    return L;
}

// ---------------------------------------------------------------- Partition

Lattice partition_lattice(int n, const LatticeGuards& g) {
    if (n < 2 || (g.enforce && n > g.partition_max_n))
        throw std::invalid_argument("partition_lattice: n out of guard range");
    Lattice L;
    GradedPoset& P = L.P;

    // enumerate restricted growth strings in lexicographic order
    auto elements = std::make_shared<std::vector<SetPartition>>();
    auto index = std::make_shared<std::map<SetPartition, int>>();
    std::vector<uint8_t> rgs(n, 0);
    std::function<void(int, int)> gen = [&](int i, int maxb) {
        if (i == n) {
            SetPartition u;
            u.n = n;
            u.block_of = rgs;
            (*index)[u] = (int)elements->size();
            elements->push_back(std::move(u));
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = (uint8_t)b;
            gen(i + 1, std::max(maxb, b));
        }
    };
    gen(0, -1);
    L.pi_elements = elements;
    L.pi_index = index;

    for (const auto& u : *elements) {
        P.labels.push_back(u.to_string());
        P.rank_of.push_back(u.rank());
    }
    for (size_t id = 0; id < elements->size(); ++id) {
        const auto& u = (*elements)[id];
        int nb = u.num_blocks();
        for (int b1 = 0; b1 < nb; ++b1)
            for (int b2 = b1 + 1; b2 < nb; ++b2) {
                int vid = index->at(u.merge_blocks(b1, b2));
                P.covers.push_back({(int)id, vid});
            }
    }
    {
        auto elems = elements;
        P.leq_hint = [elems](int x, int y) {
            return (*elems)[x].refines((*elems)[y]);
        };
        auto idx = index;
        P.join_hint = [elems, idx, n](int x, int y) {
            // union-find on letters
            const auto& a = (*elems)[x];
            const auto& b = (*elems)[y];
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            auto unite = [&](int p, int q) { parent[find(p)] = find(q); };
            for (int i = 1; i < n; ++i) {
                for (int j = 0; j < i; ++j) {
                    if (a.block_of[i] == a.block_of[j] || b.block_of[i] == b.block_of[j])
                        unite(i, j);
                }
            }
            SetPartition u;
            u.n = n;
            u.block_of.resize(n);
            for (int i = 0; i < n; ++i) u.block_of[i] = (uint8_t)find(i);
            std::vector<int> remap(n, -1);
            int next = 0;
            for (auto& v : u.block_of) {
                if (remap[v] < 0) remap[v] = next++;
                v = (uint8_t)remap[v];
            }
            return idx->at(u);
        };
        P.n_letters = n;
        P.action = [elems, idx](const Perm& p, int x) {
            return idx->at((*elems)[x].relabel(p));
        };
    }
    P.finalize();

    // atoms in natural order: pairs {i,j}, i<j, lex
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            SetPartition u = SetPartition::discrete(n);
            u = SetPartition::from_blocks(n, [&] {
                std::vector<std::vector<int>> bl;
                bl.push_back({i, j});
                for (int k = 1; k <= n; ++k)
                    if (k != i && k != j) bl.push_back({k});
                return bl;
            }());
            L.atoms.push_back(index->at(u));
            L.atom_letters.push_back({i, j});
        }
    L.finalize_atoms();
    return L;
}

// --------------------------------------------------------- d-divisible B_n

Lattice d_divisible_boolean(int n, int d, const LatticeGuards& g) {
    if (d < 1) throw std::invalid_argument("d_divisible_boolean: d must be >= 1");
    if (n % d != 0)
        throw std::invalid_argument("d_divisible_boolean: d must divide n");
    if (g.enforce && n > g.boolean_max_n)
        throw std::invalid_argument("d_divisible_boolean: n out of guard range");
    if (d == 1) return boolean_lattice(n, g);

    Lattice L;
    GradedPoset& P = L.P;
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) % d == 0) masks.push_back(m);
    std::map<uint32_t, int> id_of;
    for (size_t i = 0; i < masks.size(); ++i) {
        id_of[masks[i]] = (int)i;
        P.labels.push_back(subset_label(masks[i], n));
        P.rank_of.push_back(std::popcount(masks[i]) / d);
    }
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = 0; j < masks.size(); ++j) {
            if (std::popcount(masks[j]) != std::popcount(masks[i]) + d) continue;
            if ((masks[i] & masks[j]) == masks[i]) P.covers.push_back({(int)i, (int)j});
        }
    {
        auto sm = std::make_shared<std::vector<uint32_t>>(masks);
        auto sid = std::make_shared<std::map<uint32_t, int>>(id_of);
        P.leq_hint = [sm](int x, int y) {
            return ((*sm)[x] & (*sm)[y]) == (*sm)[x];
        };
        P.n_letters = n;
        P.action = [sm, sid, n](const Perm& p, int x) {
            uint32_t out = 0;
            for (int i = 0; i < n; ++i)
                if ((*sm)[x] & (1u << i)) out |= (1u << p[i]);
            return sid->at(out);
        };
    }
    P.finalize();
    for (int x : P.elements_of_rank(1)) {
        L.atoms.push_back(x);
        std::vector<int> letters;
        uint32_t m = masks[x];
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) letters.push_back(i + 1);
        L.atom_letters.push_back(letters);
    }
    L.finalize_atoms();
    return L;
}

// ------------------------------------------------------------------- Flats

Lattice lattice_of_flats(const Matroid& M, const LatticeGuards& g) {
    Lattice L;
    GradedPoset& P = L.P;
    std::map<uint32_t, int> id_of;
    std::vector<uint32_t> flats;
    auto add_flat = [&](uint32_t f) -> int {
        auto it = id_of.find(f);
        if (it != id_of.end()) return it->second;
        int id = (int)flats.size();
        if (g.enforce && flats.size() >= g.flats_cap)
            throw std::domain_error("lattice_of_flats: flat count exceeds cap");
        flats.push_back(f);
        id_of[f] = id;
        return id;
    };
    // BFS by rank from the bottom flat
    uint32_t bot = M.closure(0);
    add_flat(bot);
    std::vector<uint32_t> layer = {bot};
    std::vector<std::pair<uint32_t, uint32_t>> cover_masks;
    while (!layer.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t f : layer) {
            for (int e = 0; e < M.m; ++e) {
                if (f & (1u << e)) continue;
                uint32_t gflat = M.closure(f | (1u << e));
                if (id_of.find(gflat) == id_of.end()) next.push_back(gflat);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (uint32_t f : next) add_flat(f);
        layer = next;
    }
    // canonical ids: sort flats by (rank, mask)
    std::vector<uint32_t> sorted = flats;
    std::sort(sorted.begin(), sorted.end(), [&](uint32_t a, uint32_t b) {
        int ra = M.rank(a), rb = M.rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    id_of.clear();
    for (size_t i = 0; i < sorted.size(); ++i) id_of[sorted[i]] = (int)i;
    for (uint32_t f : sorted) {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int e = 0; e < M.m; ++e)
            if (f & (1u << e)) {
                if (!first) os << ",";
                os << M.labels[e];
                first = false;
            }
        os << "}";
        P.labels.push_back(os.str());
        P.rank_of.push_back(M.rank(f));
    }
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (size_t j = 0; j < sorted.size(); ++j) {
            if (P.rank_of[j] != P.rank_of[i] + 1) continue;
            if ((sorted[i] & sorted[j]) == sorted[i]) P.covers.push_back({(int)i, (int)j});
        }
    }
    {
        auto sm = std::make_shared<std::vector<uint32_t>>(sorted);
        auto sid = std::make_shared<std::map<uint32_t, int>>(id_of);
        auto shM = std::make_shared<const Matroid>(M);
        P.leq_hint = [sm](int x, int y) {
            return ((*sm)[x] & (*sm)[y]) == (*sm)[x];
        };
        P.join_hint = [sm, sid, shM](int x, int y) {
            return sid->at(shM->closure((*sm)[x] | (*sm)[y]));
        };
    }
    P.finalize();
    for (int x : P.elements_of_rank(1)) L.atoms.push_back(x);
    L.atom_letters.assign(L.atoms.size(), {});
    L.finalize_atoms();
    return L;
}

// ------------------------------------------------------------------- misc

int join(const GradedPoset& P, const std::vector<int>& xs) {
    int acc = P.bottom;
    for (int x : xs) acc = P.join2(acc, x);
    return acc;
}

bool is_atomic(const Lattice& L) {
    for (int x = 0; x < L.P.num_elements(); ++x) {
        if (L.join_atom_mask(L.atoms_below[x]) != x) return false;
    }
    return true;
}

bool is_semimodular(const GradedPoset& P) {
    for (int u = 0; u < P.num_elements(); ++u) {
        const auto& ups = P.upper[u];
        for (size_t i = 0; i < ups.size(); ++i)
            for (size_t j = i + 1; j < ups.size(); ++j) {
                int x = ups[i], y = ups[j];
                bool found = false;
                for (int v : P.upper[x]) {
                    if (std::find(P.upper[y].begin(), P.upper[y].end(), v) !=
                        P.upper[y].end()) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    }
    return true;
}

IntervalLattice lower_interval(const Lattice& L, int u) {
    IntervalLattice R;
    GradedPoset& Q = R.L.P;
    const GradedPoset& P = L.P;
    std::vector<int> sub(P.num_elements(), -1);
    for (int x = 0; x < P.num_elements(); ++x) {
        if (!P.leq(x, u)) continue;
        sub[x] = (int)R.ambient_of.size();
        R.ambient_of.push_back(x);
        Q.labels.push_back(P.labels[x]);
        Q.rank_of.push_back(P.rank_of[x]);
    }
    for (auto [lo, hi] : P.covers)
        if (sub[lo] >= 0 && sub[hi] >= 0) Q.covers.push_back({sub[lo], sub[hi]});
    {
        auto amb = std::make_shared<std::vector<int>>(R.ambient_of);
        const GradedPoset* base = &P;
        Q.leq_hint = [amb, base](int x, int y) {
            return base->leq((*amb)[x], (*amb)[y]);
        };
        if (P.join_hint) {
            Q.join_hint = [amb, base, sub2 = std::make_shared<std::vector<int>>(sub)](
                              int x, int y) {
                return (*sub2)[base->join2((*amb)[x], (*amb)[y])];
            };
        }
    }
    Q.finalize();
    for (size_t i = 0; i < L.atoms.size(); ++i) {
        int a = L.atoms[i];
        if (sub[a] < 0) continue;
        R.L.atoms.push_back(sub[a]);
        R.L.atom_letters.push_back(L.atom_letters[i]);
        R.atom_pos_in_ambient.push_back((int)i);
    }
    R.L.finalize_atoms();
    return R;
}

}  // namespace latticehom
