#include "latticehom/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace latticehom {

// ------------------------------------------------------------- RibbonShape

int RibbonShape::size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
}

int RibbonShape::num_cols() const {
    return size() - num_rows() + 1;
}

int RibbonShape::row_of_box(int i) const {
    int acc = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        acc += rows[r];
        if (i < acc) return (int)r;
    }
    throw std::out_of_range("box index outside ribbon");
}

int RibbonShape::col_of_box(int i) const {
    // row r starts in the column where row r-1 ends
    int acc = 0, start = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (i < acc + rows[r]) return start + (i - acc);
        acc += rows[r];
        start += rows[r] - 1;
    }
    throw std::out_of_range("box index outside ribbon");
}

std::vector<std::vector<int>> RibbonShape::columns() const {
    std::vector<std::vector<int>> cols(num_cols());
    for (int i = 0; i < size(); ++i) cols[col_of_box(i)].push_back(i);
    // boxes in one column come from consecutive rows; reading order lists
    // them bottom-up, so reverse for top-to-bottom
    for (auto& c : cols) std::reverse(c.begin(), c.end());
    return cols;
}

std::vector<int> RibbonShape::row_ends() const {
    std::vector<int> ends;
    int acc = 0;
    for (int r : rows) {
        acc += r;
        ends.push_back(acc);
    }
    return ends;
}

RibbonShape ribbon_of(const RankSet& S, int n) {
    if (!S.empty() && S.back() >= n)
        throw std::invalid_argument("ribbon_of: max S must be < n");
    RibbonShape R;
    int prev = 0;
    for (int s : S) {
        R.rows.push_back(s - prev);
        prev = s;
    }
    R.rows.push_back(n - prev);
    return R;
}

RibbonShape ribbon_wh_of(const RankSet& S) {
    if (S.empty()) throw std::invalid_argument("ribbon_wh_of: S must be nonempty");
    RankSet body(S.begin(), S.end() - 1);
    return ribbon_of(body, S.back());
}

// --------------------------------------------------------------- AtomOrder

AtomOrder AtomOrder::natural(int num_atoms) {
    AtomOrder o;
    o.order.resize(num_atoms);
    std::iota(o.order.begin(), o.order.end(), 0);
    o.pos_in_order = o.order;
    return o;
}

AtomOrder AtomOrder::from_order(std::vector<int> order) {
    AtomOrder o;
    o.order = std::move(order);
    o.pos_in_order.assign(o.order.size(), -1);
    for (size_t i = 0; i < o.order.size(); ++i) o.pos_in_order[o.order[i]] = (int)i;
    for (int p : o.pos_in_order)
        if (p < 0) throw std::invalid_argument("atom order is not a permutation");
    return o;
}

std::vector<int> AtomOrder::positions(const std::vector<int>& atoms) const {
    std::vector<int> out;
    for (int a : atoms) out.push_back(pos_in_order[a]);
    return out;
}

bool is_standard(const RibbonFilling& F, const AtomOrder& ord) {
    auto ends = F.shape.row_ends();
    size_t e = 0;
    for (size_t p = 0; p + 1 < F.word.size(); ++p) {
        while (e < ends.size() && (int)(p + 1) > ends[e]) ++e;
        bool boundary = (e < ends.size() && (int)(p + 1) == ends[e]);
        bool asc = ord.less(F.word[p], F.word[p + 1]);
        if (boundary ? asc : !asc) return false;
    }
    return true;
}

// ----------------------------------------------------------------- Tabloid

Tabloid tabloid_of(const RibbonFilling& F) {
    Tabloid t;
    t.rows.resize(F.shape.num_rows());
    int acc = 0;
    for (int r = 0; r < F.shape.num_rows(); ++r) {
        for (int k = 0; k < F.shape.rows[r]; ++k) t.rows[r].push_back(F.word[acc + k]);
        acc += F.shape.rows[r];
        std::sort(t.rows[r].begin(), t.rows[r].end());
    }
    return t;
}

void TabloidVector::add(const Tabloid& t, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TabloidVector& TabloidVector::operator+=(const TabloidVector& o) {
    for (auto& [t, c] : o.terms) add(t, c);
    return *this;
}

TabloidVector TabloidVector::operator-() const {
    TabloidVector out;
    for (auto& [t, c] : terms) out.terms.emplace(t, -c);
    return out;
}

// Iterate the column group of a ribbon shape acting on box positions:
// product over columns of all permutations of that column's boxes.
static void for_each_column_perm(
    const RibbonShape& shape,
    const std::function<void(const std::vector<int>&, int)>& fn) {
    auto cols = shape.columns();
    std::vector<std::vector<int>> nontrivial;
    for (auto& c : cols)
        if (c.size() > 1) nontrivial.push_back(c);
    int n = shape.size();
    std::vector<int> box_perm(n);
    std::iota(box_perm.begin(), box_perm.end(), 0);
    std::function<void(size_t, int)> rec = [&](size_t ci, int sign) {
        if (ci == nontrivial.size()) {
            fn(box_perm, sign);
            return;
        }
        const auto& boxes = nontrivial[ci];
        std::vector<int> p(boxes.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            int s = 1;
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = i + 1; j < p.size(); ++j)
                    if (p[i] > p[j]) s = -s;
            for (size_t i = 0; i < boxes.size(); ++i) box_perm[boxes[i]] = boxes[p[i]];
            rec(ci + 1, sign * s);
        } while (std::next_permutation(p.begin(), p.end()));
        for (size_t i = 0; i < boxes.size(); ++i) box_perm[boxes[i]] = boxes[i];
    };
    rec(0, 1);
}

TabloidVector polytabloid(const RibbonFilling& F) {
    {
        std::set<int> distinct(F.word.begin(), F.word.end());
        if (distinct.size() != F.word.size())
            throw std::invalid_argument("polytabloid: entries must be distinct");
    }
    TabloidVector v;
    for_each_column_perm(F.shape, [&](const std::vector<int>& box_perm, int sign) {
        RibbonFilling G = F;
        for (size_t b = 0; b < F.word.size(); ++b) G.word[box_perm[b]] = F.word[b];
        v.add(tabloid_of(G), Rat(sign));
    });
    return v;
}

RibbonFilling act(const Lattice& L, const Perm& g, const RibbonFilling& F) {
    RibbonFilling G = F;
    for (auto& a : G.word) a = L.act_atom(g, a);
    return G;
}

TabloidVector act(const Lattice& L, const Perm& g, const TabloidVector& v) {
    TabloidVector out;
    for (auto& [t, c] : v.terms) {
        Tabloid s = t;
        for (auto& row : s.rows) {
            for (auto& a : row) a = L.act_atom(g, a);
            std::sort(row.begin(), row.end());
        }
        out.add(s, c);
    }
    return out;
}

// -------------------------------------------------------------- YoungTableau

bool YoungTableau::is_standard() const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c + 1 < rows[r].size(); ++c)
            if (rows[r][c] >= rows[r][c + 1]) return false;
    for (size_t r = 0; r + 1 < rows.size(); ++r)
        for (size_t c = 0; c < rows[r + 1].size(); ++c)
            if (rows[r][c] >= rows[r + 1][c]) return false;
    return true;
}

std::vector<std::vector<int>> YoungTableau::columns() const {
    std::vector<std::vector<int>> cols(rows.empty() ? 0 : rows[0].size());
    for (auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

std::vector<int> YoungTableau::letters() const {
    std::vector<int> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungTableau> standard_tableaux(const IntPartition& shape,
                                            const std::vector<int>& letters) {
    int n = 0;
    for (int p : shape) n += p;
    if ((int)letters.size() != n)
        throw std::invalid_argument("standard_tableaux: wrong letter count");
    std::vector<int> sorted_letters = letters;
    std::sort(sorted_letters.begin(), sorted_letters.end());

    std::vector<YoungTableau> out;
    YoungTableau T;
    T.shape = shape;
    T.rows.resize(shape.size());
    std::vector<int> filled(shape.size(), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(T);
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;  // keep columns strict
            T.rows[r].push_back(sorted_letters[k]);
            filled[r]++;
            rec(k + 1);
            filled[r]--;
            T.rows[r].pop_back();
        }
    };
    rec(0);
    return out;
}

// --------------------------------------------------------- Young symmetrizer

// Sum over the group permuting the given letter groups, applied to v.  The
// groups act on disjoint letters, so the total sum factors as a product of
// per-group sums; applying it stagewise keeps intermediate vectors small
// (a vanishing stage stops the whole computation early).
static TabloidVector apply_group_sum(const Lattice& L,
                                     const std::vector<std::vector<int>>& groups,
                                     bool signed_sum, long long cap,
                                     const TabloidVector& v) {
    long long total = 1;
    for (auto& gp : groups) {
        long long f = 1;
        for (size_t k = 2; k <= gp.size(); ++k) f *= (long long)k;
        total *= f;
        if (total > cap) throw std::domain_error("group sum exceeds configured cap");
    }
    TabloidVector cur = v;
    for (auto& letters : groups) {
        if (letters.size() < 2 || cur.is_zero()) continue;
        TabloidVector next;
        std::vector<int> p(letters.size());
        std::iota(p.begin(), p.end(), 0);
        Perm g = identity_perm(L.P.n_letters);
        do {
            int s = 1;
            if (signed_sum) {
                for (size_t i = 0; i < p.size(); ++i)
                    for (size_t j = i + 1; j < p.size(); ++j)
                        if (p[i] > p[j]) s = -s;
            }
            for (size_t i = 0; i < letters.size(); ++i)
                g[letters[i] - 1] = letters[p[i]] - 1;
            TabloidVector gv = act(L, g, cur);
            if (s < 0) gv = -gv;
            next += gv;
        } while (std::next_permutation(p.begin(), p.end()));
        cur = std::move(next);
    }
    return cur;
}

TabloidVector row_symmetrize(const Lattice& L, const YoungTableau& T,
                             const TabloidVector& v, long long group_sum_cap) {
    // process wide rows first: swappable pairs live in the first row, so a
    // vanishing a_T shows up in the earliest stage
    return apply_group_sum(L, T.rows, false, group_sum_cap, v);
}

TabloidVector young_symmetrizer_apply(const Lattice& L, const YoungTableau& T,
                                      const TabloidVector& v,
                                      long long group_sum_cap) {
    TabloidVector av = row_symmetrize(L, T, v, group_sum_cap);
    if (av.is_zero()) return av;
    return apply_group_sum(L, T.columns(), true, group_sum_cap, av);
}

// ----------------------------------------------------------------- descents

long long syt_count_with_descent_set(const IntPartition& lambda, const RankSet& S) {
    int n = 0;
    for (int p : lambda) n += p;
    for (int s : S)
        if (s < 1 || s >= n) throw std::invalid_argument("descent outside 1..n-1");
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 1);
    long long count = 0;
    for (const auto& T : standard_tableaux(lambda, letters)) {
        std::vector<int> row_of(n + 1);
        for (size_t r = 0; r < T.rows.size(); ++r)
            for (int x : T.rows[r]) row_of[x] = (int)r;
        RankSet desc;
        for (int i = 1; i < n; ++i)
            if (row_of[i + 1] > row_of[i]) desc.push_back(i);
        if (desc == S) ++count;
    }
    return count;
}

// ------------------------------------------------------- swappable analysis

std::vector<std::pair<int, int>> swappable_letter_pairs(const YoungTableau& T,
                                                        const SetPartition& u) {
    std::set<int> first_row;
    if (!T.rows.empty()) first_row.insert(T.rows[0].begin(), T.rows[0].end());
    std::vector<int> bsize(u.num_blocks(), 0);
    for (auto b : u.block_of) bsize[b]++;
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= u.n; ++i)
        for (int j = i + 1; j <= u.n; ++j) {
            if (u.block_of[i - 1] != u.block_of[j - 1]) continue;
            if (bsize[u.block_of[i - 1]] != 2) continue;
            if (first_row.count(i) && first_row.count(j)) out.push_back({i, j});
        }
    return out;
}

SwappableReport swappable_analysis(const YoungTableau& T, const SetPartition& u,
                                   const RibbonFilling& F, const Lattice& L) {
    // validate: the reading word must label a saturated chain from bottom to u
    {
        int x = L.P.bottom;
        for (int apos : F.word) {
            int y = L.P.join2(x, L.atoms[apos]);
            if (L.P.rank_of[y] != L.P.rank_of[x] + 1)
                throw std::invalid_argument("filling word is not a chain filling");
            x = y;
        }
        if (!(L.set_partition_of(x) == u))
            throw std::invalid_argument("filling does not reach u");
    }
    std::set<int> first_row;
    if (!T.rows.empty()) first_row.insert(T.rows[0].begin(), T.rows[0].end());

    std::vector<int> bsize(u.num_blocks(), 0);
    for (auto b : u.block_of) bsize[b]++;
    auto block_size = [&](int letter) { return bsize[u.block_of[letter - 1]]; };
    auto is_two_block = [&](int i, int j) {
        return u.block_of[i - 1] == u.block_of[j - 1] && block_size(i) == 2;
    };

    SwappableReport rep;
    for (size_t b = 0; b < F.word.size(); ++b) {
        const auto& letters = L.atom_letters[F.word[b]];
        if (letters.size() != 2)
            throw std::invalid_argument("swappable analysis needs pair atoms");
        int i = letters[0], j = letters[1];
        bool swappable =
            is_two_block(i, j) && first_row.count(i) && first_row.count(j);
        if (swappable) {
            rep.swappable_boxes.push_back((int)b);
            continue;
        }
        bool type_a = block_size(i) > 2 || block_size(j) > 2;
        if (type_a)
            rep.ambiguous_boxes_a.push_back((int)b);
        else
            rep.ambiguous_boxes_b.push_back((int)b);
    }
    return rep;
}

long long lambda_size_of(const SetPartition& u) {
    long long s = 0;
    for (int part : u.type())
        if (part >= 2) s += part;
    return s;
}

long long lambda1_of(const SetPartition& u, const RankSet& S) {
    return 4LL * S.back() - (long long)S.size() + 2 - lambda_size_of(u);
}

long long swap_statistic(const SetPartition& u, const RankSet& S) {
    if (u.rank() != S.back())
        throw std::invalid_argument("swap_statistic: rank(u) must equal max S");
    long long big = 0;  // sum_{i>=3} i m_i(u)
    for (int part : u.type())
        if (part >= 3) big += part;
    long long lam = lambda_size_of(u);
    long long lam1 = lambda1_of(u, S);
    return lam1 - big - (lam - lam1);
}

}  // namespace latticehom
