#include "latticehom/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace latticehom {

void GradedPoset::finalize() {
    int N = num_elements();
    upper.assign(N, {});
    lower.assign(N, {});
    for (auto [lo, hi] : covers) {
        upper[lo].push_back(hi);
        lower[hi].push_back(lo);
    }
    for (auto& v : upper) std::sort(v.begin(), v.end());
    for (auto& v : lower) std::sort(v.begin(), v.end());

    int maxr = 0;
    for (int r : rank_of) maxr = std::max(maxr, r);
    by_rank.assign(maxr + 1, {});
    for (int i = 0; i < N; ++i) by_rank[rank_of[i]].push_back(i);
    for (auto& v : by_rank) std::sort(v.begin(), v.end());

    if (by_rank[0].size() != 1 || by_rank[maxr].size() != 1)
        throw std::logic_error("poset must have unique bottom and top");
    bottom = by_rank[0][0];
    top = by_rank[maxr][0];
    for (auto [lo, hi] : covers)
        if (rank_of[hi] != rank_of[lo] + 1)
            throw std::logic_error("cover relation violates gradedness");
}

bool GradedPoset::leq(int x, int y) const {
    if (x == y) return true;
    if (leq_hint) return leq_hint(x, y);
    if (rank_of[x] >= rank_of[y]) return false;
    // upward search, pruned by rank
    std::vector<int> stack = {x};
    std::set<int> seen;
    while (!stack.empty()) {
        int z = stack.back();
        stack.pop_back();
        for (int w : upper[z]) {
            if (w == y) return true;
            if (rank_of[w] < rank_of[y] && seen.insert(w).second)
                stack.push_back(w);
        }
    }
    return false;
}

int GradedPoset::join2(int x, int y) const {
    if (join_hint) return join_hint(x, y);
    if (leq(x, y)) return y;
    if (leq(y, x)) return x;
    // minimal common upper bounds by rank sweep
    std::vector<int> mins;
    for (int r = std::max(rank_of[x], rank_of[y]); r < (int)by_rank.size(); ++r) {
        for (int z : by_rank[r]) {
            if (!leq(x, z) || !leq(y, z)) continue;
            bool above_min = false;
            for (int m : mins)
                if (leq(m, z)) { above_min = true; break; }
            if (!above_min) mins.push_back(z);
        }
        if (!mins.empty()) break;
    }
    if (mins.size() != 1)
        throw std::domain_error("join is not unique: poset is not a lattice here");
    return mins[0];
}

void check_rank_set(const GradedPoset& P, const RankSet& S) {
    int r = P.top_rank();
    int prev = 0;
    for (int s : S) {
        if (s <= prev) throw std::invalid_argument("rank set must be strictly increasing");
        if (s < 1 || s > r - 1)
            throw std::invalid_argument("rank set entry outside nontrivial ranks");
        prev = s;
    }
}

RankSelectedPoset rank_selected_subposet(const GradedPoset& P, const RankSet& S) {
    check_rank_set(P, S);
    RankSelectedPoset R;
    GradedPoset& Q = R.poset;
    R.sub_of_orig.assign(P.num_elements(), -1);

    // fresh sentinel bottom at index 0
    Q.labels.push_back("<bot>");
    Q.rank_of.push_back(0);
    R.orig_element.push_back(-1);
    for (size_t i = 0; i < S.size(); ++i) {
        for (int x : P.elements_of_rank(S[i])) {
            R.sub_of_orig[x] = (int)Q.labels.size();
            Q.labels.push_back(P.labels[x]);
            Q.rank_of.push_back((int)i + 1);
            R.orig_element.push_back(x);
        }
    }
    Q.labels.push_back("<top>");
    Q.rank_of.push_back((int)S.size() + 1);
    R.orig_element.push_back(-1);
    int qtop = (int)Q.labels.size() - 1;

    for (int x : P.elements_of_rank(S[0])) Q.covers.push_back({0, R.sub_of_orig[x]});
    for (size_t i = 0; i + 1 < S.size(); ++i) {
        for (int x : P.elements_of_rank(S[i])) {
            for (int y : P.elements_of_rank(S[i + 1])) {
                if (P.leq(x, y))
                    Q.covers.push_back({R.sub_of_orig[x], R.sub_of_orig[y]});
            }
        }
    }
    for (int x : P.elements_of_rank(S.back())) Q.covers.push_back({R.sub_of_orig[x], qtop});

    if (P.action) {
        auto orig = R.orig_element;
        auto sub = R.sub_of_orig;
        const GradedPoset* base = &P;
        Q.n_letters = P.n_letters;
        Q.action = [orig, sub, base, qtop](const Perm& g, int x) -> int {
            if (x == 0) return 0;
            if (x == qtop) return qtop;
            return sub[base->act(g, orig[x])];
        };
    }
    {
        auto orig = R.orig_element;
        const GradedPoset* base = &P;
        Q.leq_hint = [orig, base, qtop](int x, int y) -> bool {
            if (x == y) return true;
            if (x == 0 || y == qtop) return true;
            if (y == 0 || x == qtop) return false;
            return base->leq(orig[x], orig[y]);
        };
    }
    Q.finalize();
    return R;
}

static void chains_rec(const GradedPoset& P, const RankSet& T, size_t i, Chain& cur,
                       std::vector<Chain>& out,
                       const std::function<bool(int)>& top_filter) {
    if (i == T.size()) {
        out.push_back(cur);
        return;
    }
    bool last = (i + 1 == T.size());
    for (int y : P.elements_of_rank(T[i])) {
        if (!cur.empty() && !P.leq(cur.back(), y)) continue;
        if (last && top_filter && !top_filter(y)) continue;
        cur.push_back(y);
        chains_rec(P, T, i + 1, cur, out, top_filter);
        cur.pop_back();
    }
}

std::vector<Chain> chains_with_rank_set(const GradedPoset& P, const RankSet& T) {
    return chains_with_rank_set_filtered(P, T, nullptr);
}

std::vector<Chain> chains_with_rank_set_filtered(
    const GradedPoset& P, const RankSet& T,
    const std::function<bool(int)>& top_filter) {
    if (!T.empty()) check_rank_set(P, T);
    std::vector<Chain> out;
    Chain cur;
    chains_rec(P, T, 0, cur, out, top_filter);
    return out;
}

static Int mobius_rec(const GradedPoset& P, int x, int y,
                      std::map<std::pair<int, int>, Int>& memo) {
    if (x == y) return 1;
    auto key = std::make_pair(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // mu(x,y) = -sum_{x <= z < y} mu(x,z)
    Int s = 0;
    for (int r = P.rank_of[x]; r < P.rank_of[y]; ++r) {
        for (int z : P.elements_of_rank(r)) {
            if (P.leq(x, z) && P.leq(z, y)) s += mobius_rec(P, x, z, memo);
        }
    }
    Int val = -s;
    memo[key] = val;
    return val;
}

Int mobius(const GradedPoset& P, int x, int y) {
    if (!P.leq(x, y)) throw std::invalid_argument("mobius: x is not <= y");
    std::map<std::pair<int, int>, Int> memo;
    return mobius_rec(P, x, y, memo);
}

static void maxchains_rec(const GradedPoset& P, int y, Chain& cur,
                          std::vector<Chain>& out) {
    cur.push_back(y);
    if (y == P.top) {
        out.push_back(cur);
    } else {
        for (int z : P.upper[y]) maxchains_rec(P, z, cur, out);
    }
    cur.pop_back();
}

std::vector<Chain> maximal_chains(const GradedPoset& P) {
    std::vector<Chain> out;
    Chain cur;
    maxchains_rec(P, P.bottom, cur, out);
    return out;
}

static void satchains_rec(const GradedPoset& P, int y, int target, Chain& cur,
                          std::vector<Chain>& out) {
    cur.push_back(y);
    if (y == target) {
        out.push_back(cur);
    } else {
        for (int z : P.upper[y])
            if (P.leq(z, target)) satchains_rec(P, z, target, cur, out);
    }
    cur.pop_back();
}

std::vector<Chain> saturated_chains(const GradedPoset& P, int x, int y) {
    if (!P.leq(x, y)) throw std::invalid_argument("saturated_chains: x not <= y");
    std::vector<Chain> out;
    Chain cur;
    satchains_rec(P, x, y, cur, out);
    return out;
}

Chain restrict_chain_to_ranks(const GradedPoset& P, const Chain& full_chain,
                              const RankSet& S) {
    Chain out;
    size_t i = 0;
    for (int x : full_chain) {
        if (i < S.size() && P.rank_of[x] == S[i]) {
            out.push_back(x);
            ++i;
        }
    }
    return out;
}

}  // namespace latticehom
