#include "latticehom/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latticehom {

long long sparse_rank(const SparseMatrixQ& m) {
    // rows as sorted maps col -> value, with per-column row sets
    std::vector<std::map<int, Rat>> row(m.nrows);
    std::vector<std::set<int>> col_rows(m.ncols);
    for (auto& [r, c, v] : m.triplets) {
        if (v == 0) continue;
        auto it = row[r].find(c);
        if (it == row[r].end()) {
            row[r].emplace(c, v);
        } else {
            it->second += v;
            if (it->second == 0) row[r].erase(it);
        }
    }
    for (int r = 0; r < m.nrows; ++r)
        for (auto& [c, v] : row[r]) col_rows[c].insert(r);

    // active column sizes, kept in a set for cheap minimum extraction
    std::set<std::pair<size_t, int>> col_queue;
    for (int c = 0; c < m.ncols; ++c)
        if (!col_rows[c].empty()) col_queue.insert({col_rows[c].size(), c});

    auto touch_col = [&](int c, size_t old_size) {
        col_queue.erase({old_size, c});
        if (!col_rows[c].empty()) col_queue.insert({col_rows[c].size(), c});
    };

    long long rank = 0;
    while (!col_queue.empty()) {
        int pc = col_queue.begin()->second;
        // within the smallest column, pick the row with fewest nonzeros
        int pr = -1;
        size_t best = SIZE_MAX;
        for (int r : col_rows[pc]) {
            if (row[r].size() < best) {
                best = row[r].size();
                pr = r;
            }
        }
        ++rank;
        // detach pivot row from all column sets
        std::map<int, Rat> prow = std::move(row[pr]);
        row[pr].clear();
        for (auto& [c, v] : prow) {
            size_t old = col_rows[c].size();
            col_rows[c].erase(pr);
            touch_col(c, old);
        }
        const Rat pval = prow.at(pc);
        // eliminate the pivot column from the remaining rows
        std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : targets) {
            Rat factor = row[r].at(pc) / pval;
            for (auto& [c, v] : prow) {
                Rat delta = factor * v;
                auto it = row[r].find(c);
                if (it == row[r].end()) {
                    row[r].emplace(c, -delta);
                    size_t old = col_rows[c].size();
                    col_rows[c].insert(r);
                    touch_col(c, old);
                } else {
                    it->second -= delta;
                    if (it->second == 0) {
                        row[r].erase(it);
                        size_t old = col_rows[c].size();
                        col_rows[c].erase(r);
                        touch_col(c, old);
                    }
                }
            }
        }
    }
    return rank;
}

std::optional<std::vector<Rat>> express_in_span(
    const std::vector<std::map<int, Rat>>& cols, const std::map<int, Rat>& b) {
    const int n = (int)cols.size();
    // work[j] = reduced column, combo[j] = its expression in original columns
    std::vector<std::map<int, Rat>> work = cols;
    std::vector<std::vector<Rat>> combo(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j) combo[j][j] = 1;

    std::map<int, int> pivot_col;  // lowest row key -> column index
    for (int j = 0; j < n; ++j) {
        while (!work[j].empty()) {
            int low = work[j].rbegin()->first;
            auto it = pivot_col.find(low);
            if (it == pivot_col.end()) break;
            int k = it->second;
            Rat factor = work[j].rbegin()->second / work[k].rbegin()->second;
            for (auto& [r, v] : work[k]) {
                auto jt = work[j].find(r);
                if (jt == work[j].end())
                    work[j].emplace(r, -factor * v);
                else {
                    jt->second -= factor * v;
                    if (jt->second == 0) work[j].erase(jt);
                }
            }
            for (int t = 0; t < n; ++t) combo[j][t] -= factor * combo[k][t];
        }
        if (!work[j].empty()) pivot_col[work[j].rbegin()->first] = j;
    }

    std::map<int, Rat> r = b;
    std::vector<Rat> coeff(n, Rat(0));
    while (!r.empty()) {
        int low = r.rbegin()->first;
        auto it = pivot_col.find(low);
        if (it == pivot_col.end()) return std::nullopt;
        int k = it->second;
        Rat factor = r.rbegin()->second / work[k].rbegin()->second;
        for (auto& [row_key, v] : work[k]) {
            auto jt = r.find(row_key);
            if (jt == r.end())
                r.emplace(row_key, -factor * v);
            else {
                jt->second -= factor * v;
                if (jt->second == 0) r.erase(jt);
            }
        }
        for (int t = 0; t < n; ++t) coeff[t] += factor * combo[k][t];
    }
    return coeff;
}

}  // namespace latticehom
