#include "latticehom/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace latticehom {

static std::vector<std::string> default_labels(int m) {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) out.push_back(std::to_string(i + 1));
    return out;
}

bool Matroid::independent(uint32_t X) const {
    for (uint32_t C : circuits)
        if ((C & X) == C) return false;
    return true;
}

int Matroid::rank(uint32_t X) const {
    int best = 0;
    for (uint32_t B : bases) best = std::max(best, std::popcount(B & X));
    return best;
}

uint32_t Matroid::closure(uint32_t X) const {
    int r = rank(X);
    uint32_t cl = X;
    for (int e = 0; e < m; ++e) {
        if (cl & (1u << e)) continue;
        if (rank(X | (1u << e)) == r) cl |= (1u << e);
    }
    return cl;
}

static std::string mask_str(uint32_t X, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (X & (1u << i)) {
            if (!first) os << ",";
            os << labels[i];
            first = false;
        }
    }
    os << "}";
    return os.str();
}

void Matroid::validate() const {
    if (bases.empty()) throw std::invalid_argument("matroid has no bases");
    for (uint32_t B : bases)
        if (std::popcount(B) != rk)
            throw std::invalid_argument("bases not equicardinal: witness " +
                                        mask_str(B, labels));
    std::vector<bool> is_basis(1u << m, false);
    for (uint32_t B : bases) is_basis[B] = true;
    for (uint32_t B1 : bases) {
        for (uint32_t B2 : bases) {
            uint32_t only1 = B1 & ~B2;
            for (int x = 0; x < m; ++x) {
                if (!(only1 & (1u << x))) continue;
                bool found = false;
                uint32_t only2 = B2 & ~B1;
                for (int y = 0; y < m && !found; ++y) {
                    if (!(only2 & (1u << y))) continue;
                    uint32_t B3 = (B1 & ~(1u << x)) | (1u << y);
                    found = is_basis[B3];
                }
                if (!found)
                    throw std::invalid_argument(
                        "basis exchange fails for pair " + mask_str(B1, labels) +
                        ", " + mask_str(B2, labels));
            }
        }
    }
}

static std::vector<uint32_t> circuits_from_independence(
    int m, int rk, const std::function<bool(uint32_t)>& indep) {
    std::vector<uint32_t> circuits;
    for (uint32_t X = 1; X < (1u << m); ++X) {
        if (std::popcount(X) > rk + 1) continue;
        if (indep(X)) continue;
        bool minimal = true;
        for (int e = 0; e < m && minimal; ++e)
            if ((X & (1u << e)) && !indep(X & ~(1u << e))) minimal = false;
        if (minimal) circuits.push_back(X);
    }
    return circuits;
}

Matroid Matroid::from_bases(int m, std::vector<uint32_t> bases,
                            std::vector<std::string> labels) {
    Matroid M;
    M.m = m;
    M.labels = labels.empty() ? default_labels(m) : std::move(labels);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    M.bases = std::move(bases);
    if (M.bases.empty()) throw std::invalid_argument("matroid needs >= 1 basis");
    M.rk = std::popcount(M.bases[0]);
    auto indep = [&M](uint32_t X) {
        for (uint32_t B : M.bases)
            if ((X & B) == X) return true;
        return false;
    };
    M.circuits = circuits_from_independence(m, M.rk, indep);
    M.validate();
    return M;
}

Matroid Matroid::from_circuits(int m, std::vector<uint32_t> circuits,
                               std::vector<std::string> labels) {
    Matroid M;
    M.m = m;
    M.labels = labels.empty() ? default_labels(m) : std::move(labels);
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    M.circuits = std::move(circuits);
    auto indep = [&M](uint32_t X) {
        for (uint32_t C : M.circuits)
            if ((C & X) == C) return false;
        return true;
    };
    M.rk = 0;
    for (uint32_t X = 0; X < (1u << m); ++X)
        if (indep(X)) M.rk = std::max(M.rk, std::popcount(X));
    for (uint32_t X = 0; X < (1u << m); ++X)
        if (indep(X) && std::popcount(X) == M.rk) M.bases.push_back(X);
    M.validate();
    return M;
}

Matroid Matroid::graphic(int nvert, const std::vector<std::pair<int, int>>& edges) {
    int m = (int)edges.size();
    if (m > 20) throw std::invalid_argument("graphic matroid: too many edges");
    // independence = forest
    auto indep = [&](uint32_t X) {
        std::vector<int> parent(nvert + 1);
        for (int v = 1; v <= nvert; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int e = 0; e < m; ++e) {
            if (!(X & (1u << e))) continue;
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a == b) return false;
            parent[a] = b;
        }
        return true;
    };
    int rk = 0;
    std::vector<uint32_t> bases;
    for (uint32_t X = 0; X < (1u << m); ++X)
        if (indep(X)) rk = std::max(rk, std::popcount(X));
    for (uint32_t X = 0; X < (1u << m); ++X)
        if (std::popcount(X) == rk && indep(X)) bases.push_back(X);
    std::vector<std::string> labels;
    for (auto [u, v] : edges)
        labels.push_back(std::to_string(u) + std::to_string(v));
    return from_bases(m, std::move(bases), std::move(labels));
}

Matroid Matroid::complete_graph(int nvert) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= nvert; ++i)
        for (int j = i + 1; j <= nvert; ++j) edges.push_back({i, j});
    return graphic(nvert, edges);
}

Matroid Matroid::uniform(int k, int m) {
    std::vector<uint32_t> bases;
    for (uint32_t X = 0; X < (1u << m); ++X)
        if (std::popcount(X) == k) bases.push_back(X);
    return from_bases(m, std::move(bases));
}

Matroid Matroid::free_matroid(int m) {
    return from_bases(m, {(uint32_t)((1u << m) - 1)});
}

}  // namespace latticehom
