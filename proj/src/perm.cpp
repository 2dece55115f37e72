#include "latticehom/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latticehom {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
    return q;
}

int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

IntPartition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    IntPartition mu;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
        mu.push_back(len);
    }
    std::sort(mu.rbegin(), mu.rend());
    return mu;
}

Perm perm_of_cycle_type(const IntPartition& mu, int n) {
    Perm p = identity_perm(n);
    int pos = 0;
    for (int part : mu) {
        for (int k = 0; k < part; ++k) p[pos + k] = pos + (k + 1) % part;
        pos += part;
    }
    if (pos > n) throw std::invalid_argument("cycle type larger than n");
    return p;
}

Perm transposition(int n, int i, int j) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[j]);
    return p;
}

static void partitions_rec(int n, int maxpart, int minpart, IntPartition& cur,
                           std::vector<IntPartition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= minpart; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, minpart, cur, out);
        cur.pop_back();
    }
}

std::vector<IntPartition> all_partitions(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    partitions_rec(n, n, 1, cur, out);
    return out;
}

std::vector<IntPartition> partitions_min_part(int n, int min_part) {
    std::vector<IntPartition> out;
    IntPartition cur;
    if (n == 0) { out.push_back({}); return out; }
    partitions_rec(n, n, min_part, cur, out);
    return out;
}

long long partition_size(const IntPartition& mu) {
    long long s = 0;
    for (int p : mu) s += p;
    return s;
}

int multiplicity(const IntPartition& mu, int part) {
    int c = 0;
    for (int p : mu) c += (p == part);
    return c;
}

void z_factor(const IntPartition& mu, mpz_class& out) {
    out = 1;
    std::map<int, int> mult;
    for (int p : mu) mult[p]++;
    for (auto [part, m] : mult) {
        for (int k = 0; k < m; ++k) out *= part;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        out *= fact;
    }
}

std::string partition_to_string(const IntPartition& mu) {
    std::ostringstream os;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    return os.str();
}

IntPartition partition_from_string(const std::string& s) {
    IntPartition mu;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) mu.push_back(std::stoi(tok));
    }
    return mu;
}

std::vector<Perm> coxeter_generators(int n) {
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
    return gens;
}

}  // namespace latticehom
