#include "latticehom/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace latticehom {

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (!o.is_zero() && !is_zero() && deg != o.deg)
        throw std::invalid_argument("adding symmetric functions of different degrees");
    if (is_zero()) deg = o.deg;
    for (auto& [mu, c] : o.p_coeff) {
        auto it = p_coeff.find(mu);
        if (it == p_coeff.end()) {
            p_coeff.emplace(mu, c);
        } else {
            it->second += c;
            if (it->second == 0) p_coeff.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    SymFunc neg = o * Rat(-1);
    return *this += neg;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc out;
    out.deg = deg + o.deg;
    for (auto& [mu, c] : p_coeff)
        for (auto& [nu, d] : o.p_coeff) {
            IntPartition merged = mu;
            merged.insert(merged.end(), nu.begin(), nu.end());
            std::sort(merged.rbegin(), merged.rend());
            Rat prod = c * d;
            auto it = out.p_coeff.find(merged);
            if (it == out.p_coeff.end())
                out.p_coeff.emplace(merged, prod);
            else {
                it->second += prod;
                if (it->second == 0) out.p_coeff.erase(it);
            }
        }
    return out;
}

SymFunc SymFunc::operator*(const Rat& c) const {
    SymFunc out;
    out.deg = deg;
    if (c == 0) return out;
    for (auto& [mu, v] : p_coeff) out.p_coeff.emplace(mu, v * c);
    return out;
}

// ------------------------------------------------- Murnaghan-Nakayama rule

namespace {

// beta numbers (strictly decreasing first-column hook lengths)
std::vector<int> beta_numbers(const IntPartition& lambda) {
    int k = (int)lambda.size();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    return beta;
}

IntPartition partition_from_betas(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    // strip trailing normalization: beta_i = lambda_i + (k-1-i)
    IntPartition lam;
    int k = (int)beta.size();
    for (int i = 0; i < k; ++i) {
        int part = beta[i] - (k - 1 - i);
        if (part > 0) lam.push_back(part);
    }
    return lam;
}

std::map<std::pair<IntPartition, IntPartition>, Int> mn_memo;

}  // namespace

Int irreducible_character(const IntPartition& lambda, const IntPartition& mu) {
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("character: |lambda| != |mu|");
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = mn_memo.find(key);
    if (it != mn_memo.end()) return it->second;

    int r = mu[0];
    IntPartition mu_rest(mu.begin() + 1, mu.end());
    auto beta = beta_numbers(lambda);
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        // height of the strip = number of betas strictly between b and beta[i]
        int ht = 0;
        for (int other : beta)
            if (other > b && other < beta[i]) ++ht;
        std::vector<int> nb = beta;
        nb[i] = b;
        Int sub = irreducible_character(partition_from_betas(nb), mu_rest);
        total += (ht % 2 == 0) ? sub : -sub;
    }
    mn_memo.emplace(key, total);
    return total;
}

// --------------------------------------------------------------- basics

SymFunc p_monomial(const IntPartition& mu) {
    SymFunc f;
    f.deg = (int)partition_size(mu);
    f.p_coeff.emplace(mu, Rat(1));
    return f;
}

SymFunc h_complete(int n) {
    SymFunc f;
    f.deg = n;
    for (const auto& mu : all_partitions(n)) {
        Int z;
        z_factor(mu, z);
        f.p_coeff.emplace(mu, Rat(1) / Rat(z));
    }
    if (n == 0) f.p_coeff.emplace(IntPartition{}, Rat(1));
    return f;
}

SymFunc e_elementary(int n) {
    SymFunc f;
    f.deg = n;
    for (const auto& mu : all_partitions(n)) {
        Int z;
        z_factor(mu, z);
        int eps = ((n - (int)mu.size()) % 2 == 0) ? 1 : -1;
        f.p_coeff.emplace(mu, Rat(eps) / Rat(z));
    }
    if (n == 0) f.p_coeff.emplace(IntPartition{}, Rat(1));
    return f;
}

SymFunc h_of_partition(const IntPartition& mu) {
    SymFunc f = h_complete(0);
    for (int part : mu) f = f * h_complete(part);
    return f;
}

SymFunc schur_function(const IntPartition& lambda) {
    SymFunc f;
    int n = (int)partition_size(lambda);
    f.deg = n;
    for (const auto& mu : all_partitions(n)) {
        Int chi = irreducible_character(lambda, mu);
        if (chi == 0) continue;
        Int z;
        z_factor(mu, z);
        f.p_coeff.emplace(mu, Rat(chi) / Rat(z));
    }
    return f;
}

std::map<IntPartition, Rat> schur_expand(const SymFunc& f) {
    std::map<IntPartition, Rat> out;
    if (f.is_zero()) return out;
    for (const auto& lambda : all_partitions(f.deg)) {
        Rat c = 0;
        for (auto& [mu, v] : f.p_coeff) c += v * Rat(irreducible_character(lambda, mu));
        if (c != 0) out.emplace(lambda, c);
    }
    return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int degree_cap) {
    if (f.is_zero() || g.is_zero()) return {};
    long long outdeg = (long long)f.deg * g.deg;
    if (outdeg > degree_cap)
        throw std::domain_error("plethysm: output degree exceeds cap");
    // p_k[g]: scale every part of every monomial of g by k
    auto scale = [&](int k) {
        SymFunc out;
        out.deg = g.deg * k;
        for (auto& [mu, c] : g.p_coeff) {
            IntPartition scaled = mu;
            for (auto& part : scaled) part *= k;
            out.p_coeff.emplace(scaled, c);
        }
        return out;
    };
    SymFunc total;
    total.deg = (int)outdeg;
    for (auto& [mu, c] : f.p_coeff) {
        SymFunc term;
        term.deg = 0;
        term.p_coeff.emplace(IntPartition{}, Rat(1));
        for (int part : mu) term = term * scale(part);
        total += term * c;
    }
    return total;
}

SymFunc ribbon_schur(const RankSet& S, int n) {
    SymFunc total;
    total.deg = n;
    int k = (int)S.size();
    for (int bits = 0; bits < (1 << k); ++bits) {
        RankSet T;
        for (int i = 0; i < k; ++i)
            if (bits & (1 << i)) T.push_back(S[i]);
        IntPartition comp;
        int prev = 0;
        for (int t : T) {
            comp.push_back(t - prev);
            prev = t;
        }
        comp.push_back(n - prev);
        std::sort(comp.rbegin(), comp.rend());
        SymFunc term = h_of_partition(comp);
        int sign = ((k - std::popcount((unsigned)bits)) % 2 == 0) ? 1 : -1;
        total += term * Rat(sign);
    }
    return total;
}

long long IrrepDecomposition::dim() const {
    long long s = 0;
    for (auto& [lam, m] : mult) s += m * irreducible_dimension(lam);
    return s;
}

SymFunc frobenius(const IrrepDecomposition& d) {
    SymFunc f;
    f.deg = d.n;
    for (auto& [lam, m] : d.mult) {
        if (m == 0) continue;
        f += schur_function(lam) * Rat((long)m);
    }
    return f;
}

long long irreducible_dimension(const IntPartition& lambda) {
    // hook length formula
    int rows = (int)lambda.size();
    std::vector<int> conj((size_t)(rows ? lambda[0] : 0), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda[i]; ++j) conj[j]++;
    Int num;
    mpz_fac_ui(num.get_mpz_t(), (unsigned long)partition_size(lambda));
    Int den = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda[i]; ++j)
            den *= (lambda[i] - j) + (conj[j] - i) - 1;
    Int q = num / den;
    return (long long)q.get_si();
}

int max_first_row(const std::map<IntPartition, Rat>& schur_coeffs) {
    int best = -1;
    for (auto& [lam, c] : schur_coeffs)
        if (c != 0 && !lam.empty()) best = std::max(best, lam[0]);
    return best;
}

int max_size_plus_first_row(const std::map<IntPartition, Rat>& schur_coeffs) {
    int best = -1;
    for (auto& [lam, c] : schur_coeffs)
        if (c != 0 && !lam.empty())
            best = std::max(best, (int)partition_size(lam) + lam[0]);
    return best;
}

}  // namespace latticehom
