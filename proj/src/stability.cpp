#include "latticehom/stability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latticehom {

PaddedDecomposition PaddedDecomposition::from(const IrrepDecomposition& dec) {
    PaddedDecomposition out;
    for (auto& [lam, m] : dec.mult) {
        if (m == 0) continue;
        IntPartition body(lam.begin() + 1, lam.end());
        out.mult[body] += m;
    }
    return out;
}

bool PaddedDecomposition::pads_validly_at(int n) const {
    for (auto& [body, m] : mult) {
        if (m == 0) continue;
        long long size = partition_size(body);
        int head = body.empty() ? 0 : body[0];
        if (n - size < head) return false;
    }
    return true;
}

StabilityReport stability_scan(const std::map<int, IrrepDecomposition>& decs,
                               int predicted_bound) {
    StabilityReport rep;
    rep.predicted_bound = predicted_bound;
    std::vector<int> ns;
    for (auto& [n, d] : decs) ns.push_back(n);
    std::sort(ns.begin(), ns.end());
    for (int n : ns) rep.scanned[n] = PaddedDecomposition::from(decs.at(n));

    std::vector<int> at_or_above, below;
    for (int n : ns) (n >= predicted_bound ? at_or_above : below).push_back(n);
    if (at_or_above.size() < 2 || below.empty()) {
        rep.inconclusive = true;
        rep.detail = "scan range too short around the predicted bound";
        return rep;
    }

    const PaddedDecomposition& target = rep.scanned.at(at_or_above.front());
    bool agree = true;
    for (int n : at_or_above) {
        if (!(rep.scanned.at(n) == target) || !target.pads_validly_at(n)) {
            agree = false;
            std::ostringstream os;
            os << "padded multiplicities at n=" << n
               << " disagree with n=" << at_or_above.front();
            rep.detail = os.str();
            break;
        }
    }
    if (!agree) {
        rep.sharp = false;
        return rep;
    }
    // least scanned point from which agreement holds backwards
    int stable = at_or_above.front();
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
        if (rep.scanned.at(*it) == target && target.pads_validly_at(*it))
            stable = *it;
        else
            break;
    }
    rep.stable_at = stable;
    if (stable < predicted_bound) {
        std::ostringstream os;
        os << "agreement already holds at n=" << stable << " below the bound";
        rep.detail = os.str();
        return rep;
    }
    // witness: body changing at the largest scanned point below stable_at
    int prev = -1;
    for (int n : below)
        if (n < stable) prev = std::max(prev, n);
    if (prev < 0) {
        rep.inconclusive = true;
        rep.detail = "no scanned point below the stable point";
        return rep;
    }
    // the predicted bound must lie in the gap (prev, stable]
    if (predicted_bound <= prev) {
        rep.detail = "bound below the last disagreeing point";
        return rep;
    }
    const PaddedDecomposition& pd = rep.scanned.at(prev);
    std::ostringstream w;
    if (!pd.pads_validly_at(prev)) {
        w << "padding invalid at n=" << prev;
    } else {
        for (auto& [body, m] : target.mult) {
            auto it = pd.mult.find(body);
            long long pm = (it == pd.mult.end()) ? 0 : it->second;
            if (pm != m) {
                w << "(" << partition_to_string(body) << "): " << pm << " -> " << m
                  << " across n=" << prev << "..";
                break;
            }
        }
        if (w.str().empty()) {
            for (auto& [body, m] : pd.mult) {
                if (!target.mult.count(body)) {
                    w << "(" << partition_to_string(body) << "): " << m
                      << " -> 0 across n=" << prev << "..";
                    break;
                }
            }
        }
    }
    if (w.str().empty()) {
        // no change at prev: the module stabilized before the bound
        rep.stable_at = prev;
        rep.detail = "no multiplicity change below the bound";
        return rep;
    }
    rep.witness = w.str();
    rep.sharp = true;
    return rep;
}

std::map<int, IrrepDecomposition> decomposition_series(const FamilyCtx& ctx,
                                                       ModuleKind kind,
                                                       const RankSet& S,
                                                       const std::vector<int>& ns) {
    std::map<int, IrrepDecomposition> out;
    for (int n : ns) {
        if (!ctx.valid_n(n)) continue;  // outside the family (e.g. d does not divide n)
        IrrepDecomposition dec;
        dec.n = n;
        int rank = ctx.poset_rank(n);
        bool valid_S = !S.empty() && S.back() <= rank - 1;
        if (S.empty()) valid_S = (kind != ModuleKind::WH);
        if (valid_S) {
            ClassFunction chi;
            switch (kind) {
                case ModuleKind::Alpha: chi = character_alpha(ctx, S, n); break;
                case ModuleKind::Beta: chi = character_beta(ctx, S, n); break;
                case ModuleKind::WH: chi = character_wh(ctx, S, n); break;
            }
            dec = decompose(chi);
        }
        out[n] = dec;  // zero module when the rank set is out of range
    }
    return out;
}

StabilityReport scan_module(const FamilyCtx& ctx, ModuleKind kind, const RankSet& S,
                            const std::vector<int>& ns, int predicted_bound) {
    return stability_scan(decomposition_series(ctx, kind, S, ns), predicted_bound);
}

static int family_kP(const FamilyCtx& ctx) {
    switch (ctx.family) {
        case PosetFamily::Boolean: return 2;
        case PosetFamily::Partition: return 4;
        case PosetFamily::DDivBoolean: return 2 * ctx.d;
    }
    return 0;
}

int predicted_beta_bound(const FamilyCtx& ctx, const RankSet& S) {
    return family_kP(ctx) * S.back() - (int)S.size() + 1;
}

int predicted_alpha_bound(const FamilyCtx& ctx, const RankSet& S) {
    return family_kP(ctx) * S.back();
}

StabilityReport chain_module_stability(const FamilyCtx& ctx, const RankSet& S,
                                       const std::vector<int>& ns) {
    return scan_module(ctx, ModuleKind::Alpha, S, ns, predicted_alpha_bound(ctx, S));
}

IrrepDecomposition essential_part(const RankSet& S, const IntPartition& mu) {
    for (int part : mu)
        if (part < 2)
            throw std::invalid_argument("essential_part: mu must have no part of size 1");
    int maxS = S.back();
    if (partition_size(mu) - (long long)mu.size() != maxS)
        throw std::invalid_argument("essential_part: |mu| - l(mu) must equal max S");
    int n0 = (int)partition_size(mu);
    FamilyCtx ctx{PosetFamily::Partition};
    return decompose(character_wh_component(ctx, S, mu, n0));
}

bool essential_part_identity_holds(const RankSet& S, const IntPartition& mu, int n) {
    int n0 = (int)partition_size(mu);
    if (n <= n0) throw std::invalid_argument("need n > |mu|");
    IntPartition full = mu;
    for (int i = 0; i < n - n0; ++i) full.push_back(1);
    FamilyCtx ctx{PosetFamily::Partition};
    SymFunc lhs = frobenius(character_wh_component(ctx, S, full, n));
    SymFunc rhs = h_complete(n - n0) * frobenius(essential_part(S, mu));
    return lhs == rhs;
}

std::vector<IntPartition> component_types(int maxS, int size_cap) {
    std::vector<IntPartition> out;
    for (int size = 2; size <= size_cap; ++size) {
        for (const auto& mu : partitions_min_part(size, 2)) {
            if (partition_size(mu) - (long long)mu.size() == maxS) out.push_back(mu);
        }
    }
    return out;
}

int refined_bound_offset(const IntPartition& mu) {
    int k = 0;
    for (int part : mu)
        if (part >= 4) k += part - 3;
    return k;
}

ComponentBoundReport component_bound_check(const RankSet& S, int size_cap) {
    ComponentBoundReport rep;
    int maxS = S.back();
    auto types = component_types(maxS, size_cap);
    if (types.empty()) {
        rep.inconclusive = true;
        rep.failures.push_back("no component types within the size cap");
        return rep;
    }
    for (const auto& mu : types) {
        IrrepDecomposition ess = essential_part(S, mu);
        std::map<IntPartition, Rat> coeffs;
        for (auto& [lam, m] : ess.mult) coeffs[lam] = Rat((long)m);
        int stat = max_size_plus_first_row(coeffs);
        int bound = 4 * maxS - (int)S.size() + 1 - refined_bound_offset(mu);
        std::ostringstream line;
        line << "mu=(" << partition_to_string(mu) << "): max(|lam|+lam1)=" << stat
             << " vs bound " << bound;
        if (stat > bound) {
            rep.ok = false;
            rep.failures.push_back(line.str());
        }
        // min-part bound: n >= 2k/(k-1) max S when every part >= k
        int minpart = mu.empty() ? 0 : mu.back();
        if (minpart >= 2 && stat >= 0) {
            // stat <= 2k/(k-1) maxS  <=>  (k-1) stat <= 2k maxS
            if ((long long)(minpart - 1) * stat > 2LL * minpart * maxS) {
                rep.ok = false;
                std::ostringstream os;
                os << "min-part bound fails for mu=(" << partition_to_string(mu) << ")";
                rep.failures.push_back(os.str());
            }
        }
        rep.checked.push_back(line.str());
    }
    return rep;
}

bool hemmer_stabilization_holds(const IntPartition& lambda, int k) {
    if (lambda.empty() || k < lambda[0]) return true;  // hypothesis requires k >= lambda_1
    auto prod_coeffs = [&](int kk) {
        SymFunc f = schur_function(lambda) * h_complete(kk);
        return schur_expand(f);
    };
    auto a = prod_coeffs(k);
    auto b = prod_coeffs(k + 1);
    // for k >= lambda_1 the lift mu -> (mu_1+1, mu_2, ...) is a bijection of
    // supports, so the lifted expansion must equal the next one exactly
    std::map<IntPartition, Rat> lifted;
    for (auto& [mu, c] : a) {
        IntPartition up = mu;
        if (up.empty())
            up.push_back(1);
        else
            up[0] += 1;
        lifted[up] = c;
    }
    return lifted == b;
}

}  // namespace latticehom
