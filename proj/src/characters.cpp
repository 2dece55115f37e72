#include "latticehom/characters.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace latticehom {

int FamilyCtx::poset_rank(int n) const {
    switch (family) {
        case PosetFamily::Boolean: return n;
        case PosetFamily::Partition: return n - 1;
        case PosetFamily::DDivBoolean: return n / d;
    }
    return 0;
}

bool FamilyCtx::valid_n(int n) const {
    switch (family) {
        case PosetFamily::Boolean: return n >= 1;
        case PosetFamily::Partition: return n >= 2;
        case PosetFamily::DDivBoolean: return n >= d && n % d == 0;
    }
    return false;
}

std::string FamilyCtx::name() const {
    switch (family) {
        case PosetFamily::Boolean: return "boolean";
        case PosetFamily::Partition: return "partition";
        case PosetFamily::DDivBoolean:
            return "boolean_div" + std::to_string(d);
    }
    return "?";
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    for (auto& [mu, v] : o.values) values[mu] += v;
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    for (auto& [mu, v] : o.values) values[mu] -= v;
    return *this;
}

ClassFunction trivial_character(int n) {
    ClassFunction chi;
    chi.n = n;
    for (auto& mu : all_partitions(n)) chi.values[mu] = 1;
    return chi;
}

ClassFunction regular_character(int n) {
    ClassFunction chi;
    chi.n = n;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    for (auto& mu : all_partitions(n)) chi.values[mu] = 0;
    chi.values[IntPartition(n, 1)] = Rat(fact);
    return chi;
}

// -------------------------------------------------------- lattice caching

namespace {
std::map<std::pair<int, int>, Lattice> lattice_cache;  // (family-int*16+d, n)
std::mutex cache_mutex;
int g_threads = 1;
}  // namespace

void set_character_threads(int threads) { g_threads = std::max(1, threads); }

const Lattice& cached_lattice(const FamilyCtx& ctx, int n) {
    int famkey = (int)ctx.family * 16 + (ctx.family == PosetFamily::DDivBoolean ? ctx.d : 0);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(famkey, n);
    auto it = lattice_cache.find(key);
    if (it != lattice_cache.end()) return it->second;
    Lattice L;
    switch (ctx.family) {
        case PosetFamily::Boolean: L = boolean_lattice(n); break;
        case PosetFamily::Partition: L = partition_lattice(n); break;
        case PosetFamily::DDivBoolean: L = d_divisible_boolean(n, ctx.d); break;
    }
    return lattice_cache.emplace(key, std::move(L)).first->second;
}

void clear_lattice_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    lattice_cache.clear();
}

// ------------------------------------------------------ fixed-chain counts

namespace {

// number of sigma-fixed chains with the given rank set, optionally with a
// type filter on the top element (Partition family only)
Int fixed_chain_count(const Lattice& L, const Perm& sigma, const RankSet& S,
                      const std::optional<IntPartition>& top_type,
                      const FamilyCtx& ctx) {
    if (S.empty()) return 1;
    const GradedPoset& P = L.P;
    // fixed elements per selected rank
    std::vector<std::vector<int>> fixed(S.size());
    for (size_t i = 0; i < S.size(); ++i) {
        bool is_top_level = (i + 1 == S.size());
        for (int x : P.elements_of_rank(S[i])) {
            if (P.act(sigma, x) != x) continue;
            if (is_top_level && top_type) {
                if (ctx.family != PosetFamily::Partition)
                    throw std::invalid_argument("type filter needs the partition family");
                if (!(L.set_partition_of(x).type() == *top_type)) continue;
            }
            fixed[i].push_back(x);
        }
    }
    std::vector<Int> f(fixed[0].size(), 1);
    for (size_t i = 1; i < S.size(); ++i) {
        std::vector<Int> g(fixed[i].size(), 0);
        for (size_t b = 0; b < fixed[i].size(); ++b)
            for (size_t a = 0; a < fixed[i - 1].size(); ++a)
                if (P.leq(fixed[i - 1][a], fixed[i][b])) g[b] += f[a];
        f = std::move(g);
    }
    Int total = 0;
    for (auto& v : f) total += v;
    return total;
}

// filter for a type on the top element: applies only when the rank set is
// nonempty; full type includes the singleton blocks (partition of n)
std::map<std::string, ClassFunction> alpha_memo;
std::mutex alpha_mutex;

std::string alpha_key(const FamilyCtx& ctx, const RankSet& S, int n,
                      const std::optional<IntPartition>& top_type) {
    std::ostringstream os;
    os << ctx.name() << ":" << n << ":S=";
    for (int s : S) os << s << ".";
    if (top_type) os << ":t=" << partition_to_string(*top_type);
    return os.str();
}

// Optional persistent memo directory (LATTICEHOM_CACHE).
std::filesystem::path cache_dir() {
    const char* env = std::getenv("LATTICEHOM_CACHE");
    return env ? std::filesystem::path(env) : std::filesystem::path();
}

std::string cache_file_name(const std::string& key) {
    std::string s = "alpha_";
    for (char c : key) s += (std::isalnum((unsigned char)c) ? c : '_');
    return s + ".json";
}

bool load_cached_alpha(const std::string& key, int n, ClassFunction& chi) {
    auto dir = cache_dir();
    if (dir.empty()) return false;
    std::ifstream in(dir / cache_file_name(key));
    if (!in) return false;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        chi.n = n;
        for (auto& item : j.at("values")) {
            IntPartition mu = item.at("cycle_type").get<IntPartition>();
            chi.values[mu] = Rat(item.at("value").get<std::string>());
        }
        return true;
    } catch (...) {
        return false;
    }
}

void store_cached_alpha(const std::string& key, const ClassFunction& chi) {
    auto dir = cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::json vals = nlohmann::json::array();
    for (auto& [mu, v] : chi.values) {
        nlohmann::json item;
        item["cycle_type"] = mu;
        item["value"] = to_string(v);
        vals.push_back(item);
    }
    nlohmann::json j;
    j["values"] = vals;
    std::ofstream out(dir / cache_file_name(key), std::ios::binary);
    if (out) out << j.dump();
}

ClassFunction alpha_impl(const FamilyCtx& ctx, const RankSet& S, int n,
                         const std::optional<IntPartition>& top_type) {
    if (!ctx.valid_n(n)) throw std::invalid_argument("alpha: invalid n for family");
    std::string key = alpha_key(ctx, S, n, top_type);
    {
        std::lock_guard<std::mutex> lock(alpha_mutex);
        auto it = alpha_memo.find(key);
        if (it != alpha_memo.end()) return it->second;
    }
    {
        ClassFunction cached;
        if (load_cached_alpha(key, n, cached)) {
            std::lock_guard<std::mutex> lock(alpha_mutex);
            alpha_memo.emplace(key, cached);
            return cached;
        }
    }
    const Lattice& L = cached_lattice(ctx, n);
    // ranks may reach the full rank here: Whitney homology components sum
    // over intervals [0, u] including u = top (e.g. the essential part of a
    // single-block type), so chains through the top element are counted
    int prev = 0;
    for (int s : S) {
        if (s <= prev || s > L.P.top_rank())
            throw std::invalid_argument("alpha: bad rank set");
        prev = s;
    }
    auto types = all_partitions(n);
    ClassFunction chi;
    chi.n = n;
    auto value_at = [&](const IntPartition& mu) {
        Perm sigma = perm_of_cycle_type(mu, n);
        return Rat(fixed_chain_count(L, sigma, S, top_type, ctx));
    };
    if (g_threads <= 1 || types.size() < 4) {
        for (auto& mu : types) chi.values[mu] = value_at(mu);
    } else {
        std::vector<std::future<Rat>> futs;
        for (auto& mu : types)
            futs.push_back(std::async(std::launch::async, [&, mu]() { return value_at(mu); }));
        for (size_t i = 0; i < types.size(); ++i) chi.values[types[i]] = futs[i].get();
    }
    store_cached_alpha(key, chi);
    std::lock_guard<std::mutex> lock(alpha_mutex);
    alpha_memo.emplace(key, chi);
    return chi;
}

}  // namespace

void clear_character_memo() {
    std::lock_guard<std::mutex> lock(alpha_mutex);
    alpha_memo.clear();
}

ClassFunction character_alpha(const FamilyCtx& ctx, const RankSet& S, int n) {
    return alpha_impl(ctx, S, n, std::nullopt);
}

ClassFunction character_alpha_filtered(const FamilyCtx& ctx, const RankSet& S, int n,
                                       const std::optional<IntPartition>& top_type) {
    return alpha_impl(ctx, S, n, top_type);
}

ClassFunction character_beta(const FamilyCtx& ctx, const RankSet& S, int n) {
    ClassFunction total;
    total.n = n;
    for (auto& mu : all_partitions(n)) total.values[mu] = 0;
    int k = (int)S.size();
    for (int bits = 0; bits < (1 << k); ++bits) {
        RankSet T;
        for (int i = 0; i < k; ++i)
            if (bits & (1 << i)) T.push_back(S[i]);
        ClassFunction a = character_alpha(ctx, T, n);
        int sign = ((k - (int)T.size()) % 2 == 0) ? 1 : -1;
        if (sign > 0)
            total += a;
        else
            total -= a;
    }
    return total;
}

static ClassFunction wh_impl(const FamilyCtx& ctx, const RankSet& S, int n,
                             const std::optional<IntPartition>& type) {
    if (S.empty()) throw std::invalid_argument("character_wh: S must be nonempty");
    RankSet body(S.begin(), S.end() - 1);
    ClassFunction total;
    total.n = n;
    for (auto& mu : all_partitions(n)) total.values[mu] = 0;
    int k = (int)body.size();
    for (int bits = 0; bits < (1 << k); ++bits) {
        RankSet T;
        for (int i = 0; i < k; ++i)
            if (bits & (1 << i)) T.push_back(body[i]);
        T.push_back(S.back());
        ClassFunction a = character_alpha_filtered(ctx, T, n, type);
        int sign = ((k - ((int)T.size() - 1)) % 2 == 0) ? 1 : -1;
        if (sign > 0)
            total += a;
        else
            total -= a;
    }
    return total;
}

ClassFunction character_wh(const FamilyCtx& ctx, const RankSet& S, int n) {
    return wh_impl(ctx, S, n, std::nullopt);
}

ClassFunction character_wh_component(const FamilyCtx& ctx, const RankSet& S,
                                     const IntPartition& type, int n) {
    if (partition_size(type) != n)
        throw std::invalid_argument("character_wh_component: type must partition n");
    return wh_impl(ctx, S, n, type);
}

IrrepDecomposition decompose(const ClassFunction& chi) {
    if (chi.n > 12) throw std::domain_error("decompose: n exceeds the n<=12 guard");
    IrrepDecomposition dec;
    dec.n = chi.n;
    for (auto& lambda : all_partitions(chi.n)) {
        Rat m = 0;
        for (auto& [mu, v] : chi.values) {
            Int z;
            z_factor(mu, z);
            m += v * Rat(irreducible_character(lambda, mu)) / Rat(z);
        }
        if (m == 0) continue;
        if (!is_integer(m) || m < 0) {
            std::ostringstream os;
            os << "decompose: multiplicity of (" << partition_to_string(lambda)
               << ") is " << to_string(m) << ", not a nonnegative integer";
            throw std::domain_error(os.str());
        }
        dec.mult[lambda] = (long long)m.get_num().get_si();
    }
    return dec;
}

SymFunc frobenius(const ClassFunction& chi) {
    SymFunc f;
    f.deg = chi.n;
    for (auto& [mu, v] : chi.values) {
        if (v == 0) continue;
        Int z;
        z_factor(mu, z);
        f.p_coeff.emplace(mu, v / Rat(z));
    }
    return f;
}

}  // namespace latticehom
