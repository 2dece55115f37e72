#include "latticehom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "latticehom/acceptance.hpp"
#include "latticehom/homology.hpp"
#include "latticehom/serialize.hpp"
#include "latticehom/stability.hpp"

namespace latticehom {

RankSet parse_rank_set(const std::string& csv) {
    RankSet S;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) S.push_back(std::stoi(tok));
    return S;
}

std::pair<int, int> parse_n_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(spec);
        return {n, n};
    }
    int lo = std::stoi(spec.substr(0, dots));
    int hi = std::stoi(spec.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty n range");
    return {lo, hi};
}

namespace {

struct JobLattice {
    Lattice L;
    bool symmetric = false;  // carries an S_n action usable for characters
    FamilyCtx ctx;
};

AtomOrder make_order(const Lattice& L, const std::string& spec) {
    if (spec == "natural" || spec.empty()) return AtomOrder::natural(L.num_atoms());
    RankSet list = parse_rank_set(spec);
    std::vector<int> order;
    for (int x : list) order.push_back(x - 1);  // 1-based positions on the CLI
    if ((int)order.size() != L.num_atoms())
        throw std::invalid_argument("atom order must list every atom exactly once");
    return AtomOrder::from_order(order);
}

JobLattice build_lattice(const JobConfig& cfg, int n) {
    JobLattice out;
    LatticeGuards guards;
    guards.flats_cap = (size_t)cfg.element_cap;
    if (cfg.family == "boolean") {
        out.L = boolean_lattice(n, guards);
        out.symmetric = true;
        out.ctx = FamilyCtx{PosetFamily::Boolean};
    } else if (cfg.family == "partition") {
        out.L = partition_lattice(n, guards);
        out.symmetric = true;
        out.ctx = FamilyCtx{PosetFamily::Partition};
    } else if (cfg.family == "d2boolean" || cfg.family == "ddivboolean") {
        out.L = d_divisible_boolean(n, cfg.d, guards);
        out.symmetric = true;
        out.ctx = FamilyCtx{PosetFamily::DDivBoolean, cfg.d};
    } else if (cfg.family == "matroid") {
        std::ifstream in(cfg.matroid_file);
        if (!in) throw std::invalid_argument("cannot open matroid file");
        std::stringstream ss;
        ss << in.rdbuf();
        out.L = lattice_of_flats(matroid_from_json(ss.str()), guards);
        out.symmetric = false;
    } else {
        throw std::invalid_argument("unknown family: " + cfg.family);
    }
    return out;
}

FamilyCtx family_ctx_of(const JobConfig& cfg) {
    if (cfg.family == "boolean") return FamilyCtx{PosetFamily::Boolean};
    if (cfg.family == "partition") return FamilyCtx{PosetFamily::Partition};
    if (cfg.family == "d2boolean" || cfg.family == "ddivboolean")
        return FamilyCtx{PosetFamily::DDivBoolean, cfg.d};
    throw std::invalid_argument("family has no symmetric group action: " + cfg.family);
}

void emit(const JobConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out_path);
    f << text;
}

bool wants_json(const JobConfig& cfg) {
    return cfg.out_path.size() >= 5 &&
           cfg.out_path.substr(cfg.out_path.size() - 5) == ".json";
}

ClassFunction compute_character(const JobConfig& cfg, const FamilyCtx& ctx, int n) {
    if (cfg.which == "alpha") return character_alpha(ctx, cfg.S, n);
    if (cfg.which == "beta") return character_beta(ctx, cfg.S, n);
    if (cfg.which == "wh") return character_wh(ctx, cfg.S, n);
    throw std::invalid_argument("unknown module kind: " + cfg.which);
}

int run_job_inner(const JobConfig& cfg, std::ostream& out) {
    set_character_threads(cfg.threads);
    if (cfg.command == "basis") {
        JobLattice jl = build_lattice(cfg, cfg.n_lo);
        AtomOrder ord = make_order(jl.L, cfg.atom_order);
        auto basis = ribbon_basis_beta(jl.L, ord, cfg.S);
        emit(cfg, out, basis_to_json(jl.L, basis));
        return 0;
    }
    if (cfg.command == "betti") {
        JobLattice jl = build_lattice(cfg, cfg.n_lo);
        HomologyGuards g;
        g.max_facets = (size_t)cfg.element_cap * 64;
        emit(cfg, out, std::to_string(betti_top(jl.L, cfg.S, g)));
        return 0;
    }
    if (cfg.command == "character") {
        FamilyCtx ctx = family_ctx_of(cfg);
        ClassFunction chi = compute_character(cfg, ctx, cfg.n_lo);
        emit(cfg, out,
             wants_json(cfg) ? class_function_to_json(chi) : class_function_to_csv(chi));
        return 0;
    }
    if (cfg.command == "decompose") {
        FamilyCtx ctx = family_ctx_of(cfg);
        auto dec = decompose(compute_character(cfg, ctx, cfg.n_lo));
        emit(cfg, out,
             wants_json(cfg) ? decomposition_to_json(dec) : decomposition_to_csv(dec));
        return 0;
    }
    if (cfg.command == "stability-scan") {
        FamilyCtx ctx = family_ctx_of(cfg);
        ModuleKind kind = cfg.which == "alpha" ? ModuleKind::Alpha
                          : cfg.which == "wh"  ? ModuleKind::WH
                                               : ModuleKind::Beta;
        int bound = kind == ModuleKind::Alpha ? predicted_alpha_bound(ctx, cfg.S)
                                              : predicted_beta_bound(ctx, cfg.S);
        std::vector<int> ns;
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) ns.push_back(n);
        auto rep = scan_module(ctx, kind, cfg.S, ns, bound);
        emit(cfg, out, stability_report_to_json(rep));
        return rep.inconclusive ? 3 : 0;
    }
    if (cfg.command == "verify-all") {
        AcceptanceConfig acfg;
        acfg.groupsum_cap = cfg.groupsum_cap;
        acfg.element_cap = (size_t)cfg.element_cap;
        acfg.threads = cfg.threads;
        acfg.only = cfg.only_criteria;
        auto results = run_acceptance(acfg);
        for (auto& r : results) {
            std::ostringstream line;
            line << "C" << (r.id < 10 ? "0" : "") << r.id << " "
                 << (r.pass ? "PASS" : (r.inconclusive ? "INCONCLUSIVE" : "FAIL"))
                 << " (" << (int)(r.seconds * 1000) << " ms) " << r.name;
            if (!r.pass) line << " -- " << r.detail;
            out << line.str() << "\n";
        }
        std::string summary = acceptance_summary_json(results);
        if (!cfg.out_path.empty()) {
            std::ofstream f(cfg.out_path, std::ios::binary);
            f << summary;
        } else {
            out << summary << "\n";
        }
        return all_passed(results) ? 0 : 1;
    }
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_job_inner(cfg, out);
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["error"] = e.what();
        err << j.dump() << "\n";
        return 2;
    }
}

}  // namespace latticehom
