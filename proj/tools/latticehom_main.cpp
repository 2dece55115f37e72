#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "latticehom/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ribbon homology bases, characters and stability scans for "
                 "rank-selected homology of geometric lattices"};
    app.require_subcommand(1);

    latticehom::JobConfig cfg;
    std::string S_spec, n_spec = "0";

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        sub->add_option("--family", cfg.family,
                        "boolean | partition | d2boolean | matroid");
        sub->add_option("--matroid", cfg.matroid_file, "matroid JSON file");
        sub->add_option("--S", S_spec, "rank set, comma separated (e.g. 2,5)");
        if (needs_n) sub->add_option("--n", n_spec, "n or inclusive range a..b");
        sub->add_option("--atom-order", cfg.atom_order,
                        "'natural' or a comma permutation of atom positions");
        sub->add_option("--out", cfg.out_path, "output file (.json selects JSON)");
        sub->add_option("--threads", cfg.threads, "worker threads");
        sub->add_option("--element-cap", cfg.element_cap, "element/facet guard");
        sub->add_option("--groupsum-cap", cfg.groupsum_cap, "group sum guard");
        sub->add_option("--d", cfg.d, "divisibility for d2boolean");
    };

    auto* basis = app.add_subcommand("basis", "export the ribbon homology basis");
    add_common(basis, true);
    auto* betti = app.add_subcommand("betti", "top Betti number of the rank selection");
    add_common(betti, true);
    auto* character = app.add_subcommand("character", "class function table");
    add_common(character, true);
    character->add_option("--which", cfg.which, "alpha | beta | wh");
    auto* decompose = app.add_subcommand("decompose", "irreducible decomposition table");
    add_common(decompose, true);
    decompose->add_option("--which", cfg.which, "alpha | beta | wh");
    auto* scan = app.add_subcommand("stability-scan", "representation stability scan");
    add_common(scan, true);
    scan->add_option("--which", cfg.which, "alpha | beta | wh");
    auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
    add_common(verify, false);
    verify->add_option("--criteria", cfg.only_criteria, "criterion ids to run");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.S = latticehom::parse_rank_set(S_spec);
        auto [lo, hi] = latticehom::parse_n_range(n_spec);
        cfg.n_lo = lo;
        cfg.n_hi = hi;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return latticehom::run_job(cfg, std::cout, std::cerr);
}
