#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latticehom/poset.hpp"

namespace latticehom {

// Job description shared by the command-line driver and tests.
struct JobConfig {
    std::string command;  // basis | betti | character | decompose |
                          // stability-scan | verify-all
    std::string family = "boolean";  // boolean | partition | d2boolean | matroid
    std::string matroid_file;        // when family == matroid (JSON)
    RankSet S;
    int n_lo = 0, n_hi = 0;          // single n uses n_lo == n_hi
    std::string which = "beta";      // alpha | beta | wh
    std::string atom_order = "natural";
    std::string out_path;            // empty writes to the stream
    int threads = 1;
    long long element_cap = 1 << 16;
    long long groupsum_cap = 10'000'000;
    int d = 2;                       // d-divisible parameter
    std::vector<int> only_criteria;  // verify-all filter (debugging aid)
};

RankSet parse_rank_set(const std::string& csv);       // "2,5"
std::pair<int, int> parse_n_range(const std::string& spec);  // "4..10" or "7"

// Runs a job; artifacts go to out_path when set, else to `out`.  Guard or
// input violations print a machine-readable {"error": ...} JSON to `err` and
// return a nonzero status.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace latticehom
