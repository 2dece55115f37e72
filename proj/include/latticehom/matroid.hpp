#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latticehom/poset.hpp"

namespace latticehom {

// Matroid on a small ordered ground set, stored by bases and circuits as
// bitmasks over ground positions.  Either form may be supplied; the other is
// derived.  Desk-scale only (ground size <= 20).
struct Matroid {
    int m = 0;  // ground set size
    std::vector<std::string> labels;
    std::vector<uint32_t> bases;
    std::vector<uint32_t> circuits;
    int rk = 0;

    bool independent(uint32_t X) const;
    int rank(uint32_t X) const;
    uint32_t closure(uint32_t X) const;

    // Basis axioms (equicardinality + exchange), checked exhaustively.
    // Throws std::invalid_argument naming a witness pair on failure.
    void validate() const;

    static Matroid from_bases(int m, std::vector<uint32_t> bases,
                              std::vector<std::string> labels = {});
    static Matroid from_circuits(int m, std::vector<uint32_t> circuits,
                                 std::vector<std::string> labels = {});
    // Graphic matroid of a graph on {1..nvert}; ground set = edges in the
    // given order.
    static Matroid graphic(int nvert, const std::vector<std::pair<int, int>>& edges);
    static Matroid complete_graph(int nvert);  // K_n, edges in lex order
    static Matroid uniform(int k, int m);      // U_{k,m}
    static Matroid free_matroid(int m);        // all sets independent
};

}  // namespace latticehom
