#ifndef SOLTES_ENUMERATE_HPP
#define SOLTES_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

// Exhaustive small-graph catalogue, one representative per isomorphism
// class, for the desk-scale property suites. Supports n <= 11.
//
// Keys pack the upper adjacency triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// into the low bits of a 64-bit word; the stored key of a graph is the
// minimum over all vertex orderings (computed by colour refinement plus
// backtracking over the remaining colour classes).

std::uint64_t canonical_key(const Graph& g);

Graph graph_from_key(int n, std::uint64_t key);

class GraphEnumerator {
public:
    // Canonical keys of all graphs on exactly n vertices, sorted.
    const std::vector<std::uint64_t>& keys(int n);

    // Connected graphs on exactly n vertices.
    std::vector<Graph> connected(int n);

private:
    std::vector<std::vector<std::uint64_t>> levels_;  // levels_[n-1] = order-n keys
};

}  // namespace soltes

#endif  // SOLTES_ENUMERATE_HPP
