#ifndef SOLTES_PROPS_HPP
#define SOLTES_PROPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

// Executable structural properties of vertex deletion, run over a corpus of
// connected graphs. A counterexample is a corpus graph that satisfies the
// hypothesis but violates the conclusion.

struct PropResult {
    std::string name;
    std::int64_t graphs_checked = 0;
    std::int64_t hypothesis_hits = 0;
    std::vector<Graph> counterexamples;  // capped at 5

    bool passed() const { return counterexamples.empty(); }
};

// min degree 2 and delta_w constant over all vertices (no cut vertex)
// implies the graph is a cycle.
PropResult check_constant_delta_degree_two(const std::vector<Graph>& corpus, int workers = 0);

// n >= 2 and diameter <= 2 implies some vertex is a cut vertex or has
// delta_w > 0.
PropResult check_diameter_two_positive(const std::vector<Graph>& corpus, int workers = 0);

// 2-connected with diameter = radius = 3 implies some vertex has delta_w > 0.
PropResult check_self_centered_three_positive(const std::vector<Graph>& corpus, int workers = 0);

// A non-adjacent dominated vertex v (N(v) contained in N(v') for some
// non-adjacent v') with G\v connected has diff(G,v) = 0, hence
// delta_w(G,v) = sigma(v) > 0.
PropResult check_dominated_zero_detour(const std::vector<Graph>& corpus, int workers = 0);

std::vector<PropResult> run_all_props(const std::vector<Graph>& corpus, int workers = 0);

}  // namespace soltes

#endif  // SOLTES_PROPS_HPP
