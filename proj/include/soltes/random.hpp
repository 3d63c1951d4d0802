#ifndef SOLTES_RANDOM_HPP
#define SOLTES_RANDOM_HPP

#include <random>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

// G(n, p) with each pair independently present.
Graph gnp_random_graph(int n, double p, std::mt19937_64& rng);

// Connected G(n, p) samples over mixed densities, deterministic in the seed.
std::vector<Graph> random_connected_corpus(int count, int max_n, std::uint64_t seed);

// Connected simple 3-regular graph via the pairing model (n even, n >= 4).
Graph random_cubic_graph(int n, std::mt19937_64& rng);

}  // namespace soltes

#endif  // SOLTES_RANDOM_HPP
