#include "soltes/random.hpp"

#include <algorithm>
#include <set>

namespace soltes {

Graph gnp_random_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) fail(Errc::bad_parameter, "n must be positive");
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> random_connected_corpus(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    const double densities[] = {0.08, 0.15, 0.3, 0.5};
    std::vector<Graph> out;
    out.reserve(count);
    std::size_t attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        int n = pick_n(rng);
        double p = densities[attempt++ % 4];
        Graph g = gnp_random_graph(n, p, rng);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

Graph random_cubic_graph(int n, std::mt19937_64& rng) {
    if (n < 4 || n % 2 != 0) fail(Errc::bad_parameter, "cubic graphs need even n >= 4");
    while (true) {
        std::vector<Vertex> stubs;
        stubs.reserve(3 * n);
        for (Vertex v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<Vertex, Vertex>> seen;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            Vertex a = stubs[i], b = stubs[i + 1];
            if (a == b) simple = false;
            else if (!seen.emplace(std::min(a, b), std::max(a, b)).second) simple = false;
        }
        if (!simple) continue;
        Graph g = Graph::from_edge_list(n, {seen.begin(), seen.end()});
        if (is_connected(g)) return g;
    }
}

}  // namespace soltes
