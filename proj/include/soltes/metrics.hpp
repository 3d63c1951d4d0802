#ifndef SOLTES_METRICS_HPP
#define SOLTES_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

// BFS from one root. dist uses -1 as the unreachable marker; layer_sizes[i]
// counts the vertices at distance exactly i; eccentricity is the largest
// finite distance.
struct LayerProfile {
    Vertex root = 0;
    std::vector<Vertex> dist;
    std::vector<std::int64_t> layer_sizes;
    Vertex eccentricity = 0;

    std::int64_t reached() const {
        std::int64_t total = 0;
        for (auto c : layer_sizes) total += c;
        return total;
    }
};

LayerProfile bfs_layers(const Graph& g, Vertex root);

// Total distance over unordered pairs. Requires a connected graph.
std::int64_t wiener(const Graph& g);

// Sum of distances from v to every vertex. Requires a connected graph.
std::int64_t transmission(const Graph& g, Vertex v);

// Total detour of v: sum over unordered pairs of G\v of d_{G\v} - d_G.
// Throws CutVertex when G\v is disconnected.
std::int64_t diff(const Graph& g, Vertex v);

// W(G) - W(G\v); nullopt when v is a cut vertex. Evaluated both by full
// recomputation and as transmission - diff; the two routes must agree.
std::optional<std::int64_t> delta_w(const Graph& g, Vertex v);

enum class VertexStatus { soltes, positive, negative, cut_vertex };
const char* status_name(VertexStatus s);

struct VertexRecord {
    Vertex v = 0;
    std::int64_t sigma = 0;
    std::optional<std::int64_t> detour;  // diff(G,v); empty for cut vertices
    std::optional<std::int64_t> delta;   // W(G)-W(G\v); empty for cut vertices
    VertexStatus status = VertexStatus::cut_vertex;
};

struct VertexClassification {
    Vertex n = 0;
    std::int64_t m = 0;
    std::int64_t wiener = 0;
    std::vector<VertexRecord> vertices;  // ordered by vertex id
    Vertex soltes_count = 0;

    double alpha() const { return n == 0 ? 0.0 : double(soltes_count) / double(n); }
    // Defined and equal delta on every vertex (no cut vertices).
    std::optional<std::int64_t> common_delta() const;
    bool all_soltes() const { return n > 0 && soltes_count == n; }
    // W(G) <= W(G\v) for every v, all deletions connected.
    bool negative_soltes() const;
};

struct ClassifyOptions {
    int workers = 0;     // <= 0: hardware concurrency
    bool verify = true;  // re-derive delta via per-pair detour accounting and check the identity
};

VertexClassification classify_vertices(const Graph& g, const ClassifyOptions& opt = {});

// has_dominated_pair: some v != v' with N(v)\{v'} contained in N(v').
// The non-adjacent flag restricts to non-adjacent pairs (open neighborhoods),
// the closed flag to N[v] contained in N[v'].
struct StructuralPredicates {
    bool has_dominated_pair = false;
    bool has_nonadjacent_dominated_pair = false;
    bool has_closed_dominated_pair = false;
    Vertex min_degree = 0;
    Vertex diameter = 0;
    Vertex radius = 0;
    bool is_self_centered = false;
};

StructuralPredicates structural_predicates(const Graph& g);

// Closed forms: W(C_n) = n^3/8 (even) or n(n^2-1)/8 (odd); W(P_n) = C(n+1,3).
std::int64_t wiener_cycle(std::int64_t n);
std::int64_t wiener_path(std::int64_t n);

std::string classification_to_json(const VertexClassification& c);
std::string classification_to_csv(const VertexClassification& c);

}  // namespace soltes

#endif  // SOLTES_METRICS_HPP
