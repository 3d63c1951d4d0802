#ifndef SOLTES_TRANSFORMS_HPP
#define SOLTES_TRANSFORMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

// Bijection between arc-graph vertex ids and ordered pairs (tail, head).
// Arc ids enumerate tails in increasing order, heads in adjacency order, so
// arc id = arc_offset[tail] + rank of head among tail's neighbors.
struct ArcIndex {
    struct Arc {
        Vertex tail = 0;
        Vertex head = 0;
    };
    std::vector<Arc> arcs;

    Vertex size() const { return static_cast<Vertex>(arcs.size()); }
};

// Vertices are the 2m arcs of g; (u,v) ~ (v,u), and arcs with the same tail
// form a clique. Equals the line graph of the full subdivision.
std::pair<Graph, ArcIndex> arc_graph(const Graph& g);

// Replace each listed edge uv by u-m-v; the fresh vertex for the i-th listed
// edge gets id n+i.
Graph subdivide(const Graph& g, const std::vector<EdgeRef>& edges);

// Vertices are the edges of g in sorted (u<v) lexicographic order; two are
// adjacent when the edges share an endpoint.
Graph line_graph(const Graph& g);

// For the i-th matching edge uv, add vertex n+i adjacent to exactly u and v.
Graph matching_apex(const Graph& g, const std::vector<EdgeRef>& matching);

// Compensating tree recipe: x is the distance sum the tree must present to
// every target vertex w with min(d(w,u), d(w,v)) = 2k-1 whose shortest paths
// into the tree pass through {u, v}.
struct BalancerPlan {
    std::int64_t x = 0;
    int k = 0;
    std::int64_t ell = 0;  // largest l with C(l,2) - C(2k,2) <= x
    std::int64_t y = 0;    // x + C(2k,2) - C(l,2)

    struct Attachment {
        Vertex vertex;                 // id in the output graph
        Vertex attached_to;            // -1 = adjacent to both u and v
        std::int64_t target_distance;  // intended d(w, vertex)
    };
    std::vector<Attachment> recipe;

    std::int64_t tree_order() const { return static_cast<std::int64_t>(recipe.size()); }
};

// Appends the tree to the edge uv. The first path vertex is adjacent to both
// u and v; path vertices sit at distances 2k, 2k+1, ... from the targets.
std::pair<Graph, BalancerPlan> append_balancer(const Graph& g, Vertex u, Vertex v, std::int64_t x,
                                               int k);

// Fixed compensator from the balancer family: a 111-vertex path whose first
// vertex is adjacent to both endpoints of e, plus a pendant on the 11th path
// vertex. Presents distance sum 7460 to targets at distance 11 from e.
Graph construct_q(const Graph& g, EdgeRef e);

std::string arc_index_to_json(const ArcIndex& index);

}  // namespace soltes

#endif  // SOLTES_TRANSFORMS_HPP
