#ifndef SOLTES_GRAPH_HPP
#define SOLTES_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soltes {

using Vertex = std::int32_t;

enum class Errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    malformed_header,
    trailing_garbage,
    non_canonical_padding,
    disconnected_graph,
    cut_vertex,
    edge_not_found,
    not_a_matching,
    x_too_small,
    bad_parameter,
    overflow,
    empty_graph,
    decode_error,
    empty_stream,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Unordered edge with normalized endpoints (u < v).
struct EdgeRef {
    Vertex u = 0;
    Vertex v = 0;

    EdgeRef() = default;
    EdgeRef(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool operator==(const EdgeRef&) const = default;
    auto operator<=>(const EdgeRef&) const = default;
};

// Immutable simple undirected graph. Vertex ids are dense 0..n-1, adjacency
// lists are sorted, stored in CSR form. Safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Rejects (does not deduplicate) self-loops, duplicate unordered pairs
    // and out-of-range endpoints.
    static Graph from_edge_list(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    Vertex vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
    }
    Vertex degree(Vertex v) const { return static_cast<Vertex>(off_[v + 1] - off_[v]); }
    bool has_edge(Vertex u, Vertex v) const;

    Vertex min_degree() const;
    Vertex max_degree() const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<EdgeRef> edges() const;
    std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

    bool operator==(const Graph&) const = default;

private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> off_ = {0};
    std::vector<Vertex> nbr_;
};

inline void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        fail(Errc::vertex_out_of_range,
             "vertex " + std::to_string(v) + " not in 0.." + std::to_string(g.vertex_count() - 1));
}

// Deletion result: ids above the removed vertex shift down by one;
// to_original maps new ids back to the input graph's ids.
struct VertexDeletion {
    Graph graph;
    Vertex removed = 0;
    std::vector<Vertex> to_original;
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);

// True iff a BFS from vertex 0 reaches every vertex; true for n <= 1.
bool is_connected(const Graph& g);

}  // namespace soltes

#endif  // SOLTES_GRAPH_HPP
