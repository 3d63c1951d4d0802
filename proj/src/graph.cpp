#include "soltes/graph.hpp"

#include <algorithm>

namespace soltes {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::self_loop: return "SelfLoop";
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::vertex_out_of_range: return "VertexOutOfRange";
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::trailing_garbage: return "TrailingGarbage";
        case Errc::non_canonical_padding: return "NonCanonicalPadding";
        case Errc::disconnected_graph: return "DisconnectedGraph";
        case Errc::cut_vertex: return "CutVertex";
        case Errc::edge_not_found: return "EdgeNotFound";
        case Errc::not_a_matching: return "NotAMatching";
        case Errc::x_too_small: return "XTooSmall";
        case Errc::bad_parameter: return "BadParameter";
        case Errc::overflow: return "Overflow";
        case Errc::empty_graph: return "EmptyGraph";
        case Errc::decode_error: return "DecodeError";
        case Errc::empty_stream: return "EmptyStream";
    }
    return "UnknownError";
}

Graph Graph::from_edge_list(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) fail(Errc::bad_parameter, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::vertex_out_of_range, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                ") with n=" + std::to_string(n));
        if (u == v) fail(Errc::self_loop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        ++deg[u];
        ++deg[v];
    }
    g.off_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
    g.nbr_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(g.off_.begin(), g.off_.end() - 1);
    for (auto [u, v] : edges) {
        g.nbr_[static_cast<std::size_t>(cursor[u]++)] = v;
        g.nbr_[static_cast<std::size_t>(cursor[v]++)] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.nbr_.begin() + g.off_[v];
        auto end = g.nbr_.begin() + g.off_[v + 1];
        std::sort(begin, end);
        auto dup = std::adjacent_find(begin, end);
        if (dup != end)
            fail(Errc::duplicate_edge,
                 "edge {" + std::to_string(v) + "," + std::to_string(*dup) + "} listed twice");
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::min_degree() const {
    Vertex best = n_ > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

Vertex Graph::max_degree() const {
    Vertex best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
    require_vertex(g, v);
    const Vertex n = g.vertex_count();
    VertexDeletion out;
    out.removed = v;
    out.to_original.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex u = 0; u < n; ++u)
        if (u != v) out.to_original.push_back(u);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [a, b] : g.edge_pairs()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    out.graph = Graph::from_edge_list(n - 1, edges);
    return out;
}

bool is_connected(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack = {0};
    seen[0] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

}  // namespace soltes
