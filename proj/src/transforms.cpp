#include "soltes/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace soltes {

namespace {

void require_edge(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v ||
        !g.has_edge(u, v))
        fail(Errc::edge_not_found, "{" + std::to_string(u) + "," + std::to_string(v) + "}");
}

std::int64_t binom2(std::int64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }

}  // namespace

std::pair<Graph, ArcIndex> arc_graph(const Graph& g) {
    if (g.edge_count() == 0) fail(Errc::empty_graph, "arc graph needs at least one edge");
    const Vertex n = g.vertex_count();

    ArcIndex index;
    index.arcs.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    std::vector<std::int64_t> offset(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 0; u < n; ++u) {
        offset[u + 1] = offset[u] + g.degree(u);
        for (Vertex v : g.neighbors(u)) index.arcs.push_back({u, v});
    }
    auto arc_id = [&](Vertex tail, Vertex head) -> Vertex {
        auto nb = g.neighbors(tail);
        auto it = std::lower_bound(nb.begin(), nb.end(), head);
        return static_cast<Vertex>(offset[tail] + (it - nb.begin()));
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        Vertex base = static_cast<Vertex>(offset[u]);
        Vertex deg = g.degree(u);
        for (Vertex i = 0; i < deg; ++i)
            for (Vertex j = i + 1; j < deg; ++j) edges.emplace_back(base + i, base + j);
        for (Vertex v : g.neighbors(u))
            if (u < v) edges.emplace_back(arc_id(u, v), arc_id(v, u));
    }
    return {Graph::from_edge_list(index.size(), edges), std::move(index)};
}

Graph subdivide(const Graph& g, const std::vector<EdgeRef>& picked) {
    std::set<EdgeRef> seen;
    for (const auto& e : picked) {
        require_edge(g, e.u, e.v);
        if (!seen.insert(e).second)
            fail(Errc::duplicate_edge, "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    const Vertex n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edge_pairs())
        if (!seen.count(EdgeRef(u, v))) edges.emplace_back(u, v);
    Vertex mid = n;
    for (const auto& e : picked) {
        edges.emplace_back(e.u, mid);
        edges.emplace_back(mid, e.v);
        ++mid;
    }
    return Graph::from_edge_list(mid, edges);
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0) fail(Errc::empty_graph, "line graph needs at least one edge");
    auto all = g.edges();  // sorted; index = line-graph vertex id
    std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        incident[all[i].u].push_back(static_cast<Vertex>(i));
        incident[all[i].v].push_back(static_cast<Vertex>(i));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& ids : incident)
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) edges.emplace_back(ids[i], ids[j]);
    return Graph::from_edge_list(static_cast<Vertex>(all.size()), edges);
}

Graph matching_apex(const Graph& g, const std::vector<EdgeRef>& matching) {
    std::set<Vertex> used;
    for (const auto& e : matching) {
        require_edge(g, e.u, e.v);
        if (!used.insert(e.u).second || !used.insert(e.v).second)
            fail(Errc::not_a_matching, "edges share vertex in {" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + "}");
    }
    auto edges = g.edge_pairs();
    Vertex apex = g.vertex_count();
    for (const auto& e : matching) {
        edges.emplace_back(apex, e.u);
        edges.emplace_back(apex, e.v);
        ++apex;
    }
    return Graph::from_edge_list(apex, edges);
}

std::pair<Graph, BalancerPlan> append_balancer(const Graph& g, Vertex u, Vertex v, std::int64_t x,
                                               int k) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    require_edge(g, u, v);
    if (x <= 16LL * k * k)
        fail(Errc::x_too_small, "x=" + std::to_string(x) + " <= 16k^2=" + std::to_string(16LL * k * k));

    BalancerPlan plan;
    plan.x = x;
    plan.k = k;
    std::int64_t ell = 2LL * k;
    while (binom2(ell + 1) - binom2(2LL * k) <= x) ++ell;
    plan.ell = ell;
    plan.y = x + binom2(2LL * k) - binom2(ell);

    const bool two_extras = plan.y > 0 && plan.y < 2LL * k + 1;
    const std::int64_t path_top = two_extras ? ell - 2 : ell - 1;  // distances 2k..path_top

    auto edges = g.edge_pairs();
    Vertex next = g.vertex_count();
    const Vertex first = next;
    Vertex prev = -1;
    for (std::int64_t d = 2LL * k; d <= path_top; ++d) {
        Vertex nv = next++;
        if (prev < 0) {
            edges.emplace_back(nv, u);
            edges.emplace_back(nv, v);
            plan.recipe.push_back({nv, -1, d});
        } else {
            edges.emplace_back(nv, prev);
            plan.recipe.push_back({nv, prev, d});
        }
        prev = nv;
    }
    auto path_vertex_at = [&](std::int64_t d) { return static_cast<Vertex>(first + (d - 2LL * k)); };
    auto attach_at_distance = [&](std::int64_t d) {
        if (d < 2LL * k + 1) throw std::logic_error("balancer attachment below the path start");
        if (d - 1 <= path_top) {
            Vertex at = path_vertex_at(d - 1);
            Vertex nv = next++;
            edges.emplace_back(nv, at);
            plan.recipe.push_back({nv, at, d});
        } else {
            // cannot sit beside the path: realize as a chain hanging off its end
            Vertex at = path_vertex_at(path_top);
            for (std::int64_t dd = path_top + 1; dd <= d; ++dd) {
                Vertex nv = next++;
                edges.emplace_back(nv, at);
                plan.recipe.push_back({nv, at, dd});
                at = nv;
            }
        }
    };
    if (plan.y >= 2LL * k + 1) {
        attach_at_distance(plan.y);
    } else if (two_extras) {
        std::int64_t sum = ell - 1 + plan.y;
        std::int64_t d1 = std::max(2LL * k + 1, sum - (path_top + 1));
        attach_at_distance(d1);
        attach_at_distance(sum - d1);
    }
    return {Graph::from_edge_list(next, edges), std::move(plan)};
}

Graph construct_q(const Graph& g, EdgeRef e) {
    require_edge(g, e.u, e.v);
    auto edges = g.edge_pairs();
    Vertex next = g.vertex_count();
    Vertex prev = -1;
    Vertex eleventh = -1;
    for (int d = 12; d <= 122; ++d) {
        Vertex nv = next++;
        if (prev < 0) {
            edges.emplace_back(nv, e.u);
            edges.emplace_back(nv, e.v);
        } else {
            edges.emplace_back(nv, prev);
        }
        if (d == 22) eleventh = nv;
        prev = nv;
    }
    edges.emplace_back(next++, eleventh);
    return Graph::from_edge_list(next, edges);
}

std::string arc_index_to_json(const ArcIndex& index) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (Vertex id = 0; id < index.size(); ++id)
        j.push_back({{"arc_id", id}, {"tail", index.arcs[id].tail}, {"head", index.arcs[id].head}});
    return j.dump();
}

}  // namespace soltes
