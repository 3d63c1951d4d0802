#include "soltes/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include <json.hpp>

#include "detail.hpp"

namespace soltes {

namespace {

using detail::BfsScratch;
using detail::checked_add64;
using detail::parallel_run;
using detail::resolve_workers;

void require_connected(const Graph& g) {
    if (!is_connected(g)) fail(Errc::disconnected_graph, "operation requires a connected graph");
}

}  // namespace

LayerProfile bfs_layers(const Graph& g, Vertex root) {
    require_vertex(g, root);
    LayerProfile p;
    p.root = root;
    p.dist.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    BfsScratch scratch(g.vertex_count());
    auto r = scratch.run(g, root, -1);
    p.dist = scratch.dist;
    p.eccentricity = r.eccentricity;
    p.layer_sizes.assign(static_cast<std::size_t>(r.eccentricity) + 1, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (p.dist[v] >= 0) ++p.layer_sizes[p.dist[v]];
    return p;
}

std::int64_t wiener(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n == 0) fail(Errc::disconnected_graph, "empty graph has no Wiener index");
    std::int64_t doubled = 0;
    BfsScratch scratch(n);
    for (Vertex v = 0; v < n; ++v) {
        auto r = scratch.run(g, v, -1);
        scratch.reset();
        if (r.reached != n) fail(Errc::disconnected_graph, "graph is disconnected");
        doubled = checked_add64(doubled, r.sigma);
    }
    return doubled / 2;
}

std::int64_t transmission(const Graph& g, Vertex v) {
    require_vertex(g, v);
    BfsScratch scratch(g.vertex_count());
    auto r = scratch.run(g, v, -1);
    if (r.reached != g.vertex_count()) fail(Errc::disconnected_graph, "graph is disconnected");
    return r.sigma;
}

std::int64_t diff(const Graph& g, Vertex v) {
    require_vertex(g, v);
    require_connected(g);
    const Vertex n = g.vertex_count();
    if (n == 1) return 0;
    BfsScratch full(n), del(n);
    std::int64_t total = 0;
    bool first = true;
    for (Vertex x = 0; x < n; ++x) {
        if (x == v) continue;
        auto rd = del.run(g, x, v);
        if (first && rd.reached != n - 1) {
            del.reset();
            fail(Errc::cut_vertex, "vertex " + std::to_string(v) + " disconnects the graph");
        }
        first = false;
        full.run(g, x, -1);
        for (Vertex y : del.queue) total += del.dist[y] - full.dist[y];
        del.reset();
        full.reset();
    }
    return total / 2;
}

std::optional<std::int64_t> delta_w(const Graph& g, Vertex v) {
    require_vertex(g, v);
    require_connected(g);
    auto deleted = delete_vertex(g, v);
    if (!is_connected(deleted.graph)) return std::nullopt;
    std::int64_t recomputed = wiener(g) - (deleted.graph.vertex_count() > 0 ? wiener(deleted.graph) : 0);
    std::int64_t identity = transmission(g, v) - diff(g, v);
    if (recomputed != identity)
        throw std::logic_error("delta_w routes disagree: " + std::to_string(recomputed) + " vs " +
                               std::to_string(identity));
    return recomputed;
}

std::optional<std::int64_t> VertexClassification::common_delta() const {
    std::optional<std::int64_t> common;
    for (const auto& rec : vertices) {
        if (!rec.delta) return std::nullopt;
        if (!common) common = rec.delta;
        else if (*common != *rec.delta) return std::nullopt;
    }
    return common;
}

bool VertexClassification::negative_soltes() const {
    for (const auto& rec : vertices)
        if (!rec.delta || *rec.delta > 0) return false;
    return n > 0;
}

VertexClassification classify_vertices(const Graph& g, const ClassifyOptions& opt) {
    const Vertex n = g.vertex_count();
    if (n == 0) fail(Errc::disconnected_graph, "empty graph");
    require_connected(g);
    const int workers = std::min<int>(resolve_workers(opt.workers), std::max<Vertex>(n, 1));

    VertexClassification out;
    out.n = n;
    out.m = g.edge_count();
    out.vertices.assign(static_cast<std::size_t>(n), {});

    // Pass 1: transmissions (and W). With verify on and moderate n, keep the
    // full distance matrix so pass 2 can do per-pair detour accounting
    // without re-running BFS on G for every deletion.
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(n));
    const bool keep_matrix = opt.verify && n <= 4096;
    std::vector<Vertex> dmat;
    if (keep_matrix) dmat.resize(static_cast<std::size_t>(n) * n);
    {
        std::atomic<Vertex> next{0};
        parallel_run(workers, [&](int) {
            BfsScratch scratch(n);
            for (Vertex v; (v = next.fetch_add(1)) < n;) {
                auto r = scratch.run(g, v, -1);
                sigma[v] = r.sigma;
                if (keep_matrix)
                    std::copy(scratch.dist.begin(), scratch.dist.end(),
                              dmat.begin() + static_cast<std::size_t>(v) * n);
                scratch.reset();
            }
        });
    }
    std::int64_t doubled = 0;
    for (Vertex v = 0; v < n; ++v) doubled = checked_add64(doubled, sigma[v]);
    out.wiener = doubled / 2;

    // Pass 2: one deletion per unit of work; all BFS recomputed from scratch.
    {
        std::atomic<Vertex> next{0};
        std::atomic<bool> mismatch{false};
        parallel_run(workers, [&](int) {
            BfsScratch del(n), full(n);
            for (Vertex v; (v = next.fetch_add(1)) < n;) {
                VertexRecord rec;
                rec.v = v;
                rec.sigma = sigma[v];
                if (n == 1) {
                    rec.delta = 0;
                    rec.detour = 0;
                    rec.status = VertexStatus::soltes;
                    out.vertices[v] = rec;
                    continue;
                }
                std::int64_t w_del_doubled = 0;
                std::int64_t pair_detour_doubled = 0;
                bool cut = false;
                for (Vertex x = 0; x < n && !cut; ++x) {
                    if (x == v) continue;
                    auto rd = del.run(g, x, v);
                    if (rd.reached != n - 1) {
                        cut = true;
                        del.reset();
                        break;
                    }
                    w_del_doubled = checked_add64(w_del_doubled, rd.sigma);
                    if (opt.verify) {
                        if (keep_matrix) {
                            const Vertex* row = dmat.data() + static_cast<std::size_t>(x) * n;
                            for (Vertex y : del.queue) pair_detour_doubled += del.dist[y] - row[y];
                        } else {
                            full.run(g, x, -1);
                            for (Vertex y : del.queue) pair_detour_doubled += del.dist[y] - full.dist[y];
                            full.reset();
                        }
                    }
                    del.reset();
                }
                if (cut) {
                    rec.status = VertexStatus::cut_vertex;
                } else {
                    std::int64_t delta = out.wiener - w_del_doubled / 2;
                    rec.delta = delta;
                    rec.detour = rec.sigma - delta;
                    if (opt.verify && rec.sigma - pair_detour_doubled / 2 != delta) mismatch = true;
                    rec.status = delta == 0   ? VertexStatus::soltes
                                 : delta > 0 ? VertexStatus::positive
                                             : VertexStatus::negative;
                }
                out.vertices[v] = rec;
            }
        });
        if (mismatch) throw std::logic_error("classify_vertices: detour identity violated");
    }
    for (const auto& rec : out.vertices)
        if (rec.status == VertexStatus::soltes) ++out.soltes_count;
    return out;
}

StructuralPredicates structural_predicates(const Graph& g) {
    require_connected(g);
    const Vertex n = g.vertex_count();
    StructuralPredicates p;
    p.min_degree = g.min_degree();

    BfsScratch scratch(n);
    Vertex diam = 0, rad = n > 0 ? n : 0;
    for (Vertex v = 0; v < n; ++v) {
        auto r = scratch.run(g, v, -1);
        scratch.reset();
        diam = std::max(diam, r.eccentricity);
        rad = std::min(rad, r.eccentricity);
    }
    p.diameter = diam;
    p.radius = n > 0 ? rad : 0;
    p.is_self_centered = p.diameter == p.radius;

    for (Vertex v = 0; v < n; ++v) {
        auto nv = g.neighbors(v);
        for (Vertex w = 0; w < n; ++w) {
            if (w == v) continue;
            bool contained = true;
            for (Vertex x : nv)
                if (x != w && !g.has_edge(w, x)) {
                    contained = false;
                    break;
                }
            if (!contained) continue;
            p.has_dominated_pair = true;
            if (g.has_edge(v, w)) p.has_closed_dominated_pair = true;
            else p.has_nonadjacent_dominated_pair = true;
            if (p.has_closed_dominated_pair && p.has_nonadjacent_dominated_pair) return p;
        }
    }
    return p;
}

std::int64_t wiener_cycle(std::int64_t n) {
    if (n < 1) fail(Errc::bad_parameter, "n must be positive");
    return n % 2 == 0 ? n * n * n / 8 : n * (n * n - 1) / 8;
}

std::int64_t wiener_path(std::int64_t n) {
    if (n < 1) fail(Errc::bad_parameter, "n must be positive");
    return (n + 1) * n * (n - 1) / 6;
}

const char* status_name(VertexStatus s) {
    switch (s) {
        case VertexStatus::soltes: return "soltes";
        case VertexStatus::positive: return "positive";
        case VertexStatus::negative: return "negative";
        case VertexStatus::cut_vertex: return "cut";
    }
    return "?";
}

std::string classification_to_json(const VertexClassification& c) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = c.n;
    j["m"] = c.m;
    j["wiener"] = c.wiener;
    j["soltes_count"] = c.soltes_count;
    j["alpha"] = c.alpha();
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& rec : c.vertices) {
        nlohmann::ordered_json v;
        v["v"] = rec.v;
        v["sigma"] = rec.sigma;
        if (rec.detour) v["diff"] = *rec.detour;
        else v["diff"] = nullptr;
        if (rec.delta) v["delta_w"] = *rec.delta;
        else v["delta_w"] = "cut";
        v["status"] = status_name(rec.status);
        verts.push_back(std::move(v));
    }
    return j.dump();
}

std::string classification_to_csv(const VertexClassification& c) {
    std::ostringstream out;
    out << "v,sigma,diff,delta_w,status\n";
    for (const auto& rec : c.vertices) {
        out << rec.v << ',' << rec.sigma << ',';
        if (rec.detour) out << *rec.detour;
        out << ',';
        if (rec.delta) out << *rec.delta;
        else out << "cut";
        out << ',' << status_name(rec.status) << '\n';
    }
    return out.str();
}

}  // namespace soltes
