#include "soltes/props.hpp"

#include <atomic>

#include "detail.hpp"

namespace soltes {

namespace {

using detail::BfsScratch;
using detail::parallel_run;
using detail::resolve_workers;
using detail::scalar_delta;

constexpr std::size_t kMaxCounterexamples = 5;

// Runs pred(g, scratch) over the corpus on a worker pool; pred returns false
// for a counterexample, and sets *hit when the hypothesis applied.
template <typename Pred>
PropResult run_suite(std::string name, const std::vector<Graph>& corpus, int workers, Pred&& pred) {
    PropResult out;
    out.name = std::move(name);
    out.graphs_checked = static_cast<std::int64_t>(corpus.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::int64_t> hits{0};
    std::mutex mu;
    parallel_run(resolve_workers(workers), [&](int) {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
            const Graph& g = corpus[i];
            BfsScratch scratch(g.vertex_count());
            bool hit = false;
            bool ok = pred(g, scratch, hit);
            if (hit) hits.fetch_add(1);
            if (!ok) {
                std::lock_guard<std::mutex> lock(mu);
                if (out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(g);
            }
        }
    });
    out.hypothesis_hits = hits.load();
    return out;
}

std::int64_t wiener_of(const Graph& g, BfsScratch& scratch) {
    std::int64_t doubled = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        doubled += scratch.run(g, v, -1).sigma;
        scratch.reset();
    }
    return doubled / 2;
}

struct EccStats {
    Vertex diameter = 0;
    Vertex radius = 0;
};

EccStats ecc_stats(const Graph& g, BfsScratch& scratch) {
    EccStats s;
    s.radius = g.vertex_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto r = scratch.run(g, v, -1);
        scratch.reset();
        s.diameter = std::max(s.diameter, r.eccentricity);
        s.radius = std::min(s.radius, r.eccentricity);
    }
    return s;
}

bool two_connected(const Graph& g, BfsScratch& scratch) {
    const Vertex n = g.vertex_count();
    if (n < 3) return false;
    for (Vertex v = 0; v < n; ++v) {
        Vertex root = v == 0 ? 1 : 0;
        auto r = scratch.run(g, root, v);
        scratch.reset();
        if (r.reached != n - 1) return false;
    }
    return true;
}

}  // namespace

PropResult check_constant_delta_degree_two(const std::vector<Graph>& corpus, int workers) {
    return run_suite("constant-delta-min-degree-2-is-cycle", corpus, workers,
                     [](const Graph& g, BfsScratch& scratch, bool& hit) {
                         const Vertex n = g.vertex_count();
                         if (n < 3 || g.min_degree() != 2) return true;
                         std::int64_t w = wiener_of(g, scratch);
                         std::optional<std::int64_t> common;
                         for (Vertex v = 0; v < n; ++v) {
                             auto z = scalar_delta(g, v, w, scratch);
                             if (!z) return true;  // cut vertex: hypothesis fails
                             if (!common) common = z;
                             else if (*common != *z) return true;
                         }
                         hit = true;
                         return g.max_degree() == 2;  // connected + 2-regular = cycle
                     });
}

PropResult check_diameter_two_positive(const std::vector<Graph>& corpus, int workers) {
    return run_suite("diameter-2-has-positive-or-cut-vertex", corpus, workers,
                     [](const Graph& g, BfsScratch& scratch, bool& hit) {
                         const Vertex n = g.vertex_count();
                         if (n < 2 || ecc_stats(g, scratch).diameter > 2) return true;
                         hit = true;
                         std::int64_t w = wiener_of(g, scratch);
                         for (Vertex v = 0; v < n; ++v) {
                             auto z = scalar_delta(g, v, w, scratch);
                             if (!z || *z > 0) return true;
                         }
                         return false;
                     });
}

PropResult check_self_centered_three_positive(const std::vector<Graph>& corpus, int workers) {
    return run_suite("self-centered-diameter-3-has-positive-vertex", corpus, workers,
                     [](const Graph& g, BfsScratch& scratch, bool& hit) {
                         auto ecc = ecc_stats(g, scratch);
                         if (ecc.diameter != 3 || ecc.radius != 3) return true;
                         if (!two_connected(g, scratch)) return true;
                         hit = true;
                         std::int64_t w = wiener_of(g, scratch);
                         for (Vertex v = 0; v < g.vertex_count(); ++v) {
                             auto z = scalar_delta(g, v, w, scratch);
                             if (z && *z > 0) return true;
                         }
                         return false;
                     });
}

PropResult check_dominated_zero_detour(const std::vector<Graph>& corpus, int workers) {
    return run_suite("dominated-vertex-has-zero-detour", corpus, workers,
                     [](const Graph& g, BfsScratch& scratch, bool& hit) {
                         const Vertex n = g.vertex_count();
                         if (n < 2) return true;
                         std::optional<std::int64_t> w;
                         for (Vertex v = 0; v < n; ++v) {
                             bool dominated = false;
                             auto nv = g.neighbors(v);
                             for (Vertex u = 0; u < n && !dominated; ++u) {
                                 if (u == v || g.has_edge(u, v)) continue;
                                 bool contained = true;
                                 for (Vertex x : nv)
                                     if (!g.has_edge(u, x)) {
                                         contained = false;
                                         break;
                                     }
                                 dominated = contained;
                             }
                             if (!dominated) continue;
                             if (!w) w = wiener_of(g, scratch);
                             auto z = scalar_delta(g, v, *w, scratch);
                             if (!z) continue;  // deletion disconnects: hypothesis fails
                             hit = true;
                             auto sigma = scratch.run(g, v, -1).sigma;
                             scratch.reset();
                             // diff = sigma - delta must vanish, forcing delta = sigma > 0
                             if (*z != sigma || *z <= 0) return false;
                         }
                         return true;
                     });
}

std::vector<PropResult> run_all_props(const std::vector<Graph>& corpus, int workers) {
    return {
        check_constant_delta_degree_two(corpus, workers),
        check_diameter_two_positive(corpus, workers),
        check_self_centered_three_positive(corpus, workers),
        check_dominated_zero_detour(corpus, workers),
    };
}

}  // namespace soltes
