#ifndef SOLTES_SRC_DETAIL_HPP
#define SOLTES_SRC_DETAIL_HPP

// Internal helpers shared by the implementation files; not installed.

#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes::detail {

// Reusable BFS workspace. dist stays at -1 for untouched vertices; after a
// run the visited entries are reset via the visit queue, so repeated runs
// cost O(reached), not O(n).
struct BfsScratch {
    std::vector<Vertex> dist;
    std::vector<Vertex> queue;

    explicit BfsScratch(Vertex n) : dist(static_cast<std::size_t>(n), -1) {
        queue.reserve(static_cast<std::size_t>(n));
    }

    struct Result {
        Vertex reached = 0;
        Vertex eccentricity = 0;
        std::int64_t sigma = 0;
    };

    // BFS from root; `skip` (if >= 0) is treated as deleted.
    Result run(const Graph& g, Vertex root, Vertex skip) {
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        Result r;
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex u = queue[head++];
            Vertex du = dist[u];
            r.sigma += du;
            r.eccentricity = du;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] >= 0 || w == skip) continue;
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
        r.reached = static_cast<Vertex>(queue.size());
        return r;
    }

    void reset() {
        for (Vertex u : queue) dist[u] = -1;
    }
};

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Run fn(worker_id) on `workers` threads (inline when workers == 1). The
// first exception thrown by any worker is rethrown after the join.
template <typename Fn>
void parallel_run(int workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&fn, &err, &err_mu, w] {
            try {
                fn(w);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

inline std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) fail(Errc::overflow, "distance sum exceeds 64 bits");
    return out;
}

// W(G) - W(G\v) by scalar recomputation; nullopt when v is a cut vertex.
// Assumes g connected; scratch must be sized for g.
inline std::optional<std::int64_t> scalar_delta(const Graph& g, Vertex v, std::int64_t wiener_g,
                                                BfsScratch& scratch) {
    const Vertex n = g.vertex_count();
    if (n == 1) return 0;
    std::int64_t doubled = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (x == v) continue;
        auto r = scratch.run(g, x, v);
        scratch.reset();
        if (r.reached != n - 1) return std::nullopt;
        doubled = checked_add64(doubled, r.sigma);
    }
    return wiener_g - doubled / 2;
}

}  // namespace soltes::detail

#endif  // SOLTES_SRC_DETAIL_HPP
