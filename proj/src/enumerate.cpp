#include "soltes/enumerate.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <unordered_set>

namespace soltes {

namespace {

constexpr int kMaxN = 11;

// Adjacency as one bitmask row per vertex.
struct Rows {
    int n = 0;
    std::array<std::uint16_t, kMaxN + 1> bits{};
};

std::uint64_t pair_bit(int row, int col) {  // row < col
    return std::uint64_t(1) << (std::int64_t(col) * (col - 1) / 2 + row);
}

std::uint64_t key_of_permuted(const Rows& g, const std::array<std::uint8_t, kMaxN>& label) {
    std::uint64_t key = 0;
    for (int u = 0; u < g.n; ++u) {
        std::uint16_t row = g.bits[u];
        while (row) {
            int v = __builtin_ctz(row);
            row &= row - 1;
            if (v > u) {
                int a = label[u], b = label[v];
                key |= pair_bit(std::min(a, b), std::max(a, b));
            }
        }
    }
    return key;
}

// Colour refinement: ranks the (colour, sorted neighbour colours) signatures
// until the partition stops splitting. Colours are rank-compressed, so with
// n <= 11 each fits in 4 bits and a whole signature packs into 64 bits.
struct Refiner {
    const Rows* g = nullptr;
    std::array<std::uint8_t, kMaxN> colour{};

    void compress() {
        std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxN> order;
        for (int v = 0; v < g->n; ++v) order[v] = {colour[v], std::uint8_t(v)};
        std::sort(order.begin(), order.begin() + g->n);
        std::uint8_t next = 0;
        for (int i = 0; i < g->n; ++i) {
            if (i > 0 && order[i].first != order[i - 1].first) ++next;
            colour[order[i].second] = next;
        }
    }

    void refine() {
        compress();
        while (true) {
            std::array<std::pair<std::uint64_t, std::uint8_t>, kMaxN> sig;
            for (int v = 0; v < g->n; ++v) {
                std::array<std::uint8_t, kMaxN> nb{};
                int cnt = 0;
                std::uint16_t row = g->bits[v];
                while (row) {
                    int w = __builtin_ctz(row);
                    row &= row - 1;
                    nb[cnt++] = colour[w];
                }
                std::sort(nb.begin(), nb.begin() + cnt);
                std::uint64_t packed = colour[v];
                for (int i = 0; i < cnt; ++i) packed = (packed << 4) | (nb[i] + 1);
                sig[v] = {packed, std::uint8_t(v)};
            }
            std::sort(sig.begin(), sig.begin() + g->n);
            std::array<std::uint8_t, kMaxN> fresh{};
            std::uint8_t next = 0;
            int old_classes = 0;
            for (int v = 0; v < g->n; ++v) old_classes = std::max<int>(old_classes, colour[v] + 1);
            for (int i = 0; i < g->n; ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first) ++next;
                fresh[sig[i].second] = next;
            }
            colour = fresh;
            if (next + 1 == old_classes) return;  // no further splits
        }
    }

    int first_split_class() const {  // smallest colour held by >= 2 vertices, or -1
        std::array<std::uint8_t, kMaxN> count{};
        for (int v = 0; v < g->n; ++v) ++count[colour[v]];
        for (int c = 0; c < g->n; ++c)
            if (count[c] >= 2) return c;
        return -1;
    }
};

void canonical_search(const Rows& g, Refiner state, std::uint64_t& best, bool& have) {
    state.refine();
    int cls = state.first_split_class();
    if (cls < 0) {
        std::array<std::uint8_t, kMaxN> label{};
        for (int v = 0; v < g.n; ++v) label[v] = state.colour[v];
        std::uint64_t key = key_of_permuted(g, label);
        if (!have || key < best) {
            best = key;
            have = true;
        }
        return;
    }
    for (int v = 0; v < g.n; ++v) {
        if (state.colour[v] != cls) continue;
        Refiner child = state;
        for (int u = 0; u < g.n; ++u) child.colour[u] = std::uint8_t(child.colour[u] * 2 + (u == v));
        canonical_search(g, child, best, have);
    }
}

std::uint64_t canonical_key_rows(const Rows& g) {
    Refiner state;
    state.g = &g;
    for (int v = 0; v < g.n; ++v) {
        state.colour[v] = std::uint8_t(__builtin_popcount(g.bits[v]));
    }
    std::uint64_t best = 0;
    bool have = false;
    canonical_search(g, state, best, have);
    return best;
}

Rows rows_from_key(int n, std::uint64_t key) {
    Rows g;
    g.n = n;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (key & pair_bit(row, col)) {
                g.bits[row] |= std::uint16_t(1) << col;
                g.bits[col] |= std::uint16_t(1) << row;
            }
    return g;
}

std::vector<std::uint64_t> augment_level(const std::vector<std::uint64_t>& parents, int child_n) {
    const int parent_n = child_n - 1;
    const std::uint32_t subsets = std::uint32_t(1) << parent_n;

    auto worker = [&](std::size_t begin, std::size_t end, std::unordered_set<std::uint64_t>& out) {
        for (std::size_t p = begin; p < end; ++p) {
            Rows base = rows_from_key(parent_n, parents[p]);
            base.n = child_n;
            for (std::uint32_t s = 0; s < subsets; ++s) {
                Rows g = base;
                g.bits[child_n - 1] = std::uint16_t(s);
                std::uint16_t mask = std::uint16_t(1) << (child_n - 1);
                std::uint32_t rest = s;
                while (rest) {
                    int v = __builtin_ctz(rest);
                    rest &= rest - 1;
                    g.bits[v] |= mask;
                }
                out.insert(canonical_key_rows(g));
            }
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, 8));
    if (parents.size() < 64) nthreads = 1;
    std::vector<std::unordered_set<std::uint64_t>> parts(nthreads);
    if (nthreads == 1) {
        worker(0, parents.size(), parts[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (parents.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(parents.size(), begin + chunk);
            pool.emplace_back(worker, begin, end, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
    }
    std::unordered_set<std::uint64_t>& merged = parts[0];
    for (std::size_t t = 1; t < parts.size(); ++t) merged.insert(parts[t].begin(), parts[t].end());
    std::vector<std::uint64_t> keys(merged.begin(), merged.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.vertex_count() > kMaxN)
        fail(Errc::bad_parameter, "canonical key supports n <= " + std::to_string(kMaxN));
    Rows rows;
    rows.n = g.vertex_count();
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u)) rows.bits[u] |= std::uint16_t(1) << v;
    if (rows.n == 0) return 0;
    return canonical_key_rows(rows);
}

Graph graph_from_key(int n, std::uint64_t key) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (key & pair_bit(row, col)) edges.emplace_back(row, col);
    return Graph::from_edge_list(n, edges);
}

const std::vector<std::uint64_t>& GraphEnumerator::keys(int n) {
    if (n < 1 || n > kMaxN) fail(Errc::bad_parameter, "enumeration supports 1 <= n <= 11");
    while (static_cast<int>(levels_.size()) < n) {
        if (levels_.empty()) {
            levels_.push_back({0});  // the one-vertex graph
        } else {
            int child_n = static_cast<int>(levels_.size()) + 1;
            levels_.push_back(augment_level(levels_.back(), child_n));
        }
    }
    return levels_[n - 1];
}

std::vector<Graph> GraphEnumerator::connected(int n) {
    std::vector<Graph> out;
    for (std::uint64_t key : keys(n)) {
        Graph g = graph_from_key(n, key);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace soltes
