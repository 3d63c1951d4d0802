#ifndef SOLTES_TEST_ORACLES_HPP
#define SOLTES_TEST_ORACLES_HPP

// Test-only reference implementations, deliberately independent of the
// library code paths they check: distances via Floyd-Warshall instead of
// BFS, graph6 via an explicit bit string instead of packed 6-bit groups.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline constexpr int kUnreachable = 1 << 28;

// Floyd-Warshall all-pairs distances; kUnreachable marks disconnected pairs.
inline std::vector<std::vector<int>> distance_matrix(int n, const Edges& edges) {
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (d[i][k] == kUnreachable) continue;
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
        }
    return d;
}

inline bool connected(int n, const Edges& edges) {
    if (n <= 1) return true;
    auto d = distance_matrix(n, edges);
    for (int v = 0; v < n; ++v)
        if (d[0][v] >= kUnreachable) return false;
    return true;
}

inline long long wiener(int n, const Edges& edges) {
    auto d = distance_matrix(n, edges);
    long long w = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (d[i][j] >= kUnreachable) throw std::runtime_error("oracle: disconnected");
            w += d[i][j];
        }
    return w;
}

inline long long sigma(int n, const Edges& edges, int v) {
    auto d = distance_matrix(n, edges);
    long long s = 0;
    for (int u = 0; u < n; ++u) {
        if (d[v][u] >= kUnreachable) throw std::runtime_error("oracle: disconnected");
        s += d[v][u];
    }
    return s;
}

// Compacted deletion: ids above v shift down by one.
inline Edges delete_vertex(int n, const Edges& edges, int v) {
    (void)n;
    Edges out;
    for (auto [a, b] : edges) {
        if (a == v || b == v) continue;
        out.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return out;
}

// W(G) - W(G\v); nullopt when G\v is disconnected.
inline std::optional<long long> delta_w(int n, const Edges& edges, int v) {
    Edges del = delete_vertex(n, edges, v);
    if (!connected(n - 1, del)) return std::nullopt;
    return wiener(n, edges) - wiener(n - 1, del);
}

// Total detour of v: sum over pairs of G\v of the distance increase.
inline long long diff(int n, const Edges& edges, int v) {
    Edges del = delete_vertex(n, edges, v);
    if (!connected(n - 1, del)) throw std::runtime_error("oracle: cut vertex");
    auto dg = distance_matrix(n, edges);
    auto dd = distance_matrix(n - 1, del);
    long long total = 0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) {
            int oi = i >= v ? i + 1 : i;
            int oj = j >= v ? j + 1 : j;
            total += dd[i][j] - dg[oi][oj];
        }
    return total;
}

inline int soltes_vertex_count(int n, const Edges& edges) {
    int count = 0;
    for (int v = 0; v < n; ++v) {
        auto z = delta_w(n, edges, v);
        if (z && *z == 0) ++count;
    }
    return count;
}

// Independent graph6 encoder: writes the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... into a '0'/'1' string, pads to a
// multiple of 6, then maps each group to byte value group+63.
inline std::string graph6_encode(int n, const Edges& edges) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::runtime_error("oracle: n too large for graph6");
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    std::string bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(adj[row][col] ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (int b = 0; b < 6; ++b) group = group * 2 + (bits[i + b] == '1');
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

}  // namespace oracle

#endif  // SOLTES_TEST_ORACLES_HPP
