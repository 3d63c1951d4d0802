#include "soltes/families.hpp"

namespace soltes {

namespace {
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;
}

Graph cycle(Vertex n) {
    if (n < 3) fail(Errc::bad_parameter, "cycle needs n >= 3");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph path(Vertex n) {
    if (n < 1) fail(Errc::bad_parameter, "path needs n >= 1");
    EdgeList e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph complete(Vertex n) {
    if (n < 1) fail(Errc::bad_parameter, "complete graph needs n >= 1");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

Graph circular_ladder_k4(int k) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    const Vertex L = 2 * k + 4;
    EdgeList e;
    for (Vertex i = 0; i < L; ++i) e.emplace_back(i, (i + 1) % L);
    for (Vertex i = 0; i < L; ++i) e.emplace_back(L + i, L + (i + 1) % L);
    for (Vertex i = 0; i < L; ++i) e.emplace_back(i, L + i);
    for (Vertex i : {Vertex(0), Vertex(k + 2)}) {
        e.emplace_back(i, L + (i + 1) % L);
        e.emplace_back((i + 1) % L, L + i);
    }
    return Graph::from_edge_list(2 * L, e);
}

Graph triangle_bipartite(int k) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    const Vertex n = 2 * k + 2;
    const Vertex a0 = 0, a3 = k, b1 = 2 * k, b2 = 2 * k + 3 * n;
    EdgeList e;
    for (Vertex t = 0; t < n; ++t)
        for (Vertex i = 0; i < 3; ++i)
            for (Vertex j = i + 1; j < 3; ++j) {
                e.emplace_back(b1 + 3 * t + i, b1 + 3 * t + j);
                e.emplace_back(b2 + 3 * t + i, b2 + 3 * t + j);
            }
    for (Vertex a = 0; a < k; ++a)
        for (Vertex x = 0; x < 3 * n; ++x) {
            e.emplace_back(a0 + a, b1 + x);
            e.emplace_back(a3 + a, b2 + x);
        }
    for (Vertex t1 = 0; t1 < n; ++t1)
        for (Vertex t2 = 0; t2 < n; ++t2) {
            const Vertex x0 = b1 + 3 * t1, x1 = x0 + 1, x2 = x0 + 2;
            const Vertex y0 = b2 + 3 * t2, y1 = y0 + 1, y2 = y0 + 2;
            e.emplace_back(x0, y0);
            e.emplace_back(y0, x1);
            e.emplace_back(x1, y1);
            e.emplace_back(y1, x2);
            e.emplace_back(x2, y2);
            e.emplace_back(y2, x0);
        }
    return Graph::from_edge_list(2 * k + 6 * n, e);
}

Graph fig4_left() {
    EdgeList e;
    for (Vertex i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
    Vertex apex = 8;
    for (Vertex i = 0; i < 8; i += 2) {
        e.emplace_back(apex, i);
        e.emplace_back(apex, i + 1);
        ++apex;
    }
    return Graph::from_edge_list(12, e);
}

Graph fig4_right() {
    EdgeList e;
    for (Vertex i = 0; i < 9; ++i) e.emplace_back(i, (i + 1) % 9);
    Vertex pendant = 9;
    for (Vertex at : {0, 3, 6}) e.emplace_back(at, pendant++);
    return Graph::from_edge_list(12, e);
}

Graph fig5_60() {
    auto id = [](int label) { return static_cast<Vertex>(((label - 1) % 40 + 40) % 40); };
    EdgeList e;
    for (int i = 1; i <= 40; ++i) e.emplace_back(id(i), id(i + 1));
    for (int i = 1; i <= 40; ++i) {
        if (i % 4 == 1) e.emplace_back(id(i), id(i + 11));
        if (i % 4 == 2) e.emplace_back(id(i), id(i + 9));
    }
    Vertex apex = 40;
    for (int i = 2; i <= 40; i += 2) {
        e.emplace_back(apex, id(i));
        e.emplace_back(apex, id(i + 1));
        ++apex;
    }
    return Graph::from_edge_list(60, e);
}

Graph fig6_69() {
    EdgeList e;
    for (Vertex i = 0; i < 23; ++i) {
        const Vertex next = (i + 1) % 23;
        e.emplace_back(i, 23 + next);      // o_i ~ n_{i+1}
        e.emplace_back(23 + i, next);      // n_i ~ o_{i+1}
        e.emplace_back(i, 46 + i);         // o_i ~ m_i
        e.emplace_back(46 + i, 23 + i);    // m_i ~ n_i
    }
    return Graph::from_edge_list(69, e);
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cycle: return cycle(spec.param);
        case Family::path: return path(spec.param);
        case Family::complete: return complete(spec.param);
        case Family::circular_ladder_k4: return circular_ladder_k4(spec.param);
        case Family::triangle_bipartite: return triangle_bipartite(spec.param);
        case Family::fig4_left: return fig4_left();
        case Family::fig4_right: return fig4_right();
        case Family::fig5_60: return fig5_60();
        case Family::fig6_69: return fig6_69();
    }
    fail(Errc::bad_parameter, "unknown family");
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "complete") return Family::complete;
    if (name == "circular-ladder-k4") return Family::circular_ladder_k4;
    if (name == "triangle-bipartite") return Family::triangle_bipartite;
    if (name == "fig4-left") return Family::fig4_left;
    if (name == "fig4-right") return Family::fig4_right;
    if (name == "fig5-60") return Family::fig5_60;
    if (name == "fig6-69") return Family::fig6_69;
    return std::nullopt;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::circular_ladder_k4: return "circular-ladder-k4";
        case Family::triangle_bipartite: return "triangle-bipartite";
        case Family::fig4_left: return "fig4-left";
        case Family::fig4_right: return "fig4-right";
        case Family::fig5_60: return "fig5-60";
        case Family::fig6_69: return "fig6-69";
    }
    return "?";
}

bool family_takes_n(Family f) {
    return f == Family::cycle || f == Family::path || f == Family::complete;
}

bool family_takes_k(Family f) {
    return f == Family::circular_ladder_k4 || f == Family::triangle_bipartite;
}

}  // namespace soltes
