#ifndef SOLTES_TEST_SUPPORT_HPP
#define SOLTES_TEST_SUPPORT_HPP

#include <functional>
#include <optional>

#include "soltes/graph.hpp"

namespace testsupport {

// Runs fn and reports the soltes error code it throws, if any.
template <typename Fn>
std::optional<soltes::Errc> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const soltes::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline bool is_cycle_shaped(const soltes::Graph& g) {
    if (g.vertex_count() < 3 || !soltes::is_connected(g)) return false;
    for (soltes::Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_path_shaped(const soltes::Graph& g) {
    if (g.vertex_count() < 2 || !soltes::is_connected(g)) return false;
    int ends = 0;
    for (soltes::Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) ++ends;
        else if (g.degree(v) != 2) return false;
    }
    return ends == 2;
}

}  // namespace testsupport

#endif  // SOLTES_TEST_SUPPORT_HPP
