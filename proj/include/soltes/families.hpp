#ifndef SOLTES_FAMILIES_HPP
#define SOLTES_FAMILIES_HPP

#include <optional>
#include <string>

#include "soltes/graph.hpp"

namespace soltes {

// Deterministic generators. Every generator fixes its vertex labels so tests
// can address specific vertices.

Graph cycle(Vertex n);     // 0..n-1 around the cycle, n >= 3
Graph path(Vertex n);      // 0..n-1 along the path, n >= 1
Graph complete(Vertex n);  // n >= 1

// Two cycles of length L = 2k+4 (outer 0..L-1, inner L..2L-1) joined by the
// perfect matching i ~ L+i, with both diagonals added on the squares at
// i = 0 and i = k+2 (each square becomes a K4). Order 2L.
Graph circular_ladder_k4(int k);

// Parts for n = 2k+2 triangles per side: A0 = [0,k), A3 = [k,2k),
// B1 = [2k, 2k+3n) and B2 = [2k+3n, 2k+6n) each split into n triangles of
// consecutive ids. A0 x B1 and A3 x B2 complete bipartite; every triangle
// pair (T1 in B1, T2 in B2) carries the 6-cycle x0-y0-x1-y1-x2-y2. Order 14k+12.
Graph triangle_bipartite(int k);

// 12 vertices: C8 (0..7) with apex vertices 8..11 on the alternating
// matching {0,1},{2,3},{4,5},{6,7}.
Graph fig4_left();

// 12 vertices: C9 (0..8) with pendants 9,10,11 on cycle vertices 0,3,6.
Graph fig4_right();

// 60 vertices: C40 on ids 0..39 (cycle label i+1), chords label i ~ i+11 for
// i = 1 mod 4 and i ~ i+9 for i = 2 mod 4 (labels mod 40), apex vertices
// 40..59 on the cycle edges starting at even labels.
Graph fig5_60();

// 69 vertices: i in Z23 with o_i = i, n_i = 23+i, m_i = 46+i; crossed prism
// edges o_i ~ n_{i+1} and n_i ~ o_{i+1}, subdivided spokes o_i ~ m_i ~ n_i.
Graph fig6_69();

enum class Family {
    cycle,
    path,
    complete,
    circular_ladder_k4,
    triangle_bipartite,
    fig4_left,
    fig4_right,
    fig5_60,
    fig6_69,
};

struct FamilySpec {
    Family family = Family::cycle;
    int param = 0;  // n for cycle/path/complete, k for the parametric families
};

Graph build_family(const FamilySpec& spec);

// CLI names: cycle, path, complete, circular-ladder-k4, triangle-bipartite,
// fig4-left, fig4-right, fig5-60, fig6-69.
std::optional<Family> parse_family(const std::string& name);
const char* family_name(Family f);
bool family_takes_n(Family f);
bool family_takes_k(Family f);

}  // namespace soltes

#endif  // SOLTES_FAMILIES_HPP
