#ifndef SOLTES_CODEC_HPP
#define SOLTES_CODEC_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "soltes/graph.hpp"

namespace soltes {

// graph6: one ASCII line per graph. Header is n+63 for n <= 62, or byte 126
// followed by three 6-bit groups (each +63) for 63 <= n <= 258047. The body
// packs the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... into
// 6-bit groups, big-endian, zero-padded, each +63.
Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v" (0-based).
// '#' starts a comment; blank lines are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace soltes

#endif  // SOLTES_CODEC_HPP
