#include "soltes/codec.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace soltes {

namespace {

constexpr std::int64_t kMaxGraph6Order = 258047;

int group_at(std::string_view line, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
        fail(Errc::malformed_header, "byte " + std::to_string(int(c)) + " outside 63..126 at position " +
                                         std::to_string(i));
    return c - 63;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) fail(Errc::malformed_header, "empty line");

    std::int64_t n;
    std::size_t pos;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            fail(Errc::malformed_header, "8-byte order header not supported (n > 258047)");
        if (line.size() < 4) fail(Errc::malformed_header, "truncated extended order header");
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = n * 64 + group_at(line, i);
        if (n <= 62) fail(Errc::malformed_header, "extended header used for n <= 62");
        pos = 4;
    } else {
        n = group_at(line, 0);
        pos = 1;
    }

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() < pos + body) fail(Errc::malformed_header, "line shorter than the bit count requires");
    if (line.size() > pos + body) fail(Errc::trailing_garbage, std::to_string(line.size() - pos - body) +
                                                                   " extra byte(s) after the bit body");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::int64_t bit = 0;
    int group = 0;
    for (Vertex col = 1; col < n; ++col)
        for (Vertex row = 0; row < col; ++row, ++bit) {
            if (bit % 6 == 0) group = group_at(line, pos + static_cast<std::size_t>(bit / 6));
            if (group & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
        }
    if (bits % 6 != 0) {
        int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (body > 0 && (group_at(line, pos + body - 1) & pad_mask) != 0)
            fail(Errc::non_canonical_padding, "padding bits are not zero");
    }
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n > kMaxGraph6Order) fail(Errc::bad_parameter, "n > 258047 not representable");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (Vertex col = 1; col < n; ++col) {
        auto nb = g.neighbors(col);
        std::size_t at = 0;
        for (Vertex row = 0; row < col; ++row) {
            while (at < nb.size() && nb[at] < row) ++at;
            int bit = (at < nb.size() && nb[at] == row) ? 1 : 0;
            group = (group << 1) | bit;
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph read_edge_list(std::istream& in) {
    auto next_line = [&](std::string& payload) -> bool {
        std::string raw;
        while (std::getline(in, raw)) {
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream probe(raw);
            std::string token;
            if (probe >> token) {
                payload = raw;
                return true;
            }
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) fail(Errc::decode_error, "missing 'n m' header line");
    std::istringstream header(line);
    std::int64_t n, m;
    if (!(header >> n >> m) || n < 0 || m < 0) fail(Errc::decode_error, "bad 'n m' header: " + line);
    std::string extra;
    if (header >> extra) fail(Errc::decode_error, "trailing tokens in header: " + line);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_line(line)) fail(Errc::decode_error, "expected " + std::to_string(m) + " edges, got " +
                                                           std::to_string(i));
        std::istringstream row(line);
        Vertex u, v;
        if (!(row >> u >> v)) fail(Errc::decode_error, "bad edge line: " + line);
        if (row >> extra) fail(Errc::decode_error, "trailing tokens in edge line: " + line);
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edge_pairs()) out << u << ' ' << v << '\n';
}

}  // namespace soltes
