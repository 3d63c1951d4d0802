#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "soltes/codec.hpp"
#include "soltes/families.hpp"
#include "soltes/random.hpp"
#include "support.hpp"

using namespace soltes;
using testsupport::error_code_of;

TEST_CASE("graph6 fixed vectors (checked against the independent encoder)") {
    CHECK(oracle::graph6_encode(4, complete(4).edge_pairs()) == "C~");
    CHECK(oracle::graph6_encode(4, path(4).edge_pairs()) == "Ch");
    CHECK(oracle::graph6_encode(5, cycle(5).edge_pairs()) == "Dhc");

    CHECK(decode_graph6("C~") == complete(4));
    CHECK(decode_graph6("Ch") == path(4));
    CHECK(decode_graph6("Dhc") == cycle(5));

    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(path(4)) == "Ch");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + int(rng() % 50);
        Graph g = gnp_random_graph(n, 0.5, rng);
        Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
        CHECK(encode_graph6(g) == oracle::graph6_encode(n, g.edge_pairs()));
    }
}

TEST_CASE("graph6 extended header for n >= 63") {
    for (int n : {63, 100, 700}) {
        std::mt19937_64 rng(n);
        Graph g = gnp_random_graph(n, 0.05, rng);
        std::string line = encode_graph6(g);
        CHECK(static_cast<unsigned char>(line[0]) == 126);
        CHECK(decode_graph6(line) == g);
    }
    CHECK(decode_graph6(encode_graph6(path(63))) == path(63));
}

TEST_CASE("graph6 small orders") {
    CHECK(encode_graph6(Graph::from_edge_list(0, {})) == "?");
    CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
    CHECK(decode_graph6("?").vertex_count() == 0);
    CHECK(decode_graph6("@").vertex_count() == 1);
    CHECK(decode_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
}

TEST_CASE("graph6 decode errors") {
    CHECK(error_code_of([] { decode_graph6(""); }) == Errc::malformed_header);
    CHECK(error_code_of([] { decode_graph6("D"); }) == Errc::malformed_header);     // body missing
    CHECK(error_code_of([] { decode_graph6("C~~"); }) == Errc::trailing_garbage);   // extra byte
    CHECK(error_code_of([] { decode_graph6("Dhd"); }) == Errc::non_canonical_padding);
    CHECK(error_code_of([] { decode_graph6("C\x20"); }) == Errc::malformed_header);  // byte < 63
    CHECK(error_code_of([] { decode_graph6("C\x7f"); }) == Errc::malformed_header);      // byte > 126
    CHECK(error_code_of([] { decode_graph6("~??C`"); }) == Errc::malformed_header);  // extended n<=62
    CHECK(error_code_of([] { decode_graph6("~~??????"); }) == Errc::malformed_header);
    // a set padding bit in an otherwise valid line
    std::string c5 = "Dhc";
    c5.back() = char(c5.back() | 1);
    CHECK(error_code_of([&] { decode_graph6(c5); }) == Errc::non_canonical_padding);
}

TEST_CASE("edge-list text format") {
    Graph g = fig4_right();
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);

    std::istringstream commented(
        "# a triangle\n"
        "3 3  # header\n"
        "0 1\n"
        "\n"
        "1 2  # edge\n"
        "0 2\n");
    CHECK(read_edge_list(commented) == complete(3));

    std::istringstream bad_header("x y\n");
    CHECK(error_code_of([&] { read_edge_list(bad_header); }) == Errc::decode_error);
    std::istringstream missing_edges("3 3\n0 1\n");
    CHECK(error_code_of([&] { read_edge_list(missing_edges); }) == Errc::decode_error);
    std::istringstream self_loop("2 1\n1 1\n");
    CHECK(error_code_of([&] { read_edge_list(self_loop); }) == Errc::self_loop);
}
