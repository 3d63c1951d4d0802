#include <doctest.h>

#include <random>

#include "soltes/families.hpp"
#include "soltes/graph.hpp"
#include "soltes/random.hpp"
#include "support.hpp"

using namespace soltes;
using testsupport::error_code_of;

TEST_CASE("from_edge_list builds and validates") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.degree(0) == 2);
    CHECK(k3.has_edge(2, 0));
    CHECK_FALSE(k3.has_edge(0, 0));

    CHECK(error_code_of([] { Graph::from_edge_list(4, {{0, 1}, {1, 1}}); }) == Errc::self_loop);
    CHECK(error_code_of([] { Graph::from_edge_list(2, {{0, 1}, {1, 0}}); }) == Errc::duplicate_edge);
    CHECK(error_code_of([] { Graph::from_edge_list(3, {{0, 1}, {0, 1}}); }) == Errc::duplicate_edge);
    CHECK(error_code_of([] { Graph::from_edge_list(2, {{0, 5}}); }) == Errc::vertex_out_of_range);
    CHECK(error_code_of([] { Graph::from_edge_list(2, {{-1, 0}}); }) == Errc::vertex_out_of_range);
}

TEST_CASE("edge list accessors are sorted and consistent") {
    Graph g = Graph::from_edge_list(5, {{3, 1}, {0, 4}, {2, 0}, {1, 0}});
    auto edges = g.edges();
    REQUIRE(edges.size() == 4);
    CHECK(edges[0] == EdgeRef(0, 1));
    CHECK(edges[1] == EdgeRef(0, 2));
    CHECK(edges[2] == EdgeRef(0, 4));
    CHECK(edges[3] == EdgeRef(1, 3));
    std::int64_t degsum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
}

TEST_CASE("delete_vertex compacts ids and keeps the order map") {
    SUBCASE("K4 minus any vertex is K3") {
        Graph k4 = complete(4);
        for (Vertex v = 0; v < 4; ++v) {
            auto del = delete_vertex(k4, v);
            CHECK(del.graph == complete(3));
            CHECK(del.graph.edge_count() == k4.edge_count() - k4.degree(v));
        }
    }
    SUBCASE("C11 minus a vertex is P10") {
        Graph c11 = cycle(11);
        CHECK(delete_vertex(c11, 0).graph == path(10));
        for (Vertex v = 0; v < 11; ++v) {
            auto del = delete_vertex(c11, v);
            CHECK(testsupport::is_path_shaped(del.graph));
            CHECK(del.graph.vertex_count() == 10);
        }
    }
    SUBCASE("star minus center leaves isolated vertices") {
        Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
        auto del = delete_vertex(star, 0);
        CHECK(del.graph.vertex_count() == 3);
        CHECK(del.graph.edge_count() == 0);
        CHECK_FALSE(is_connected(del.graph));
    }
    SUBCASE("index map") {
        auto del = delete_vertex(complete(5), 2);
        CHECK(del.removed == 2);
        CHECK(del.to_original == std::vector<Vertex>{0, 1, 3, 4});
    }
    CHECK(error_code_of([] { delete_vertex(complete(3), 7); }) == Errc::vertex_out_of_range);
}

TEST_CASE("deletion removes exactly deg(v) edges on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Graph g = gnp_random_graph(2 + int(rng() % 30), 0.3, rng);
        Vertex v = Vertex(rng() % g.vertex_count());
        CHECK(delete_vertex(g, v).graph.edge_count() == g.edge_count() - g.degree(v));
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle(5)));
    CHECK(is_connected(delete_vertex(complete(4), 1).graph));
    CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph::from_edge_list(1, {})));
    CHECK(is_connected(Graph::from_edge_list(0, {})));
    CHECK_FALSE(is_connected(Graph::from_edge_list(2, {})));
}
