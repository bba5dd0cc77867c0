#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gecon/generators.hpp"
#include "gecon/graph.hpp"
#include "oracles.hpp"

using namespace gecon;

TEST_CASE("graph construction and edge queries") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edges() == EdgeList{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.degree(1) == 2);

    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(63), UnsupportedSizeError);
}

TEST_CASE("complement basics") {
    CHECK(complement(complete(4)).size() == 0);
    CHECK(complement(Graph(4)).size() == 6);

    // P_3 on {0,1,2}: complement is the single edge {0,2}
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(complement(p3).edges() == EdgeList{{0, 2}});

    // C_5 is self-complementary
    CHECK(oracle::brute_isomorphic(cycle(5), complement(cycle(5))));
}

TEST_CASE("complement is an involution and splits the edge count") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        EdgeList edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(complement(complement(g)) == g);
        CHECK(g.size() + complement(g).size() == n * (n - 1) / 2);
    }
}

TEST_CASE("delete_edges") {
    CHECK(delete_edges(complete(4), {{0, 1}}).size() == 5);
    CHECK(delete_edges(complete(5), {}) == complete(5));
    // absent pairs are ignored
    Graph g(4, {{0, 1}});
    CHECK(delete_edges(g, {{2, 3}, {0, 1}}).size() == 0);
}

TEST_CASE("degree_stats") {
    DegreeStats k4 = degree_stats(complete(4));
    CHECK(k4.min_degree == 3);
    CHECK(k4.max_degree == 3);
    CHECK(k4.sequence == std::vector<int>{3, 3, 3, 3});

    DegreeStats k23 = degree_stats(complete_bipartite(2, 3));
    CHECK(k23.min_degree == 2);
    CHECK(k23.max_degree == 3);
    CHECK(k23.sequence == std::vector<int>{3, 3, 2, 2, 2});

    DegreeStats h = degree_stats(harary(8, 4));
    CHECK(h.min_degree == 4);
    CHECK(h.max_degree == 4);

    CHECK_THROWS_AS(degree_stats(Graph(0)), std::invalid_argument);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle(6)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));

    // K_2 plus two isolated vertices
    CHECK(!is_connected(Graph(4, {{0, 1}})));

    // K_{1,n-2} plus an isolated vertex
    const int n = 7;
    EdgeList star;
    for (int v = 1; v < n - 1; ++v) star.emplace_back(0, v);
    CHECK(!is_connected(Graph(n, star)));
}

TEST_CASE("subset iteration is lexicographic") {
    std::vector<std::vector<int>> seen;
    for_each_subset(4, 2, [&](std::uint64_t mask) {
        seen.push_back(mask_to_vertices(mask));
        return true;
    });
    CHECK(seen == std::vector<std::vector<int>>{
                      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
