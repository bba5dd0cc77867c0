#include <catch2/catch_amalgamated.hpp>

#include "gecon/generators.hpp"
#include "gecon/partition.hpp"

using namespace gecon;

TEST_CASE("partition iteration covers every multi-block partition once") {
    // Bell(4) = 15, minus the single-block partition
    int count = 0;
    for_each_partition(4, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 14);

    count = 0;
    for_each_partition(6, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 203 - 1);
}

TEST_CASE("partition bound on K_4 matches a by-hand sweep of the 14 partitions") {
    // all-singletons gives floor(6/3) = 2; every coarser partition is weaker
    const Graph k4 = complete(4);
    int by_hand = 1000;
    for_each_partition(4, [&](const std::vector<int>& block_of) {
        int blocks = 0, crossing = 0;
        for (int v = 0; v < 4; ++v) blocks = std::max(blocks, block_of[v] + 1);
        for (const Edge& e : k4.edges()) crossing += block_of[e.u] != block_of[e.v];
        by_hand = std::min(by_hand, crossing / (blocks - 1));
    });
    CHECK(by_hand == 2);
    CHECK(nwt_partition_bound(k4) == 2);
}

TEST_CASE("trees and disconnected graphs") {
    CHECK(nwt_partition_bound(path_graph(5)) == 1);
    CHECK(nwt_partition_bound(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 1);
    CHECK(nwt_partition_bound(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(nwt_partition_bound(Graph(1)) == 0);
}

TEST_CASE("known packing numbers") {
    CHECK(nwt_partition_bound(complete(5)) == 2);
    CHECK(nwt_partition_bound(complete(6)) == 3);
    CHECK(nwt_partition_bound(complete_bipartite(3, 3)) == 1);
    CHECK(nwt_partition_bound(harary(8, 4)) == 2);
    CHECK(nwt_partition_bound(cycle(9)) == 1);
}

TEST_CASE("partition cap") {
    CHECK_THROWS_AS(nwt_partition_bound(Graph(11)), UnsupportedSizeError);
}
